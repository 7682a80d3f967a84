"""Layered unit-capacity flow networks whose integral flows are chordless packings.

Every vertex except the source has capacity one. A flow is represented by
its set of saturated arcs, which for a packing are exactly the packing's
edges oriented away from the root.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

from .graph import Graph, Partition
from .packing import Packing

__all__ = [
    "FlowNet",
    "apply_path",
    "augment_packing",
    "build_full_network",
    "build_subnetwork",
    "find_augmenting_path",
    "is_augmentable",
    "max_flow_value",
    "packing_arcs",
]

_IN, _OUT = 0, 1


class FlowNet:
    """Directed network with a single source and a set of sink vertices."""

    __slots__ = ("source", "succ", "sinks", "layers")

    def __init__(self, source: int):
        self.source = source
        self.succ: dict[int, set[int]] = {source: set()}
        self.sinks: set[int] = set()
        self.layers: dict[str, set[int]] = {}

    def add_arc(self, a: int, b: int) -> None:
        self.succ.setdefault(a, set()).add(b)
        self.succ.setdefault(b, set())

    def vertices(self) -> set[int]:
        return set(self.succ)

    def arcs(self) -> set[tuple[int, int]]:
        return {(a, b) for a, bs in self.succ.items() for b in bs}

    def num_vertices(self) -> int:
        return len(self.succ)

    def num_arcs(self) -> int:
        return sum(len(bs) for bs in self.succ.values())

    def dump(self) -> str:
        """Arc list, one ``a b`` per line, preceded by source and sink lines."""
        lines = [f"source {self.source}", "sinks " + " ".join(map(str, sorted(self.sinks)))]
        lines.extend(f"{a} {b}" for a, b in sorted(self.arcs()))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"FlowNet(source={self.source}, vertices={self.num_vertices()}, arcs={self.num_arcs()})"


def build_full_network(g: Graph, part: Partition, u: int, depth: int = 3) -> FlowNet:
    """The packing flow network of ``u``: a BFS from ``u`` that stops at
    L-vertices, truncated after ``depth`` steps (2 or 3)."""
    if depth not in (2, 3):
        raise ValueError("depth must be 2 or 3")
    in_left = part.in_left
    adj = g.adj
    net = FlowNet(u)
    seen = {u}
    t1, s1 = [], []
    for w in adj[u]:
        seen.add(w)
        (t1 if in_left[w] else s1).append(w)
    t2, s2 = [], []
    for w in s1:
        for x in adj[w]:
            if x not in seen:
                seen.add(x)
                (t2 if in_left[x] else s2).append(x)
    t3 = []
    if depth == 3:
        for x in s2:
            for y in adj[x]:
                if y not in seen and in_left[y]:
                    seen.add(y)
                    t3.append(y)
    else:
        s2 = []

    for w in t1 + s1:
        net.add_arc(u, w)
    s2set, t2set, t3set = set(s2), set(t2), set(t3)
    for w in s1:
        for x in adj[w]:
            if x in s2set or x in t2set:
                net.add_arc(w, x)
    for x in s2:
        for y in adj[x]:
            if y in t2set or y in t3set:
                net.add_arc(x, y)
    net.sinks = set(t1) | t2set | t3set
    net.layers = {"T1": set(t1), "S1": set(s1), "S2": s2set, "T2": t2set, "T3": t3set}
    return net


def build_subnetwork(g: Graph, part: Partition, vias, u: int, pack: Packing, targets: Iterable[int]) -> FlowNet:
    """Small network around a maximal packing of ``u`` that admits an
    augmenting path iff the full packing network does.

    ``targets`` are the targets of ``u`` that are not its L-neighbours.
    Direct paths of ``pack`` go to L-neighbours, are already optimal and are
    left out of the network. Each search picks the lowest-id witness.
    """
    adjset = g.adjset
    nbrs_u = adjset[u]
    nl, nr = part.nl, part.nr
    targets = set(targets)
    vh = pack.vertices()
    net = FlowNet(u)

    s1h: set[int] = set()
    s2h: set[int] = set()
    for path in pack.paths.values():
        if len(path) < 3:
            continue
        s1h.add(path[1])
        if len(path) == 4:
            s2h.add(path[2])
        for a, b in zip(path, path[1:]):
            net.add_arc(a, b)
    t23h = vh & targets
    s1_sorted, s2_sorted, t23_sorted = sorted(s1h), sorted(s2h), sorted(t23h)
    fresh_r = [x for x in sorted(nr[u]) if x not in vh]

    # edges of g between the packed layers
    for a in s1_sorted:
        for b in s2_sorted + t23_sorted:
            if b in adjset[a]:
                net.add_arc(a, b)
    for a in s2_sorted:
        for b in t23_sorted:
            if b in adjset[a]:
                net.add_arc(a, b)

    # a fresh first hop into each packed second or third layer vertex
    for y in sorted(s2h | t23h):
        for x in fresh_r:
            if y in adjset[x]:
                net.add_arc(u, x)
                net.add_arc(x, y)
                break

    # a fresh middle vertex between each packed first hop and packed target
    for y in t23_sorted:
        for x in s1_sorted:
            for w in vias.lookup(x, y):
                if w not in vh and w not in nbrs_u:
                    net.add_arc(x, w)
                    net.add_arc(w, y)
                    break

    # a fully fresh length-3 route into each packed target
    for y in t23_sorted:
        found = False
        for w in fresh_r:
            for x in vias.lookup(w, y):
                if x not in vh and x not in nbrs_u:
                    net.add_arc(u, w)
                    net.add_arc(w, x)
                    net.add_arc(x, y)
                    found = True
                    break
            if found:
                break

    # a fresh target hanging off each packed R-vertex
    outside = sorted(targets - vh)
    for w in sorted(s1h | s2h):
        free = [y for y in nl[w] if y not in vh]
        if free:
            net.add_arc(w, min(free))
            continue
        if w in s2h:
            continue
        found = False
        for y in outside:
            for x in vias.lookup(w, y):
                if x not in vh and x not in nbrs_u:
                    net.add_arc(w, x)
                    net.add_arc(x, y)
                    found = True
                    break
            if found:
                break

    in_left = part.in_left
    net.sinks = {x for x in net.succ if x != u and in_left[x]}
    net.layers = {"S1": s1h, "S2": s2h, "T23": t23h}
    return net


def packing_arcs(pk: Packing) -> set[tuple[int, int]]:
    return pk.arcs()


def find_augmenting_path(net: FlowNet, flow: Iterable[tuple[int, int]]) -> list[int] | None:
    """Shortest augmenting path from the source to an unsaturated sink.

    Runs BFS on the residual network of the vertex-split graph, where each
    vertex ``x`` becomes ``x_in -> x_out``. Returns the original-vertex
    sequence (split arcs collapsed) or None when the flow is maximum.
    """
    flow = set(flow)
    src = net.source
    pred_flow: dict[int, int] = {}
    for a, b in flow:
        pred_flow[b] = a
    succ = net.succ
    sinks = net.sinks

    start = (src, _OUT)
    parent: dict[tuple[int, int], tuple[int, int] | None] = {start: None}
    queue = deque([start])
    end = None
    while queue:
        state = queue.popleft()
        x, side = state
        if side == _OUT:
            nxt = [(b, _IN) for b in sorted(succ.get(x, ())) if (x, b) not in flow]
            if x != src and x in pred_flow:
                nxt.append((x, _IN))
        else:
            if x in pred_flow:
                a = pred_flow[x]
                nxt = [] if a == src else [(a, _OUT)]
            elif x in sinks:
                end = state
                break
            else:
                nxt = [(x, _OUT)]
        for s in nxt:
            if s not in parent:
                parent[s] = state
                queue.append(s)
    if end is None:
        return None
    states = []
    s = end
    while s is not None:
        states.append(s)
        s = parent[s]
    states.reverse()
    path = [states[0][0]]
    for x, _ in states[1:]:
        if x != path[-1]:
            path.append(x)
    return path


def apply_path(flow: Iterable[tuple[int, int]], path: Sequence[int]) -> set[tuple[int, int]]:
    """Return ``flow`` augmented along ``path``: reverse steps cancel flow arcs."""
    out = set(flow)
    for a, b in zip(path, path[1:]):
        if (b, a) in out:
            out.remove((b, a))
        else:
            out.add((a, b))
    return out


def _paths_from_arcs(root: int, arcs: set[tuple[int, int]]) -> list[tuple[int, ...]]:
    nxt: dict[int, int] = {}
    firsts = []
    for a, b in arcs:
        if a == root:
            firsts.append(b)
            continue
        if a in nxt:
            raise RuntimeError(f"vertex {a} has two outgoing flow arcs")
        nxt[a] = b
    paths = []
    used = 0
    for f in sorted(firsts):
        path = [root, f]
        while path[-1] in nxt:
            path.append(nxt[path[-1]])
            if len(path) > 4:
                raise RuntimeError(f"flow path from {root} is longer than three edges")
        used += len(path) - 2
        paths.append(tuple(path))
    if used != len(nxt):
        raise RuntimeError("flow contains arcs not reachable from the root")
    return paths


def augment_packing(pack: Packing, path: Sequence[int]) -> Packing:
    """Packing obtained from ``pack`` by augmenting its flow along ``path``."""
    arcs = apply_path(pack.arcs(), path)
    try:
        return Packing(pack.root, _paths_from_arcs(pack.root, arcs))
    except ValueError as exc:
        raise RuntimeError(f"augmentation produced an invalid packing: {exc}") from exc


def is_augmentable(net: FlowNet, flow: Iterable[tuple[int, int]]) -> bool:
    return find_augmenting_path(net, flow) is not None


def max_flow_value(net: FlowNet) -> int:
    """Maximum flow value, by repeated shortest augmentation from zero."""
    flow: set[tuple[int, int]] = set()
    value = 0
    while True:
        path = find_augmenting_path(net, flow)
        if path is None:
            return value
        flow = apply_path(flow, path)
        value += 1
