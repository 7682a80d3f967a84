"""Incremental oracle returning, one at a time, vertices with a small 3-packing.

The oracle keeps a partition of the vertices into a left side L (not yet
returned) and a right side R (returned). ``Cand`` holds exactly the
L-vertices whose largest (3, L)-admissible packing has at most ``p`` paths.
For every other L-vertex a chordless covering packing of size above ``p`` is
maintained; for every R-vertex a chordless maximal (2, L)-packing.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .flow import augment_packing, build_full_network, build_subnetwork, find_augmenting_path
from .graph import Graph, Partition
from .packing import Packing, layered_targets
from .vias import ViasStore

__all__ = ["Counters", "Oracle", "QueryRecord", "Stage2Record"]


@dataclass
class Counters:
    queries: int = 0
    simple: int = 0
    stage1: int = 0
    stage2: int = 0
    augmentations: int = 0
    # per vertex: escalation episodes (one stage-1 call each) and stage-2 calls
    escalations: dict[int, int] = field(default_factory=dict)
    stage2_calls: dict[int, int] = field(default_factory=dict)

    def max_escalations(self) -> int:
        return max(self.escalations.values(), default=0)

    def max_stage_calls(self) -> int:
        """Largest per-vertex total of stage-1 and stage-2 calls."""
        s2 = self.stage2_calls
        return max((e + s2.get(u, 0) for u, e in self.escalations.items()), default=0)

    def as_dict(self) -> dict:
        return {
            "queries": self.queries,
            "simple": self.simple,
            "stage1": self.stage1,
            "stage2": self.stage2,
            "augmentations": self.augmentations,
            "max_escalations": self.max_escalations(),
            "max_stage_calls": self.max_stage_calls(),
        }


@dataclass
class QueryRecord:
    vertex: int
    cand_size: int
    simple: int
    stage1: int
    stage2: int
    augmentations: int


@dataclass
class Stage2Record:
    vertex: int
    sub_vertices: int
    sub_arcs: int
    augmentable_sub: bool
    augmentable_full: bool


class Oracle:
    """Oracle state for one graph and one budget ``p``.

    With ``instrument=True`` the oracle records a per-query trace, compares
    every stage-2 subnetwork against the full network and logs the potential
    of each vertex when it first needs escalation.
    """

    def __init__(self, g: Graph, p: int, instrument: bool = False):
        if p < 0:
            raise ValueError("p must be non-negative")
        self.g = g
        self.p = p
        self.part = Partition(g)
        self.vias = ViasStore(g.n, p)
        self.packs: list[Packing | None] = [None] * g.n
        self.cand_flag = bytearray(g.n)
        self.cand_heap: list[int] = []
        for v in range(g.n):
            if len(g.adj[v]) <= p:
                self.cand_flag[v] = 1
                self.cand_heap.append(v)
        heapq.heapify(self.cand_heap)
        self.emitted: list[int] = []
        self.counters = Counters()
        self.instrument = instrument
        self.trace: list[QueryRecord] = []
        self.stage2_log: list[Stage2Record] = []
        self.potential_log: list[tuple[int, int]] = []

    # -- public queries ---------------------------------------------------

    def cand(self) -> list[int]:
        return [v for v in range(self.g.n) if self.cand_flag[v]]

    def query(self) -> int | None:
        """Return and remove the smallest candidate, or None if there is none."""
        if not self.cand_heap:
            return None
        v = heapq.heappop(self.cand_heap)
        self.cand_flag[v] = 0
        c = self.counters
        c.queries += 1
        before = (c.simple, c.stage1, c.stage2, c.augmentations)

        targets = self._query_targets(v)
        self.part.move_to_right(v)
        self.vias.on_move(self.g, self.part, v)
        self.update_2_packings(v, targets)
        cand_flag = self.cand_flag
        for u in sorted(targets):
            if not cand_flag[u]:
                self._update_left(u, v)
        self.emitted.append(v)

        if self.instrument:
            self.trace.append(
                QueryRecord(
                    v,
                    len(self.cand_heap),
                    c.simple - before[0],
                    c.stage1 - before[1],
                    c.stage2 - before[2],
                    c.augmentations - before[3],
                )
            )
        return v

    def pack(self, u: int) -> Packing:
        """Current packing of ``u``; R-packings are cleaned of stale paths first."""
        if self.part.in_left[u]:
            return self._left_pack(u)
        return self._right_pack(u)

    def collect_targets(self, u: int) -> set[int]:
        """Targets of ``u`` in L, read off its covering packing (``u`` in L, not in Cand)."""
        nl = self.part.nl
        in_left = self.part.in_left
        found = set(nl[u])
        for path in self._left_pack(u).paths.values():
            for w in path[1:-1]:
                found |= nl[w]
            first = path[1]
            if not in_left[first]:
                for x in self._right_pack(first).first_hops():
                    found |= nl[x]
        found.discard(u)
        return found

    def potential(self, u: int) -> int:
        """Weighted count of targets by distance: p^2 per 1-target, p per 2-target, 1 per 3-target."""
        t1, t2, t3 = layered_targets(self.g, self.part, u)
        p = self.p
        return len(t1) * p * p + len(t2) * p + len(t3)

    # -- packings ---------------------------------------------------------

    def _left_pack(self, u: int) -> Packing:
        pk = self.packs[u]
        if pk is None:
            # first access happens when the first neighbour of u leaves L
            pk = self.packs[u] = Packing.star(u, self.g.adj[u])
        return pk

    def _right_pack(self, w: int) -> Packing:
        pk = self.packs[w]
        in_left = self.part.in_left
        stale = [end for end in pk.paths if not in_left[end]]
        if stale:
            nl = self.part.nl
            for end in sorted(stale):
                path = pk.remove_path_through(end)
                first = path[1]
                for y in sorted(nl[first]):
                    if y not in pk:
                        pk.add_path((w, first, y))
                        break
        return pk

    def _query_targets(self, v: int) -> set[int]:
        # Pack(v) stopped being maintained when v entered Cand, so targets are
        # gathered through the R-neighbours and their maximal 2-packings.
        nl, nr = self.part.nl, self.part.nr
        found = set(nl[v])
        for w in nr[v]:
            found |= nl[w]
            for x in self._right_pack(w).first_hops():
                found |= nl[x]
        found.discard(v)
        return found

    def update_2_packings(self, v: int, targets: set[int]) -> None:
        """Repair the 2-packings of R-neighbours of ``v`` and build a maximal one for ``v``."""
        for w in sorted(self.part.nr[v]):
            self._right_pack(w)
        adj_v = self.g.adjset[v]
        pk = Packing(v)
        lookup = self.vias.lookup
        for y in sorted(targets):
            if y in adj_v:
                pk.add_path((v, y))
                continue
            for x in lookup(v, y):
                if x not in pk:
                    pk.add_path((v, x, y))
                    break
        self.packs[v] = pk

    def _update_left(self, u: int, v: int) -> None:
        p = self.p
        pk = self._left_pack(u)
        self.simple_update(u, v)
        if len(pk) != p:
            return
        c = self.counters
        c.escalations[u] = c.escalations.get(u, 0) + 1
        if self.instrument:
            self.potential_log.append((u, self.potential(u)))
        self.stage1_update(u)
        pk = self.packs[u]
        if len(pk) == p:
            self.stage2_update(u)
            pk = self.packs[u]
        if len(pk) == p:
            self.cand_flag[u] = 1
            heapq.heappush(self.cand_heap, u)

    def simple_update(self, u: int, v: int) -> None:
        """Restore covering and chordlessness of Pack(u) after ``v`` left L."""
        self.counters.simple += 1
        pk = self.packs[u]
        if v in pk.paths:
            path = pk.remove_path_through(v)
            if self._cover_via(u, pk, path[1]):
                return
        if v in self.g.adjset[u] or v in pk:
            return
        # paths u-x-v-y through the freshly moved v
        nl = self.part.nl
        lookup = self.vias.lookup
        for y in sorted(nl[v]):
            if y in pk:
                continue
            for x in lookup(v, u):
                if x not in pk:
                    pk.add_path((u, x, v, y))
                    return
            return

    def _cover_via(self, u: int, pk: Packing, w: int) -> bool:
        """Try to re-cover targets behind ``w`` after its path was dropped.

        Returns True once ``w`` itself is back in the packing.
        """
        nl = self.part.nl
        for y in sorted(nl[w]):
            if y not in pk:
                pk.add_path((u, w, y))
                return True
        adj_u = self.g.adjset[u]
        for x in self._right_pack(w).first_hops():
            if x in pk:
                continue
            for y in sorted(nl[x]):
                if y in pk:
                    continue
                if x in adj_u:
                    pk.add_path((u, x, y))
                    break
                pk.add_path((u, w, x, y))
                return True
        return False

    def stage1_update(self, u: int) -> None:
        """Add one path that is disjoint from Pack(u), if any exists."""
        self.counters.stage1 += 1
        pk = self.packs[u]
        nl, nr = self.part.nl, self.part.nr
        far = sorted(y for y in self.collect_targets(u) - nl[u] if y not in pk)
        if not far:
            return
        adj_u = self.g.adjset[u]
        adjset = self.g.adjset
        lookup = self.vias.lookup
        for w in sorted(nr[u]):
            if w in pk:
                continue
            adj_w = adjset[w]
            for y in far:
                if y in adj_w:
                    pk.add_path((u, w, y))
                    return
                for x in lookup(w, y):
                    if x in pk:
                        continue
                    if x in adj_u:
                        pk.add_path((u, x, y))
                    else:
                        pk.add_path((u, w, x, y))
                    return

    def stage2_update(self, u: int) -> None:
        """Try to grow the maximal Pack(u) by one augmenting path in a small network."""
        c = self.counters
        c.stage2 += 1
        c.stage2_calls[u] = c.stage2_calls.get(u, 0) + 1
        pk = self.packs[u]
        far = self.collect_targets(u) - self.part.nl[u]
        net = build_subnetwork(self.g, self.part, self.vias, u, pk, far)
        arcs = pk.arcs()
        path = find_augmenting_path(net, arcs)
        if self.instrument:
            full = build_full_network(self.g, self.part, u)
            self.stage2_log.append(
                Stage2Record(
                    u,
                    net.num_vertices(),
                    net.num_arcs(),
                    path is not None,
                    find_augmenting_path(full, arcs) is not None,
                )
            )
        if path is not None:
            self.packs[u] = augment_packing(pk, path)
            c.augmentations += 1
