"""Slow exact computation of packing numbers and r-admissibility for r <= 3.

Nothing here touches the oracle's incremental state. Packing numbers come
either from max flow on the full packing network or, for tiny graphs, from
an exhaustive search over families of disjoint paths.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .flow import build_full_network, max_flow_value
from .graph import Graph, Partition

__all__ = [
    "ExactResult",
    "enumerate_pp",
    "exact_adm",
    "exact_pp",
    "reach_targets",
    "verify_ordering",
]

METHODS = ("flow", "enumerate")


@dataclass
class ExactResult:
    value: int
    ordering: list[int]
    pps: list[int]


def _as_partition(g: Graph, left) -> Partition:
    if isinstance(left, Partition):
        return left
    return Partition(g, left)


def _check_r(r: int) -> None:
    if r not in (1, 2, 3):
        raise ValueError(f"unsupported radius r={r}; only 1, 2 and 3 are available")


def exact_pp(g: Graph, left, v: int, r: int) -> int:
    """Size of a largest (r, L)-admissible packing rooted at ``v``.

    ``left`` is either a :class:`Partition` or an iterable of L-vertices.
    """
    _check_r(r)
    part = _as_partition(g, left)
    if r == 1:
        return len(part.nl[v])
    return max_flow_value(build_full_network(g, part, v, depth=r))


def _paths_by_first_hop(g: Graph, part: Partition, v: int, r: int) -> list[list[frozenset[int]]]:
    """For each neighbour of ``v``, the vertex sets (root excluded) of the
    admissible paths starting through it."""
    in_left = part.in_left
    adj = g.adj
    groups = []
    for w in adj[v]:
        options = []
        if in_left[w]:
            options.append(frozenset((w,)))
        elif r >= 2:
            for x in adj[w]:
                if x == v:
                    continue
                if in_left[x]:
                    options.append(frozenset((w, x)))
                elif r >= 3:
                    for y in adj[x]:
                        if y != v and y != w and in_left[y]:
                            options.append(frozenset((w, x, y)))
        if options:
            groups.append(options)
    return groups


def enumerate_pp(g: Graph, left, v: int, r: int) -> int:
    """Exhaustive packing number: branch over which path (if any) uses each first hop."""
    _check_r(r)
    part = _as_partition(g, left)
    groups = _paths_by_first_hop(g, part, v, r)
    best = 0

    def search(i: int, used: frozenset[int], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + len(groups) - i <= best:
            return
        for option in groups[i]:
            if not (option & used):
                search(i + 1, used | option, size + 1)
        search(i + 1, used, size)

    search(0, frozenset(), 0)
    return best


def reach_targets(g: Graph, part: Partition, v: int, r: int) -> set[int]:
    """L-vertices reachable from ``v`` in at most ``r`` steps through R only."""
    in_left = part.in_left
    adj = g.adj
    seen = {v}
    frontier = [v]
    found = set()
    for _ in range(r):
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y in seen:
                    continue
                seen.add(y)
                if in_left[y]:
                    found.add(y)
                else:
                    nxt.append(y)
        frontier = nxt
    return found


def _pp_function(method: str):
    if method == "flow":
        return exact_pp
    if method == "enumerate":
        return enumerate_pp
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def exact_adm(g: Graph, r: int, method: str = "flow") -> ExactResult:
    """r-admissibility by greedy elimination of a minimum packing-number vertex.

    Removing a vertex of minimum packing number is always safe, so the
    largest value met along the way is the admissibility. Ties go to the
    smallest id. The returned ordering lists the last-removed vertex first.
    """
    _check_r(r)
    pp = _pp_function(method)
    part = Partition(g)
    cache = {v: pp(g, part, v, r) for v in range(g.n)}
    removed, values = [], []
    while cache:
        v = min(cache, key=lambda x: (cache[x], x))
        removed.append(v)
        values.append(cache.pop(v))
        # only vertices that had v as a target can change
        affected = reach_targets(g, part, v, r)
        part.move_to_right(v)
        for u in affected:
            cache[u] = pp(g, part, u, r)
    return ExactResult(max(values, default=0), removed[::-1], values[::-1])


def verify_ordering(g: Graph, ordering: Sequence[int] | Iterable[int], r: int, method: str = "flow") -> int:
    """Admissibility of a given ordering: max packing number of each vertex
    against the vertices up to and including it."""
    _check_r(r)
    ordering = list(ordering)
    if sorted(ordering) != list(range(g.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    pp = _pp_function(method)
    part = Partition(g)
    best = 0
    for v in reversed(ordering):
        best = max(best, pp(g, part, v, r))
        part.move_to_right(v)
    return best
