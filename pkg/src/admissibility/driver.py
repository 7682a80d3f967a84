"""Decide adm_3(G) <= p and compute adm_3(G) exactly."""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field

from .graph import Graph, degeneracy
from .oracle import Oracle

__all__ = ["Decision", "compute_potential", "compute_value", "decide", "lower_bound", "peak_memory_bytes"]


@dataclass
class Decision:
    p: int
    answer: bool
    ordering: list[int] | None
    stats: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.answer


def peak_memory_bytes() -> int:
    """Peak resident set size of this process, or 0 if unavailable."""
    try:
        import resource
    except ImportError:
        return 0
    rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    # Linux reports KiB, macOS bytes
    return rss if sys.platform == "darwin" else rss * 1024


def decide(g: Graph, p: int, instrument: bool = False) -> Decision:
    """Return YES with an ordering of 3-admissibility at most ``p``, or NO.

    With ``instrument=True`` every oracle state is checked exhaustively
    after each query (small graphs only).
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    start = time.perf_counter()
    if g.m > p * g.n:
        # adm3 <= p forces degeneracy <= p, hence m <= p*n
        stats = {"reason": "edge-bound", "queries": 0, "elapsed_s": 0.0, "peak_mem_bytes": peak_memory_bytes()}
        return Decision(p, False, None, stats)
    orc = Oracle(g, p, instrument=instrument)
    check = None
    if instrument:
        from .invariants import check_oracle

        check = check_oracle
        check(orc)
    answer = True
    for _ in range(g.n):
        if orc.query() is None:
            answer = False
            break
        if check is not None:
            check(orc)
    stats = orc.counters.as_dict()
    stats["elapsed_s"] = time.perf_counter() - start
    stats["vias_entries"] = orc.vias.size()
    stats["peak_mem_bytes"] = peak_memory_bytes()
    decision = Decision(p, answer, orc.emitted[::-1] if answer else None, stats)
    if instrument:
        decision.stats["oracle"] = orc
    return decision


def lower_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    d, _ = degeneracy(g)
    return max(d, -(-g.m // g.n))


def compute_value(g: Graph, instrument: bool = False, decisions: list | None = None) -> tuple[int, list[int]]:
    """Exact adm_3 by scanning p upward from a degeneracy-based lower bound.

    Each decision made is appended to ``decisions`` when it is given.
    """
    p = lower_bound(g)
    while True:
        d = decide(g, p, instrument=instrument)
        if decisions is not None:
            decisions.append(d)
        if d.answer:
            return p, d.ordering
        p += 1


def compute_potential(orc: Oracle, u: int) -> int:
    """Potential of an L-vertex ``u`` by exhaustive layered target search."""
    return orc.potential(u)
