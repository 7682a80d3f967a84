"""Store of common right-side neighbours between R-vertices and L-vertices."""

from __future__ import annotations

from .graph import Graph, Partition

__all__ = ["ViasStore"]

_EMPTY: tuple[int, ...] = ()


class ViasStore:
    """``table[x][y]`` lists up to ``2p + 1`` vertices of N(x) ∩ N(y) ∩ R.

    Entries are appended when a vertex moves to R and never deleted; keys
    whose target later left L go stale and callers only ask about L-targets.
    """

    __slots__ = ("p", "cap", "table")

    def __init__(self, n: int, p: int):
        self.p = p
        self.cap = 2 * p + 1
        self.table: list[dict[int, list[int]] | None] = [None] * n

    def on_move(self, g: Graph, part: Partition, v: int) -> None:
        """Record the vias created by ``v`` having just moved from L to R."""
        cap = self.cap
        table = self.table
        nl = part.nl
        own: dict[int, list[int]] = {}
        table[v] = own
        nl_v = sorted(nl[v])
        for x in sorted(part.nr[v]):
            tx = table[x]
            if tx is None:
                tx = table[x] = {}
            # v now connects x with each of its own L-neighbours
            for y in nl_v:
                lst = tx.get(y)
                if lst is None:
                    tx[y] = [v]
                elif len(lst) < cap:
                    lst.append(v)
            # x connects v with each of x's L-neighbours; the cap is per target
            for y in sorted(nl[x]):
                lst = own.get(y)
                if lst is None:
                    own[y] = [x]
                elif len(lst) < cap:
                    lst.append(x)

    def lookup(self, x: int, y: int):
        tx = self.table[x]
        if tx is None:
            return _EMPTY
        return tx.get(y, _EMPTY)

    def keys(self, x: int) -> list[int]:
        tx = self.table[x]
        return sorted(tx) if tx else []

    def size(self) -> int:
        """Total number of stored via entries."""
        return sum(len(lst) for tx in self.table if tx for lst in tx.values())
