"""Exhaustive consistency checks of an oracle's state, for instrumented runs.

These are exponential-free but far slower than the oracle itself; use them
on small graphs only.
"""

from __future__ import annotations

from .oracle import Oracle
from .packing import check_chordless, check_covering, check_packing, is_maximal
from .reference import exact_pp

__all__ = ["InvariantViolation", "check_oracle", "check_stage2_log", "subnetwork_size_limit"]


class InvariantViolation(AssertionError):
    pass


def subnetwork_size_limit(p: int) -> int:
    return 20 * p * p


def check_left_packings(orc: Oracle) -> None:
    g, part, p = orc.g, orc.part, orc.p
    for u in part.left():
        if orc.cand_flag[u]:
            continue
        pk = orc.pack(u)
        if not check_packing(pk, g, part, 3):
            raise InvariantViolation(f"Pack({u}) is not a valid (3,L)-packing: {pk}")
        if not check_chordless(pk, g):
            raise InvariantViolation(f"Pack({u}) has a chord: {pk}")
        if not check_covering(pk, g, part):
            raise InvariantViolation(f"Pack({u}) is not covering: {pk}")
        if len(pk) <= p:
            raise InvariantViolation(f"Pack({u}) has only {len(pk)} paths but {u} is not a candidate")


def check_right_packings(orc: Oracle) -> None:
    g, part, p = orc.g, orc.part, orc.p
    for u in part.right():
        pk = orc.pack(u)
        if not check_packing(pk, g, part, 2):
            raise InvariantViolation(f"Pack({u}) is not a valid (2,L)-packing: {pk}")
        if not check_chordless(pk, g):
            raise InvariantViolation(f"Pack({u}) has a chord: {pk}")
        if not is_maximal(pk, g, part, 2):
            raise InvariantViolation(f"Pack({u}) is not maximal: {pk}")
        if len(pk) > p:
            raise InvariantViolation(f"Pack({u}) has {len(pk)} > p paths")


def check_cand(orc: Oracle) -> None:
    g, part, p = orc.g, orc.part, orc.p
    for v in part.left():
        small = exact_pp(g, part, v, 3) <= p
        if small != bool(orc.cand_flag[v]):
            raise InvariantViolation(f"vertex {v}: candidate flag {bool(orc.cand_flag[v])} but small={small}")
    for v in part.right():
        if orc.cand_flag[v]:
            raise InvariantViolation(f"returned vertex {v} is still a candidate")


def check_vias(orc: Oracle) -> None:
    g, part = orc.g, orc.part
    cap = orc.vias.cap
    in_left = part.in_left
    for x in part.right():
        for y in part.left():
            common = {w for w in g.adjset[x] & g.adjset[y] if not in_left[w]}
            stored = orc.vias.lookup(x, y)
            if len(stored) != min(cap, len(common)):
                raise InvariantViolation(
                    f"Vias[{x}][{y}] has {len(stored)} entries, expected {min(cap, len(common))}"
                )
            if not set(stored) <= common or len(set(stored)) != len(stored):
                raise InvariantViolation(f"Vias[{x}][{y}] = {stored} holds invalid entries")


def check_stage2_log(orc: Oracle, start: int = 0) -> None:
    limit = subnetwork_size_limit(orc.p)
    for rec in orc.stage2_log[start:]:
        if rec.sub_vertices > limit:
            raise InvariantViolation(f"subnetwork for {rec.vertex} has {rec.sub_vertices} > {limit} vertices")
        if rec.augmentable_sub != rec.augmentable_full:
            raise InvariantViolation(
                f"subnetwork for {rec.vertex}: augmentable={rec.augmentable_sub}, full network={rec.augmentable_full}"
            )


def check_oracle(orc: Oracle) -> None:
    """Run every state check; raises :class:`InvariantViolation` on the first failure."""
    check_left_packings(orc)
    check_right_packings(orc)
    check_cand(orc)
    check_vias(orc)
    check_stage2_log(orc)
