"""Acceptance criteria, one test each. Every test appends a PASS/FAIL line
that the terminal summary prints at the end of the run."""

import time

import numpy as np
import pytest

from admissibility import compute_value, decide, verify_ordering
from admissibility.generators import (
    complete_graph,
    cycle_graph,
    gnm_random_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from admissibility.invariants import InvariantViolation, subnetwork_size_limit
from admissibility.reference import exact_adm

from conftest import ACCEPTANCE_LINES, random_corpus

CORPUS_SIZE = 1000
CORPUS_TIME_LIMIT_S = 300.0


def report(criterion, ok, detail):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


@pytest.fixture(scope="module")
def corpus():
    graphs = list(random_corpus(CORPUS_SIZE))
    ref, values, orders = {}, {}, {}
    value_time = 0.0
    start = time.perf_counter()
    for seed, g in graphs:
        ref[seed] = exact_adm(g, 3, method="enumerate").value
    ref_time = time.perf_counter() - start
    for seed, g in graphs:
        start = time.perf_counter()
        values[seed], orders[seed] = compute_value(g)
        value_time += time.perf_counter() - start

    decisions = {}
    violations = []
    for seed, g in graphs:
        for p in range(g.n + 1):
            try:
                d = decide(g, p, instrument=True)
            except InvariantViolation as exc:
                violations.append((seed, p, str(exc)))
                d = decide(g, p)
            decisions[seed, p] = d
    return {
        "graphs": graphs,
        "ref": ref,
        "values": values,
        "orders": orders,
        "value_time": value_time,
        "ref_time": ref_time,
        "decisions": decisions,
        "violations": violations,
    }


def test_criterion_1_value_matches_enumeration(corpus):
    bad = [s for s, _ in corpus["graphs"] if corpus["values"][s] != corpus["ref"][s]]
    t = corpus["value_time"] + corpus["ref_time"]
    ok = not bad and len(corpus["graphs"]) >= 1000 and t <= CORPUS_TIME_LIMIT_S
    report(
        1,
        ok,
        f"{len(corpus['graphs'])} graphs, {len(bad)} mismatches, "
        f"{corpus['value_time']:.1f}s compute_value + {corpus['ref_time']:.1f}s enumeration",
    )


def test_criterion_2_decisions_match_reference(corpus):
    bad = [
        (s, p)
        for (s, p), d in corpus["decisions"].items()
        if d.answer != (corpus["ref"][s] <= p)
    ]
    report(2, not bad, f"{len(corpus['decisions'])} decisions, {len(bad)} disagreements {bad[:5]}")


def test_criterion_3_witnesses_verify(corpus):
    graphs = dict(corpus["graphs"])
    checked, bad = 0, []
    for s, g in graphs.items():
        checked += 1
        if verify_ordering(g, corpus["orders"][s], 3) > corpus["values"][s]:
            bad.append((s, "value"))
    for (s, p), d in corpus["decisions"].items():
        if d.answer:
            checked += 1
            if verify_ordering(graphs[s], d.ordering, 3) > p:
                bad.append((s, p))
    report(3, not bad, f"{checked} YES orderings verified, {len(bad)} invalid {bad[:5]}")


def test_criterion_4_invariants(corpus):
    violations = corpus["violations"]
    queries = sum(d.stats.get("queries", 0) for d in corpus["decisions"].values())
    largest = 0.0
    for (_, p), d in corpus["decisions"].items():
        orc = d.stats.get("oracle")
        if orc is not None and orc.stage2_log and p > 0:
            largest = max(largest, max(r.sub_vertices for r in orc.stage2_log) / p**2)
    report(
        4,
        not violations,
        f"{queries} instrumented queries, {len(violations)} violations, "
        f"max |V(subnetwork)|/p^2 = {largest:.2f} (limit {subnetwork_size_limit(1)})",
    )


def test_criterion_5_subnetwork_matches_full_network(corpus):
    calls = mismatches = augmentable = 0
    for d in corpus["decisions"].values():
        orc = d.stats.get("oracle")
        if orc is None:
            continue
        for rec in orc.stage2_log:
            calls += 1
            augmentable += rec.augmentable_full
            mismatches += rec.augmentable_sub != rec.augmentable_full
    ok = mismatches == 0 and calls > 0
    report(5, ok, f"{calls} stage-2 calls ({augmentable} augmentable), {mismatches} mismatches")


FIXTURES = [
    ("P5", path_graph(5), 1),
    ("C6", cycle_graph(6), 2),
    ("K5", complete_graph(5), 4),
    ("K1,3", star_graph(3), 1),
    ("K1,10", star_graph(10), 1),
    ("Petersen", petersen_graph(), 3),
]


def test_criterion_6_analytic_fixtures():
    got = {name: (compute_value(g)[0], exact_adm(g, 3).value) for name, g, _ in FIXTURES}
    bad = [name for name, _, want in FIXTURES if got[name] != (want, want)]
    detail = ", ".join(f"{name}={got[name][0]}" for name, _, _ in FIXTURES)
    report(6, not bad, detail + (f"; wrong: {bad}" if bad else ""))


@pytest.fixture(scope="module")
def large_runs():
    runs = {}
    for n in (10_000, 30_000, 100_000):
        g = gnm_random_graph(n, 3 * n, seed=1)
        decisions = []
        start = time.perf_counter()
        value, _ = compute_value(g, decisions=decisions)
        runs[n] = (time.perf_counter() - start, value, decisions)
    return runs


def test_criterion_7_escalation_budget(corpus, large_runs):
    worst_ratio = 0.0
    bad = []
    literal_bad = []
    for (s, p), d in corpus["decisions"].items():
        if p == 0 or "max_escalations" not in d.stats:
            continue
        esc = d.stats["max_escalations"]
        worst_ratio = max(worst_ratio, esc / p**3)
        if esc > p**3:
            bad.append((s, p))
        # stage-1 plus stage-2 calls per vertex; at p = 1 one episode already costs 2 > 1
        if p >= 2 and d.stats["max_stage_calls"] > p**3:
            literal_bad.append((s, p))
    large = []
    for d in large_runs[10_000][2]:
        if "max_escalations" in d.stats:
            large.append((d.p, d.stats["max_escalations"], d.stats["max_stage_calls"]))
            if d.stats["max_escalations"] > d.p**3 or (d.p >= 2 and d.stats["max_stage_calls"] > d.p**3):
                bad.append(("gnm10k", d.p))
    ok = not bad and not literal_bad and bool(large)
    report(
        7,
        ok,
        f"corpus worst escalations/p^3 = {worst_ratio:.3f}, stage calls over p^3 (p>=2): {len(literal_bad)}; "
        f"n=10^4 (p, escalations, stage calls): {large}",
    )


def test_criterion_8_scaling(large_runs):
    ns = sorted(large_runs)
    times = [large_runs[n][0] for n in ns]
    slope = float(np.polyfit(np.log(ns), np.log(times), 1)[0])
    t4, t5 = large_runs[10_000][0], large_runs[100_000][0]
    ok = t4 < 10 and t5 < 120 and slope < 2
    detail = ", ".join(f"n={n}: {large_runs[n][0]:.1f}s adm3={large_runs[n][1]}" for n in ns)
    report(8, ok, f"{detail}; log-log slope {slope:.2f}")
