import math

import pytest

from admissibility import Graph, compute_potential, compute_value, decide, verify_ordering
from admissibility.driver import lower_bound
from admissibility.generators import complete_graph, cycle_graph, gnp_random_graph, path_graph, petersen_graph
from admissibility.oracle import Oracle
from admissibility.reference import exact_adm, reach_targets

from conftest import random_corpus


def test_decide_k5():
    assert not decide(complete_graph(5), 3).answer
    yes = decide(complete_graph(5), 4)
    assert yes.answer and verify_ordering(complete_graph(5), yes.ordering, 3) == 4


def test_decide_edge_bound_skips_oracle():
    d = decide(complete_graph(5), 1)
    assert not d.answer and d.stats["reason"] == "edge-bound" and d.stats["queries"] == 0


def test_decide_cycle():
    assert decide(cycle_graph(6), 2).answer
    assert not decide(cycle_graph(6), 1).answer


def test_decide_negative_budget():
    with pytest.raises(ValueError):
        decide(path_graph(3), -1)


def test_decide_empty_graph():
    d = decide(Graph(0), 0)
    assert d.answer and d.ordering == []


@pytest.mark.parametrize("g, value", [(path_graph(5), 1), (petersen_graph(), 3), (Graph(4), 0), (Graph(0), 0)])
def test_compute_value_examples(g, value):
    assert compute_value(g)[0] == value


def test_lower_bound():
    g = complete_graph(5)
    assert lower_bound(g) == 4
    assert lower_bound(Graph(4, [(0, 1)])) == 1


def test_compute_value_random_edge_prob_03():
    for seed in range(200):
        n = 4 + seed % 9
        g = gnp_random_graph(n, 0.3, seed=10_000 + seed)
        value, order = compute_value(g)
        assert value == exact_adm(g, 3).value
        assert verify_ordering(g, order, 3) == value


def test_decisions_are_recorded():
    log = []
    compute_value(petersen_graph(), decisions=log)
    assert [d.p for d in log] == [3] and log[-1].answer


def test_potential_formula():
    g = Graph(2, [(0, 1)])
    assert compute_potential(Oracle(g, 2), 0) == 4


def test_potential_isolated():
    assert compute_potential(Oracle(Graph(1), 3), 0) == 0


def test_potential_decreases_when_a_target_leaves():
    for _, g in random_corpus(120):
        for p in range(1, 5):
            if g.m > p * g.n:
                continue
            orc = Oracle(g, p)
            while True:
                before = {u: (orc.potential(u), reach_targets(g, orc.part, u, 3)) for u in orc.part.left()}
                v = orc.query()
                if v is None:
                    break
                for u in orc.part.left():
                    phi, targets = before[u]
                    if v in targets:
                        assert orc.potential(u) < phi


def test_potential_bounded_at_escalation():
    for _, g in random_corpus(200):
        for p in range(1, 6):
            if g.m > p * g.n:
                continue
            d = decide(g, p, instrument=True)
            for _, phi in d.stats["oracle"].potential_log:
                assert phi <= p**3


def test_instrumented_decide_matches_plain():
    g = petersen_graph()
    a, b = decide(g, 3), decide(g, 3, instrument=True)
    assert a.ordering == b.ordering
    assert math.isclose(a.stats["queries"], b.stats["queries"])


def test_decide_is_deterministic():
    g = gnp_random_graph(12, 0.5, seed=4)
    varying = ("elapsed_s", "peak_mem_bytes")
    runs = [decide(g, p) for p in (5, 5)]
    a, b = ({k: v for k, v in d.stats.items() if k not in varying} for d in runs)
    assert runs[0].ordering == runs[1].ordering and a == b


def test_stats_report_memory():
    assert decide(petersen_graph(), 3).stats["peak_mem_bytes"] > 0
