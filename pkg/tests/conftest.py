import numpy as np
import pytest

from admissibility import Graph, Partition
from admissibility.generators import gnp_random_graph
from admissibility.oracle import Oracle
from admissibility.packing import Packing

ACCEPTANCE_LINES: list[str] = []

EDGE_PROBS = (0.2, 0.4, 0.6)


def random_corpus(count=1000):
    """Seeded G(n, q) graphs with n in [4, 12] and q cycling through EDGE_PROBS."""
    for seed in range(count):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(4, 13))
        q = EDGE_PROBS[seed % len(EDGE_PROBS)]
        yield seed, gnp_random_graph(n, q, seed=seed)


def oracle_state(g, p, right_order, packs=None):
    """Oracle whose partition and vias reflect moving ``right_order`` to R in turn.

    ``packs`` maps vertices to lists of paths and overrides their packings.
    """
    orc = Oracle(g, p)
    for v in right_order:
        orc.part.move_to_right(v)
        orc.vias.on_move(g, orc.part, v)
        orc.cand_flag[v] = 0
    orc.cand_heap = [v for v in orc.cand_heap if orc.part.in_left[v]]
    for v, paths in (packs or {}).items():
        orc.packs[v] = Packing(v, paths)
    return orc


@pytest.fixture
def fix_tgt():
    """Edges 0-1, 1-2, 2-3, 1-4 with L = {0, 3, 4}."""
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    return g, Partition(g, [0, 3, 4])


@pytest.fixture
def fix_aug():
    """Edges 0-1, 0-2, 1-3, 2-3, 1-4 with L = {0, 3, 4}."""
    g = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4)])
    return g, Partition(g, [0, 3, 4])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
