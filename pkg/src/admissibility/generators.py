"""Small named graphs and seeded random graphs used by tests and demos."""

from __future__ import annotations

import numpy as np

from .graph import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(k: int) -> Graph:
    """K_{1,k} with centre 0 and leaves 1..k."""
    return Graph(k + 1, ((0, i) for i in range(1, k + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def gnp_random_graph(n: int, p: float, seed=None) -> Graph:
    """Erdos-Renyi G(n, p)."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def gnm_random_graph(n: int, m: int, seed=None) -> Graph:
    """Uniform simple graph with exactly ``m`` edges (requires m well below n^2/2)."""
    if m > n * (n - 1) // 2:
        raise ValueError("too many edges for a simple graph")
    rng = np.random.default_rng(seed)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < m:
        k = m - len(chosen)
        u = rng.integers(0, n, size=2 * k + 8)
        v = rng.integers(0, n, size=2 * k + 8)
        for a, b in zip(u.tolist(), v.tolist()):
            if a == b:
                continue
            e = (a, b) if a < b else (b, a)
            if e not in chosen:
                chosen.add(e)
                if len(chosen) == m:
                    break
    return Graph(n, sorted(chosen))
