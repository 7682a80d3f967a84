"""Simple undirected graphs, L/R vertex partitions and degeneracy."""

from __future__ import annotations

import gzip
from collections.abc import Iterable, Iterator
from typing import BinaryIO, TextIO

__all__ = [
    "Graph",
    "ParseError",
    "Partition",
    "degeneracy",
    "load_edge_list",
    "read_edge_list",
    "write_edge_list",
]

GZIP_MAGIC = b"\x1f\x8b"


class ParseError(ValueError):
    """Raised when an edge list cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple undirected graph on the vertices ``0..n-1``.

    Self-loops and repeated edges passed to the constructor are dropped.
    ``adj[v]`` is the ascending tuple of neighbours of ``v``; ``labels``
    optionally maps vertex ids back to the labels used in an input file.
    """

    __slots__ = ("n", "m", "adj", "adjset", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u != v:
                sets[u].add(v)
                sets[v].add(u)
        self.n = n
        self.adj: list[tuple[int, ...]] = [tuple(sorted(s)) for s in sets]
        self.adjset: list[set[int]] = sets
        self.m = sum(len(s) for s in sets) // 2
        if labels is not None:
            labels = list(labels)
            if len(labels) != n:
                raise ValueError("need exactly one label per vertex")
        self.labels: list[str] | None = labels

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjset[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    def max_degree(self) -> int:
        return max(map(len, self.adj), default=0)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Partition:
    """Mutable split of the vertices of a graph into a left side L and right side R.

    ``nl[v]`` and ``nr[v]`` hold the neighbours of ``v`` on each side and are
    kept current by :meth:`move_to_right`.
    """

    __slots__ = ("graph", "in_left", "nl", "nr")

    def __init__(self, graph: Graph, left: Iterable[int] | None = None):
        self.graph = graph
        n = graph.n
        if left is None:
            self.in_left = bytearray(b"\x01") * n
            self.nl = [set(nbrs) for nbrs in graph.adj]
            self.nr: list[set[int]] = [set() for _ in range(n)]
            return
        self.in_left = bytearray(n)
        for v in left:
            self.in_left[v] = 1
        in_left = self.in_left
        self.nl = [{w for w in nbrs if in_left[w]} for nbrs in graph.adj]
        self.nr = [{w for w in nbrs if not in_left[w]} for nbrs in graph.adj]

    def is_left(self, v: int) -> bool:
        return bool(self.in_left[v])

    def left(self) -> list[int]:
        return [v for v in range(self.graph.n) if self.in_left[v]]

    def right(self) -> list[int]:
        return [v for v in range(self.graph.n) if not self.in_left[v]]

    def move_to_right(self, v: int) -> None:
        """Move ``v`` from L to R in O(deg(v))."""
        if not self.in_left[v]:
            raise ValueError(f"vertex {v} is already in R")
        self.in_left[v] = 0
        nl, nr = self.nl, self.nr
        for w in self.graph.adj[v]:
            nl[w].discard(v)
            nr[w].add(v)


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Return the degeneracy of ``g`` and an ordering witnessing it.

    Every vertex of the returned ordering has at most ``d`` neighbours placed
    before it. Uses the bucket-queue core decomposition of Batagelj and
    Zaversnik, O(n + m).
    """
    n = g.n
    if n == 0:
        return 0, []
    deg = [len(a) for a in g.adj]
    md = max(deg)
    # bucket start offsets
    bin_ = [0] * (md + 1)
    for d in deg:
        bin_[d] += 1
    start = 0
    for d in range(md + 1):
        bin_[d], start = start, start + bin_[d]
    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bin_[deg[v]]
        vert[pos[v]] = v
        bin_[deg[v]] += 1
    for d in range(md, 0, -1):
        bin_[d] = bin_[d - 1]
    bin_[0] = 0

    best = 0
    for i in range(n):
        v = vert[i]
        if deg[v] > best:
            best = deg[v]
        for u in g.adj[v]:
            du = deg[u]
            if du > deg[v]:
                pu = pos[u]
                pw = bin_[du]
                w = vert[pw]
                if u != w:
                    pos[u], pos[w] = pw, pu
                    vert[pu], vert[pw] = w, u
                bin_[du] += 1
                deg[u] = du - 1
    # vert is the removal order; reversing it bounds back-neighbours by d
    return best, vert[::-1]


def load_edge_list(stream: BinaryIO) -> Graph:
    """Parse a whitespace-separated edge list from a binary stream.

    Lines starting with ``#`` or ``%`` are comments. Only the first two
    tokens of a line are used, so weighted or timestamped lists load as
    plain graphs. Labels are mapped to ids ``0..n-1`` in order of first
    appearance; gzip input is detected by its magic bytes.
    """
    data = stream.read()
    if isinstance(data, str):
        data = data.encode()
    if data[:2] == GZIP_MAGIC:
        data = gzip.decompress(data)

    ids: dict[bytes, int] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(data.splitlines(), 1):
        line = raw.strip()
        if not line or line[:1] in (b"#", b"%"):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise ParseError(f"expected two vertex labels, got {raw.decode(errors='replace')!r}", lineno)
        a, b = tokens[0], tokens[1]
        for tok in (a, b):
            if tok not in ids:
                try:
                    tok.decode("utf-8")
                except UnicodeDecodeError:
                    raise ParseError(f"label {tok!r} is not valid UTF-8", lineno) from None
                ids[tok] = len(ids)
        edges.append((ids[a], ids[b]))
    if not ids:
        raise ParseError("empty input")
    labels = [tok.decode("utf-8") for tok in ids]
    return Graph(len(ids), edges, labels=labels)


def read_edge_list(path) -> Graph:
    with open(path, "rb") as fh:
        return load_edge_list(fh)


def write_edge_list(g: Graph, stream: TextIO) -> None:
    """Write ``g`` so that :func:`load_edge_list` reproduces it exactly.

    Vertices without a smaller neighbour are announced by a self-loop line,
    which keeps ids (and isolated vertices) stable across a round trip.
    """
    for v in range(g.n):
        lv = g.label(v)
        smaller = [u for u in g.adj[v] if u < v]
        if not smaller:
            stream.write(f"{lv} {lv}\n")
        for u in smaller:
            stream.write(f"{g.label(u)} {lv}\n")
