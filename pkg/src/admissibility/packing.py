"""Rooted packings of short admissible paths, plus exhaustive checkers.

A path is a tuple of vertices starting at the packing's root. Paths of one
packing share only the root; each is keyed by its far endpoint.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .graph import Graph, Partition

__all__ = [
    "Packing",
    "admissible_paths",
    "check_chordless",
    "check_covering",
    "check_packing",
    "is_maximal",
    "layered_targets",
    "targets",
]

MAX_PATH_VERTICES = 4


class Packing:
    """Vertex-disjoint (apart from the root) paths of length 1 to 3."""

    __slots__ = ("root", "paths", "owner")

    def __init__(self, root: int, paths: Iterable[tuple[int, ...]] = ()):
        self.root = root
        self.paths: dict[int, tuple[int, ...]] = {}
        # non-root vertex -> endpoint of the path holding it
        self.owner: dict[int, int] = {}
        for path in paths:
            self.add_path(path)

    @classmethod
    def star(cls, root: int, leaves: Iterable[int]) -> Packing:
        """All length-1 paths from ``root`` to ``leaves``, built without checks."""
        pk = cls(root)
        for y in leaves:
            pk.paths[y] = (root, y)
            pk.owner[y] = y
        return pk

    def __len__(self) -> int:
        return len(self.paths)

    def __contains__(self, v: int) -> bool:
        return v == self.root or v in self.owner

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for end in sorted(self.paths):
            yield self.paths[end]

    def __eq__(self, other):
        if not isinstance(other, Packing):
            return NotImplemented
        return self.root == other.root and self.paths == other.paths

    def __repr__(self):
        return f"Packing(root={self.root}, paths={list(self)})"

    def vertices(self) -> set[int]:
        """V(H), including the root."""
        vs = set(self.owner)
        vs.add(self.root)
        return vs

    def endpoints(self) -> list[int]:
        return sorted(self.paths)

    def first_hops(self) -> list[int]:
        """Neighbours of the root on the packing, ascending."""
        return sorted(path[1] for path in self.paths.values())

    def arcs(self) -> set[tuple[int, int]]:
        """Edges of the packing oriented away from the root."""
        out = set()
        for path in self.paths.values():
            out.update(zip(path, path[1:]))
        return out

    def add_path(self, path) -> None:
        path = tuple(path)
        if not 2 <= len(path) <= MAX_PATH_VERTICES:
            raise ValueError(f"path {path} must have between 1 and 3 edges")
        if path[0] != self.root:
            raise ValueError(f"path {path} does not start at root {self.root}")
        owner = self.owner
        for x in path[1:]:
            if x == self.root or x in owner:
                raise ValueError(f"path {path} is not disjoint from the packing at {x}")
        if len(set(path)) != len(path):
            raise ValueError(f"path {path} repeats a vertex")
        end = path[-1]
        self.paths[end] = path
        for x in path[1:]:
            owner[x] = end

    def remove_path_through(self, v: int) -> tuple[int, ...]:
        """Remove and return the path containing the non-root vertex ``v``."""
        end = self.owner.get(v)
        if end is None:
            raise KeyError(f"vertex {v} lies on no path of the packing rooted at {self.root}")
        path = self.paths.pop(end)
        owner = self.owner
        for x in path[1:]:
            del owner[x]
        return path

    def copy(self) -> Packing:
        pk = Packing(self.root)
        pk.paths = dict(self.paths)
        pk.owner = dict(self.owner)
        return pk

    def dump(self) -> str:
        """Line-based trace: the root, then one path per line."""
        lines = [str(self.root)]
        lines.extend(" ".join(map(str, path)) for path in self)
        return "\n".join(lines) + "\n"


def admissible_paths(g: Graph, part: Partition, v: int, r: int) -> Iterator[tuple[int, ...]]:
    """Every simple path from ``v`` of length at most ``r`` with inner vertices
    in R and its other endpoint in L. Exponential in ``r``; for checking only."""
    in_left = part.in_left
    adj = g.adj

    def extend(path):
        last = path[-1]
        for w in adj[last]:
            if w in path:
                continue
            if in_left[w]:
                yield path + (w,)
            elif len(path) < r:
                yield from extend(path + (w,))

    if r >= 1:
        yield from extend((v,))


def targets(g: Graph, part: Partition, v: int, r: int) -> set[int]:
    """The L-vertices reachable from ``v`` along admissible paths of length <= r."""
    return {path[-1] for path in admissible_paths(g, part, v, r)}


def layered_targets(g: Graph, part: Partition, v: int) -> tuple[set[int], set[int], set[int]]:
    """Targets of ``v`` split by the length of their shortest admissible path."""
    t1 = targets(g, part, v, 1)
    t2 = targets(g, part, v, 2) - t1
    t3 = targets(g, part, v, 3) - t1 - t2
    return t1, t2, t3


def check_packing(pk: Packing, g: Graph, part: Partition, r: int) -> bool:
    """True iff every path of ``pk`` is (r, L)-admissible and the paths are disjoint."""
    seen = {pk.root}
    in_left = part.in_left
    for end, path in pk.paths.items():
        if path[0] != pk.root or path[-1] != end or len(path) - 1 > r:
            return False
        if not in_left[end] or end == pk.root:
            return False
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                return False
        if any(in_left[x] for x in path[1:-1]):
            return False
        for x in path[1:]:
            if x in seen:
                return False
            seen.add(x)
    return True


def check_chordless(pk: Packing, g: Graph) -> bool:
    """True iff no path has an edge from the root to a vertex beyond its first hop."""
    nbrs = g.adjset[pk.root]
    return not any(x in nbrs for path in pk.paths.values() for x in path[2:])


def check_covering(pk: Packing, g: Graph, part: Partition) -> bool:
    """True iff every 3-target of the root is a direct packed neighbour or is
    reached by some admissible path meeting the packing away from the root."""
    root = pk.root
    nbrs = g.adjset[root]
    covered: set[int] = set()
    for path in admissible_paths(g, part, root, 3):
        if any(x in pk.owner for x in path[1:]):
            covered.add(path[-1])
    for x in targets(g, part, root, 3):
        if x in nbrs:
            if pk.paths.get(x) != (root, x):
                return False
        elif x not in covered:
            return False
    return True


def is_maximal(pk: Packing, g: Graph, part: Partition, r: int) -> bool:
    """True iff no admissible path of length <= r can be added to ``pk``."""
    for path in admissible_paths(g, part, pk.root, r):
        if not any(x in pk.owner for x in path[1:]):
            return False
    return True
