"""Graph Isomorphism to Colored Cube Isomorphism.

A graph on vertices ``0..n-1`` becomes a 2-coloring of the square cube
``k^2`` with ``k = 2n + 4``: the top-left ``n x n`` block is the adjacency
matrix, the two marker cells ``[n, n]`` and ``[n, n+1]`` are set, and all
other cells are 0.  Without isolated vertices, every cube automorphism between
two such colorings is a value permutation keeping ``[n]`` inside ``[n]``, and
its restriction to ``[n]`` is a graph isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .coloring import Coloring, apply_to_coloring, are_isomorphic
from .cube import CubeParams
from .group import Automorphism, is_value_perm, point_map_array, value_perm


class ReductionError(ValueError):
    pass


class IsolatedVertex(ReductionError):
    pass


class EmptyGraph(ReductionError):
    pass


class NotAValuePermutation(ReductionError):
    pass


class RangeViolation(ReductionError):
    pass


class NotABijection(ReductionError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        normalized = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside vertices 0..{self.n - 1}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: Optional[int] = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, frozenset(edges))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def relabel(self, f: Sequence[int]) -> "Graph":
        return Graph(self.n, frozenset((f[u], f[v]) for u, v in self.edges))


def parse_graph(text: str) -> Graph:
    """Edge list: one ``u v`` per line, ``#`` comments, optional ``p <n>`` header."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if len(fields) != 2:
                raise ValueError(f"line {lineno}: header must be 'p <n>'")
            n = int(fields[1])
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(fields[0]), int(fields[1])))
    return Graph.from_edges(edges, n)


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n}"] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def side_length(n: int) -> int:
    return 2 * n + 4


@lru_cache(maxsize=4096)
def reduce_graph(g: Graph, require_min_degree: bool = True) -> Coloring:
    if g.n == 0 or not g.edges:
        raise EmptyGraph("the reduction needs at least one edge")
    if require_min_degree:
        isolated = [v for v, dg in enumerate(g.degrees()) if dg == 0]
        if isolated:
            raise IsolatedVertex(f"isolated vertices {isolated}")
    k = side_length(g.n)
    cube = CubeParams(k, 2)
    colors = np.zeros((k, k), dtype=np.int64)
    for u, v in g.edges:
        colors[u, v] = colors[v, u] = 1
    colors[g.n, g.n] = colors[g.n, g.n + 1] = 1
    # cell [i, j] has index i + j*k, i.e. the matrix transposed in C order
    return Coloring(cube, 2, tuple(colors.T.ravel().tolist()))


def coloring_matrix(s: Coloring) -> np.ndarray:
    """``M[i, j] = s([i, j])`` for a coloring of a square cube."""
    if s.cube.d != 2:
        raise ValueError("only 2-dimensional colorings have a matrix view")
    k = s.cube.n
    return np.array(s.colors).reshape(k, k).T


def embed_graph_isomorphism(f: Sequence[int], n: int) -> Automorphism:
    """Value permutation of [2n+4] extending ``f``, fixing n and n+1, symmetric."""
    f = tuple(int(x) for x in f)
    if sorted(f) != list(range(n)):
        raise NotABijection(f"{f} is not a bijection of range({n})")
    k = side_length(n)
    pi = list(range(k))
    for i, fi in enumerate(f):
        pi[i] = fi
        pi[k - 1 - i] = k - 1 - fi
    return value_perm(pi, CubeParams(k, 2))


def extract_graph_isomorphism(a: Automorphism, n: int) -> tuple[int, ...]:
    if a.d != 2 or a.n != side_length(n):
        raise ReductionError(f"expected an automorphism of {side_length(n)}^2")
    if not is_value_perm(a):
        raise NotAValuePermutation(f"{a} moves coordinates")
    f = a.value[:n]
    if any(x >= n for x in f):
        raise RangeViolation(f"value permutation {a.value} maps a vertex outside [0, {n})")
    return tuple(f)


@lru_cache(maxsize=16)
def _embedded_inverse_maps(n: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Inverse point maps of every embedded bijection, in lexicographic order."""
    bijections = list(itertools.permutations(range(n)))
    maps = np.array([point_map_array(embed_graph_isomorphism(f, n)) for f in bijections])
    inv = np.empty_like(maps)
    inv[np.arange(len(maps))[:, None], maps] = np.arange(maps.shape[1])
    return inv, bijections


def _fast(s1: Coloring, s2: Coloring, n: int) -> Optional[tuple[int, ...]]:
    inv, bijections = _embedded_inverse_maps(n)
    hits = np.flatnonzero((s1.array[inv] == s2.array).all(axis=1))
    for h in hits:
        f = bijections[h]
        if apply_to_coloring(embed_graph_isomorphism(f, n), s1) == s2:
            return f
    return None


def graph_iso_via_cube(g1: Graph, g2: Graph, mode: str = "fast") -> Optional[tuple[int, ...]]:
    """A vertex bijection g1 -> g2 found through the cube colorings, or None.

    ``fast`` only tries value permutations embedding a vertex bijection and
    returns the lexicographically smallest success; ``full`` decides colored
    cube isomorphism over the whole group and extracts the bijection.
    """
    if mode not in ("fast", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    s1, s2 = reduce_graph(g1), reduce_graph(g2)
    if g1.n != g2.n:
        return None
    if mode == "fast":
        if s1.histogram != s2.histogram:
            return None
        return _fast(s1, s2, g1.n)
    witness = are_isomorphic(s1, s2)
    if witness is None:
        return None
    return extract_graph_isomorphism(witness, g1.n)
