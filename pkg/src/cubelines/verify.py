"""Oracle comparison suites behind ``cubelines verify``."""

from __future__ import annotations

import itertools
import math
from typing import Callable, Iterator

import numpy as np

from . import oracle
from .cube import CubeParams, degree, enumerate_lines, incidence, line_count
from .group import GroupTable, group_order
from .reduction import Graph, coloring_matrix, graph_iso_via_cube, reduce_graph

SUITES = ("lines", "group", "degrees", "reduction")

# the path 0-1-2 as a 10x10 matrix
P3_MATRIX = np.zeros((10, 10), dtype=np.int64)
for _i, _j in [(0, 1), (1, 0), (1, 2), (2, 1), (3, 3), (3, 4)]:
    P3_MATRIX[_i, _j] = 1


def graphs_without_isolated(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices with minimum degree at least 1."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1, 1 << len(pairs)):
        g = Graph.from_edges([pairs[i] for i in range(len(pairs)) if mask >> i & 1], n)
        if min(g.degrees()) >= 1:
            yield g


def check_lines(cube: CubeParams) -> tuple[bool, str]:
    ours = {frozenset(line.points) for line in enumerate_lines(cube)}
    theirs = oracle.brute_force_lines(cube)
    ok = ours == theirs and len(ours) == line_count(cube)
    return ok, f"{len(ours)} lines, oracle {len(theirs)}, formula {line_count(cube)}"


def check_group(cube: CubeParams) -> tuple[bool, str]:
    if cube.n == 2:
        if cube.d > 3:
            raise oracle.TooLarge(f"{cube} has (2^{cube.d})! automorphisms; too many to list")
        found = oracle.brute_force_automorphisms(cube)
        expected = math.factorial(2 ** cube.d)
        return len(found) == expected == group_order(cube), \
            f"oracle {len(found)}, (2^d)! = {expected}"
    table = GroupTable(cube)
    ours = {tuple(row) for row in table.maps.tolist()}
    theirs = set(oracle.brute_force_automorphisms(cube))
    ok = ours == theirs and len(ours) == table.order == group_order(cube)
    return ok, f"enumerated {len(ours)}, oracle {len(theirs)}, formula {group_order(cube)}"


def check_degrees(cube: CubeParams) -> tuple[bool, str]:
    counts = [len(lines) for lines in incidence(cube)]
    bad = [i for i in range(cube.size) if degree(cube, cube.point(i)) != counts[i]]
    return not bad, f"{cube.size - len(bad)}/{cube.size} points agree"


def check_reduction(max_vertices: int = 4) -> tuple[bool, str]:
    if not np.array_equal(coloring_matrix(reduce_graph(Graph.from_edges([(0, 1), (1, 2)]))),
                          P3_MATRIX):
        return False, "path P3 matrix differs"
    pairs = 0
    for n in range(2, max_vertices + 1):
        gs = list(graphs_without_isolated(n))
        for g1, g2 in itertools.product(gs, repeat=2):
            got = graph_iso_via_cube(g1, g2)
            want = oracle.brute_force_graph_iso(g1, g2)
            if got != want:
                return False, f"disagreement on {sorted(g1.edges)} vs {sorted(g2.edges)}"
            pairs += 1
    return True, f"{pairs} graph pairs agree with the oracle"


def run_suites(cube: CubeParams, suites: list[str]) -> list[tuple[str, bool, str]]:
    checks: dict[str, Callable[[], tuple[bool, str]]] = {
        "lines": lambda: check_lines(cube),
        "group": lambda: check_group(cube),
        "degrees": lambda: check_degrees(cube),
        "reduction": check_reduction,
    }
    return [(name, *checks[name]()) for name in suites]
