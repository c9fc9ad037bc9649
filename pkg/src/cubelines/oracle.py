"""Brute-force validators.

Nothing here touches line types, the group triples or the reduction code:
lines come from testing point subsets with ``is_linear_sequence``, and
automorphisms from a backtracking search over that line set.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Optional, Sequence

from .cube import CubeParams, is_linear_sequence

SUBSET_LIMIT = 32
WALK_LIMIT = 4096
AUTOMORPHISM_LIMIT = 64
GRAPH_LIMIT = 8


class TooLarge(ValueError):
    pass


def _is_line(cube: CubeParams, pts: Sequence[tuple[int, ...]]) -> bool:
    for axis in range(cube.d):
        seq = sorted(pts, key=lambda p: (p[axis], p))
        if is_linear_sequence(cube, seq):
            return True
    return False


def brute_force_lines(cube: CubeParams) -> set[frozenset[int]]:
    """Every n-point set that can be ordered into a linear sequence.

    Up to 32 points all n-subsets are tested.  Larger cubes (up to 4096
    points) only test the n-point walks along the 3^d - 1 unit directions,
    which must still pass the same linearity test.
    """
    pts = cube.points()
    found: set[frozenset[int]] = set()
    if cube.size <= SUBSET_LIMIT:
        for combo in itertools.combinations(range(cube.size), cube.n):
            if _is_line(cube, [pts[i] for i in combo]):
                found.add(frozenset(combo))
        return found
    if cube.size > WALK_LIMIT:
        raise TooLarge(f"{cube} has {cube.size} points; the line oracle stops at {WALK_LIMIT}")
    for start in pts:
        for step in itertools.product((-1, 0, 1), repeat=cube.d):
            if not any(step):
                continue
            walk = [tuple(x + k * s for x, s in zip(start, step)) for k in range(cube.n)]
            if any(not 0 <= x < cube.n for p in walk for x in p):
                continue
            if is_linear_sequence(cube, walk):
                found.add(frozenset(cube.index(p) for p in walk))
    return found


def brute_force_automorphisms(cube: CubeParams,
                              lines: Optional[Iterable[frozenset[int]]] = None
                              ) -> list[tuple[int, ...]]:
    """All line-preserving bijections of the cube points, sorted.

    Points are assigned in decreasing degree order.  A candidate image must
    have the same degree, keep collinearity with every assigned point, and
    stay on the image of every line that already has two assigned points.
    """
    if cube.size > AUTOMORPHISM_LIMIT:
        raise TooLarge(f"{cube} has {cube.size} points; the automorphism oracle stops at "
                       f"{AUTOMORPHISM_LIMIT}")
    line_list = sorted(sorted(s) for s in (lines if lines is not None else brute_force_lines(cube)))
    size = cube.size
    through: list[list[int]] = [[] for _ in range(size)]
    for k, line in enumerate(line_list):
        for i in line:
            through[i].append(k)
    common = [[-1] * size for _ in range(size)]
    for k, line in enumerate(line_list):
        for a in line:
            for b in line:
                if a != b:
                    common[a][b] = k
    line_members = [frozenset(line) for line in line_list]
    deg = [len(t) for t in through]
    order = sorted(range(size), key=lambda i: (-deg[i], i))

    image = [-1] * size
    used = [False] * size
    # image line of each line once two of its points are placed
    line_image: list[int] = [-1] * len(line_list)
    placed_on: list[int] = [0] * len(line_list)
    results: list[tuple[int, ...]] = []

    def candidates(p: int) -> Iterable[int]:
        for q in range(size):
            if used[q] or deg[q] != deg[p]:
                continue
            ok = True
            for k in through[p]:
                if line_image[k] >= 0 and q not in line_members[line_image[k]]:
                    ok = False
                    break
            if not ok:
                continue
            for r in order[:depth[0]]:
                if (common[p][r] < 0) != (common[q][image[r]] < 0):
                    ok = False
                    break
            if ok:
                yield q

    depth = [0]

    def place(p: int, q: int) -> list[int]:
        image[p] = q
        used[q] = True
        newly = []
        for k in through[p]:
            placed_on[k] += 1
            if placed_on[k] == 2 and line_image[k] < 0:
                other = next(r for r in line_list[k] if r != p and image[r] >= 0)
                line_image[k] = common[q][image[other]]
                newly.append(k)
        return newly

    def unplace(p: int, q: int, newly: list[int]) -> None:
        for k in newly:
            line_image[k] = -1
        for k in through[p]:
            placed_on[k] -= 1
        used[q] = False
        image[p] = -1

    def search() -> None:
        if depth[0] == size:
            results.append(tuple(image))
            return
        p = order[depth[0]]
        for q in list(candidates(p)):
            newly = place(p, q)
            depth[0] += 1
            search()
            depth[0] -= 1
            unplace(p, q, newly)

    search()
    return sorted(results)


def brute_force_graph_iso(g1, g2) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest vertex bijection carrying g1's edges onto g2's.

    Graphs are anything with an ``n`` vertex count and an ``edges`` collection
    of vertex pairs.
    """
    if max(g1.n, g2.n) > GRAPH_LIMIT:
        raise TooLarge(f"graph oracle handles at most {GRAPH_LIMIT} vertices")
    e1 = {frozenset(e) for e in g1.edges}
    e2 = {frozenset(e) for e in g2.edges}
    if g1.n != g2.n or len(e1) != len(e2):
        return None
    for f in itertools.permutations(range(g1.n)):
        if all(frozenset(f[v] for v in e) in e2 for e in e1):
            return f
    return None
