"""The automorphism group of the line hypergraph of n^d.

Every automorphism is stored as a triple ``(perm, flips, value)`` acting by

    apply(A, x)[i] = value[flip(x[perm[i]], flips[i])]

where ``flip(v, 1) = n-1-v``.  The ``(perm, flips)`` part ranges over the full
signed-permutation group of the coordinates (rotations together with the
axial swap); ``value`` is a permutation of ``[n]`` with the symmetry property
``value[n-1-v] = n-1-value[v]``.  Complementing every flip and composing the
value part with ``v -> n-1-v`` gives the same point map, so the canonical
representative has ``flips[0] == 0``.

Composition is diagrammatic: ``compose(a, b)`` applies ``a`` first.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .cube import CubeParams, Point, corners, enumerate_lines

DEFAULT_CAP = 10 ** 8


class GroupError(ValueError):
    pass


class SymmetryViolation(GroupError):
    pass


class NotABijection(GroupError):
    pass


class NotAnAutomorphism(GroupError):
    pass


class CapExceeded(GroupError):
    def __init__(self, order: int, cap: int):
        super().__init__(f"group order {order} exceeds the enumeration cap {cap}; "
                         f"rerun with a cap of at least {order}")
        self.order = order
        self.cap = cap


class Unsupported(GroupError):
    pass


def _require_group_cube(cube: CubeParams) -> None:
    if cube.n < 3 or cube.d < 2:
        raise Unsupported(f"group operations need n >= 3 and d >= 2, got {cube}")


def is_symmetric(value: Sequence[int], n: int) -> bool:
    return all(value[n - 1 - v] == n - 1 - value[v] for v in range(n))


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class Automorphism:
    n: int
    d: int
    perm: tuple[int, ...]
    flips: tuple[int, ...]
    value: tuple[int, ...]

    def __post_init__(self) -> None:
        perm, flips, value = tuple(self.perm), tuple(self.flips), tuple(self.value)
        if sorted(perm) != list(range(self.d)):
            raise GroupError(f"perm {perm} is not a permutation of range({self.d})")
        if len(flips) != self.d or any(f not in (0, 1) for f in flips):
            raise GroupError(f"flips {flips} must be {self.d} bits")
        if sorted(value) != list(range(self.n)):
            raise GroupError(f"value {value} is not a permutation of range({self.n})")
        if not is_symmetric(value, self.n):
            raise SymmetryViolation(f"value permutation {value} lacks the symmetry property")
        if flips[0] == 1:
            flips = tuple(1 - f for f in flips)
            value = tuple(value[self.n - 1 - v] for v in range(self.n))
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "flips", flips)
        object.__setattr__(self, "value", value)

    @property
    def cube(self) -> CubeParams:
        return CubeParams(self.n, self.d)

    def __call__(self, p: Sequence[int]) -> Point:
        return apply(self, p)

    def __str__(self) -> str:
        return format_automorphism(self)


def is_rotation(a: Automorphism) -> bool:
    """Whether ``a`` is a rotation: a signed permutation whose permutation
    sign equals the parity of its flip count, with no value permutation."""
    even = _perm_sign(a.perm) == 1
    last = a.n - 1
    if a.value == tuple(range(a.n)):
        return even == (sum(a.flips) % 2 == 0)
    if a.value == tuple(last - v for v in range(a.n)):
        return even == ((a.d - sum(a.flips)) % 2 == 0)
    return False


def is_value_perm(a: Automorphism) -> bool:
    return a.perm == tuple(range(a.d)) and not any(a.flips)


def identity(cube: CubeParams) -> Automorphism:
    return Automorphism(cube.n, cube.d, tuple(range(cube.d)), (0,) * cube.d,
                        tuple(range(cube.n)))


def signed_perm(cube: CubeParams, perm: Sequence[int], flips: Sequence[int]) -> Automorphism:
    return Automorphism(cube.n, cube.d, tuple(perm), tuple(flips), tuple(range(cube.n)))


def rotation_generator(i: int, j: int, cube: CubeParams) -> Automorphism:
    """R_ij: coordinate i becomes n-1-x_j, coordinate j becomes x_i."""
    if cube.d < 2:
        raise Unsupported("rotations need d >= 2")
    if not (0 <= i < cube.d and 0 <= j < cube.d):
        raise IndexError(f"coordinates ({i}, {j}) out of range for d={cube.d}")
    if i == j:
        raise ValueError("rotation needs two distinct coordinates")
    perm = list(range(cube.d))
    flips = [0] * cube.d
    perm[i], perm[j] = j, i
    flips[i] = 1
    return signed_perm(cube, perm, flips)


def value_perm(pi: Sequence[int], cube: CubeParams) -> Automorphism:
    pi = tuple(pi)
    if sorted(pi) != list(range(cube.n)):
        raise GroupError(f"{pi} is not a permutation of range({cube.n})")
    if not is_symmetric(pi, cube.n):
        raise SymmetryViolation(f"value permutation {pi} lacks the symmetry property")
    return Automorphism(cube.n, cube.d, tuple(range(cube.d)), (0,) * cube.d, pi)


def central_reflection(cube: CubeParams) -> Automorphism:
    return value_perm([cube.n - 1 - v for v in range(cube.n)], cube)


def axial(cube: CubeParams) -> Automorphism:
    """X: swap the last two coordinates."""
    if cube.d < 2:
        raise Unsupported("the axial symmetry needs d >= 2")
    perm = list(range(cube.d))
    perm[-1], perm[-2] = perm[-2], perm[-1]
    return signed_perm(cube, perm, [0] * cube.d)


def _check_match(a: Automorphism, n: int, d: int) -> None:
    if (a.n, a.d) != (n, d):
        raise GroupError(f"automorphism of {a.n}^{a.d} used on {n}^{d}")


def apply(a: Automorphism, p: Sequence[int]) -> Point:
    if len(p) != a.d:
        raise ValueError(f"point {tuple(p)} has dimension {len(p)}, expected {a.d}")
    last = a.n - 1
    return tuple(
        a.value[last - p[src] if f else p[src]]
        for src, f in zip(a.perm, a.flips)
    )


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """The automorphism applying ``a`` first, then ``b``."""
    _check_match(b, a.n, a.d)
    perm = tuple(a.perm[b.perm[i]] for i in range(a.d))
    flips = tuple(a.flips[b.perm[i]] ^ b.flips[i] for i in range(a.d))
    value = tuple(b.value[a.value[v]] for v in range(a.n))
    return Automorphism(a.n, a.d, perm, flips, value)


def inverse(a: Automorphism) -> Automorphism:
    perm = [0] * a.d
    flips = [0] * a.d
    for i, src in enumerate(a.perm):
        perm[src] = i
        flips[src] = a.flips[i]
    value = [0] * a.n
    for v, w in enumerate(a.value):
        value[w] = v
    return Automorphism(a.n, a.d, tuple(perm), tuple(flips), tuple(value))


def power(a: Automorphism, k: int) -> Automorphism:
    result = identity(a.cube)
    for _ in range(k):
        result = compose(result, a)
    return result


@lru_cache(maxsize=64)
def _coords(cube: CubeParams) -> tuple[np.ndarray, np.ndarray]:
    coords = np.array(cube.points(), dtype=np.int64).reshape(cube.size, cube.d)
    return coords, cube.n ** np.arange(cube.d, dtype=np.int64)


def point_map_array(a: Automorphism) -> np.ndarray:
    coords, weights = _coords(a.cube)
    moved = coords[:, list(a.perm)]
    moved = np.where(np.array(a.flips, dtype=bool), a.n - 1 - moved, moved)
    return np.array(a.value, dtype=np.int64)[moved] @ weights


def point_map(a: Automorphism) -> tuple[int, ...]:
    """Image index of every point index."""
    return tuple(point_map_array(a).tolist())


def group_order(cube: CubeParams) -> int:
    if cube.d < 2:
        raise Unsupported("group order is only defined here for d >= 2")
    if cube.n == 2:
        return math.factorial(2 ** cube.d)
    k = cube.n // 2
    return 2 ** (cube.d - 1 + k) * math.factorial(cube.d) * math.factorial(k)


def rotation_group_order(d: int) -> int:
    return 2 ** (d - 1) * math.factorial(d)


def value_group_order(n: int) -> int:
    k = n // 2
    return math.prod(2 * k - 2 * i for i in range(k))


def symmetric_value_perms(n: int) -> Iterator[tuple[int, ...]]:
    """All permutations of [n] with the symmetry property, in lexicographic order."""
    half = n // 2
    pi = [-1] * n
    if n % 2:
        pi[half] = half

    def extend(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == half:
            yield tuple(pi)
            return
        for v in range(n):
            if v == n - 1 - v or v in pi[:pos] or n - 1 - v in pi[:pos]:
                continue
            pi[pos], pi[n - 1 - pos] = v, n - 1 - v
            yield from extend(pos + 1)
        pi[pos] = pi[n - 1 - pos] = -1

    yield from extend(0)


def coordinate_parts(d: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Canonical (perm, flips) pairs in enumeration order."""
    return [
        (perm, (0,) + rest)
        for perm in itertools.permutations(range(d))
        for rest in itertools.product((0, 1), repeat=d - 1)
    ]


def enumerate_group(cube: CubeParams, cap: int = DEFAULT_CAP,
                    start: int = 0, stop: int | None = None) -> Iterator[Automorphism]:
    """Every canonical triple exactly once, lexicographic in (perm, flips, value).

    ``start``/``stop`` select an index range of the global order, so disjoint
    ranges can be walked independently.
    """
    _require_group_cube(cube)
    order = group_order(cube)
    if order > cap:
        raise CapExceeded(order, cap)
    stop = order if stop is None else min(stop, order)
    values = list(symmetric_value_perms(cube.n))
    parts = coordinate_parts(cube.d)
    for idx in range(start, stop):
        c, v = divmod(idx, len(values))
        perm, flips = parts[c]
        yield Automorphism(cube.n, cube.d, perm, flips, values[v])


class GroupTable:
    """Point maps of the whole group as a dense array, in enumeration order."""

    def __init__(self, cube: CubeParams, cap: int = DEFAULT_CAP):
        _require_group_cube(cube)
        self.cube = cube
        self.order = group_order(cube)
        if self.order > cap:
            raise CapExceeded(self.order, cap)
        self.values = np.array(list(symmetric_value_perms(cube.n)), dtype=np.int64)
        self.parts = coordinate_parts(cube.d)
        coords, weights = _coords(cube)
        dtype = np.int16 if cube.size < 2 ** 15 else np.int32
        maps = np.empty((self.order, cube.size), dtype=dtype)
        nv = len(self.values)
        for c, (perm, flips) in enumerate(self.parts):
            moved = coords[:, list(perm)]
            flip = np.array(flips, dtype=bool)
            moved = np.where(flip, cube.n - 1 - moved, moved)
            maps[c * nv:(c + 1) * nv] = self.values[:, moved] @ weights
        self.maps = maps
        self._inverse: np.ndarray | None = None

    @property
    def inverse_maps(self) -> np.ndarray:
        if self._inverse is None:
            inv = np.empty_like(self.maps)
            rows = np.arange(self.order)[:, None]
            inv[rows, self.maps] = np.arange(self.cube.size, dtype=self.maps.dtype)
            self._inverse = inv
        return self._inverse

    def element(self, idx: int) -> Automorphism:
        c, v = divmod(int(idx), len(self.values))
        perm, flips = self.parts[c]
        return Automorphism(self.cube.n, self.cube.d, perm, flips,
                            tuple(int(x) for x in self.values[v]))

    def index_of(self, a: Automorphism) -> int:
        c = self.parts.index((a.perm, a.flips))
        v = int(np.flatnonzero((self.values == np.array(a.value)).all(axis=1))[0])
        return c * len(self.values) + v

    def __len__(self) -> int:
        return self.order


@lru_cache(maxsize=8)
def group_table(cube: CubeParams, cap: int = DEFAULT_CAP) -> GroupTable:
    return GroupTable(cube, cap)


def _check_bijection(cube: CubeParams, m: Sequence[int]) -> None:
    if len(m) != cube.size or sorted(m) != list(range(cube.size)):
        raise NotABijection(f"map of length {len(m)} is not a bijection on {cube.size} points")


@lru_cache(maxsize=32)
def _line_sets(cube: CubeParams) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(line.points) for line in enumerate_lines(cube))


def is_automorphism(cube: CubeParams, m: Sequence[int]) -> bool:
    """Whether the point map ``m`` (image index per point index) preserves lines."""
    m = [int(x) for x in m]
    _check_bijection(cube, m)
    lines = _line_sets(cube)
    return all(frozenset(m[i] for i in line) in lines for line in lines)


def factor_automorphism(cube: CubeParams, m: Sequence[int]) -> Automorphism:
    """The canonical triple whose point map is ``m``.

    Builds a word ``A`` in value permutations, rotations and the axial swap
    such that ``m`` followed by ``A`` fixes all corners and the edge
    ``{[i,0,...,0]}`` pointwise; that residue is the identity, so ``m`` is
    the inverse of ``A``.
    """
    _require_group_cube(cube)
    target = np.array([int(x) for x in m], dtype=np.int64)
    _check_bijection(cube, target.tolist())
    if not is_automorphism(cube, target.tolist()):
        raise NotAnAutomorphism("the point map does not preserve lines")
    n, d = cube.n, cube.d
    word = identity(cube)

    def residual(p: Sequence[int]) -> Point:
        return apply(word, cube.point(int(target[cube.index(p)])))

    def extend(step: Automorphism) -> None:
        nonlocal word
        word = compose(word, step)

    # move the image of the origin to a corner, then back to the origin
    origin = (0,) * d
    q = residual(origin)
    i = min(q[0], n - 1 - q[0])
    if any(min(x, n - 1 - x) != i for x in q):
        raise NotAnAutomorphism(f"origin maps to {q}, which is off the main diagonals")
    if i != 0:
        extend(value_perm(_swap_pairs(n, i, 0), cube))
    c = residual(origin)
    bits = [1 if x else 0 for x in c]
    perm = list(range(d))
    if sum(bits) % 2:
        perm[0], perm[1] = 1, 0
    extend(signed_perm(cube, perm, [bits[perm[k]] for k in range(d)]))

    # fix the neighbours of the origin one coordinate at a time
    for axis in range(d - 1):
        p = _unit(d, axis, n - 1)
        image = residual(p)
        moved = [k for k, x in enumerate(image) if x]
        if len(moved) != 1 or image[moved[0]] != n - 1:
            raise NotAnAutomorphism(f"neighbour {p} of the origin maps to {image}")
        j = moved[0]
        if j == axis:
            continue
        if axis == d - 2:
            extend(axial(cube))
            continue
        spare = max(k for k in range(axis, d) if k not in (axis, j))
        cycle = list(range(d))
        cycle[axis], cycle[j], cycle[spare] = j, spare, axis
        extend(signed_perm(cube, cycle, [0] * d))

    # pin the edge {[v,0,...,0]} pointwise with value permutations
    for v in range(1, n // 2):
        image = residual(_unit(d, 0, v))
        w = image[0]
        if any(image[1:]) or not v <= w <= n - 1 - v:
            raise NotAnAutomorphism(f"edge point {_unit(d, 0, v)} maps to {image}")
        if w != v:
            extend(value_perm(_swap_pairs(n, w, v), cube))

    for idx in range(cube.size):
        if residual(cube.point(idx)) != cube.point(idx):
            raise NotAnAutomorphism("residue after normalisation is not the identity")
    return inverse(word)


def _unit(d: int, axis: int, v: int) -> Point:
    p = [0] * d
    p[axis] = v
    return tuple(p)


def _swap_pairs(n: int, a: int, b: int) -> list[int]:
    """Symmetric value permutation exchanging a<->b and n-1-a<->n-1-b."""
    pi = list(range(n))
    pi[a], pi[b] = b, a
    pi[n - 1 - a], pi[n - 1 - b] = n - 1 - b, n - 1 - a
    return pi


def corner_indices(cube: CubeParams) -> list[int]:
    return sorted(cube.index(p) for p in corners(cube))


_TEXT = re.compile(r"perm=\[([^\]]*)\]\s+flips=\[([^\]]*)\]\s+value=\[([^\]]*)\]")


def format_automorphism(a: Automorphism) -> str:
    def seq(xs: Sequence[int]) -> str:
        return ",".join(str(x) for x in xs)

    return f"perm=[{seq(a.perm)}] flips=[{seq(a.flips)}] value=[{seq(a.value)}]"


def parse_automorphism(text: str, cube: CubeParams) -> Automorphism:
    match = _TEXT.fullmatch(text.strip())
    if not match:
        raise ValueError(f"cannot parse automorphism {text!r}")

    def ints(s: str) -> tuple[int, ...]:
        return tuple(int(x) for x in s.split(",") if x.strip())

    perm, flips, value = (ints(g) for g in match.groups())
    if len(perm) != cube.d or len(value) != cube.n:
        raise ValueError(f"automorphism {text!r} does not fit {cube}")
    return Automorphism(cube.n, cube.d, perm, flips, value)
