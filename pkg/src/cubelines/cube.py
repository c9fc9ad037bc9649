"""Points, lines and the degree calculus of the combinatorial cube n^d.

Coordinates are 0-based positions ``0..d-1``. A point is a plain tuple of
ints; its index is little-endian mixed radix (coordinate 0 varies fastest).
"""

from __future__ import annotations

import enum
import itertools
import sys
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

PLUS = "+"
MINUS = "-"

Symbol = Union[int, str]
Point = tuple[int, ...]


class NotALine(ValueError):
    pass


@dataclass(frozen=True)
class CubeParams:
    n: int
    d: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not isinstance(self.d, int):
            raise TypeError("n and d must be integers")
        if self.n < 2 or self.d < 1:
            raise ValueError(f"need n >= 2 and d >= 1, got n={self.n}, d={self.d}")
        if self.n ** self.d > sys.maxsize:
            raise OverflowError(f"cube {self.n}^{self.d} has too many points to index")

    @property
    def size(self) -> int:
        return self.n ** self.d

    @cached_property
    def _weights(self) -> tuple[int, ...]:
        return tuple(self.n ** i for i in range(self.d))

    def index(self, p: Sequence[int]) -> int:
        self.check_point(p)
        return sum(x * w for x, w in zip(p, self._weights))

    def point(self, index: int) -> Point:
        if not 0 <= index < self.size:
            raise IndexError(f"point index {index} out of range for {self}")
        coords = []
        for _ in range(self.d):
            index, x = divmod(index, self.n)
            coords.append(x)
        return tuple(coords)

    def points(self) -> list[Point]:
        """All points in index order."""
        return [self.point(i) for i in range(self.size)]

    def check_point(self, p: Sequence[int]) -> None:
        if len(p) != self.d:
            raise ValueError(f"point {tuple(p)} has dimension {len(p)}, expected {self.d}")
        if any(not 0 <= x < self.n for x in p):
            raise ValueError(f"point {tuple(p)} has a coordinate outside [0, {self.n})")

    def __str__(self) -> str:
        return f"{self.n}^{self.d}"


@dataclass(frozen=True)
class LineType:
    """Per-coordinate symbols: ``'+'``, ``'-'`` or a constant value.

    Always stored normalized, i.e. the first non-constant symbol is ``'+'``.
    """

    entries: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        moving = [e for e in entries if e in (PLUS, MINUS)]
        if not moving:
            raise ValueError("a line type needs at least one '+' or '-' entry")
        for e in entries:
            if e not in (PLUS, MINUS) and not (isinstance(e, int) and e >= 0):
                raise ValueError(f"bad line type symbol {e!r}")
        if moving[0] == MINUS:
            entries = tuple(_swap_sign(e) for e in entries)
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return sum(e in (PLUS, MINUS) for e in self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def _swap_sign(e: Symbol) -> Symbol:
    if e == PLUS:
        return MINUS
    if e == MINUS:
        return PLUS
    return e


@dataclass(frozen=True)
class Line:
    type: LineType
    points: tuple[int, ...] = field(compare=False)

    @property
    def dim(self) -> int:
        return self.type.dim


@dataclass(frozen=True)
class Block:
    """Coordinate positions of a point holding ``j`` or ``n-1-j``; ``j <= n-1-j``."""

    j: int
    members: frozenset[int]


class PointKind(enum.Enum):
    CORNER = "corner"
    OUTER = "outer"
    INNER = "inner"


def is_linear_sequence(cube: CubeParams, seq: Sequence[Sequence[int]]) -> bool:
    """True iff ``seq`` (ordered) is a linear sequence of n distinct points."""
    if len(seq) != cube.n:
        return False
    for p in seq:
        cube.check_point(p)
    if len(set(map(tuple, seq))) != len(seq):
        return False
    nonconstant = False
    for column in zip(*seq):
        steps = {b - a for a, b in zip(column, column[1:])}
        if steps == {0}:
            continue
        if all(s > 0 for s in steps) or all(s < 0 for s in steps):
            nonconstant = True
        else:
            return False
    return nonconstant


def _sequence_type(seq: Sequence[Sequence[int]]) -> LineType:
    entries: list[Symbol] = []
    for column in zip(*seq):
        if column[0] == column[-1]:
            entries.append(column[0])
        else:
            entries.append(PLUS if column[0] < column[-1] else MINUS)
    return LineType(tuple(entries))


def type_of_line(cube: CubeParams, points: Iterable[Sequence[int]]) -> LineType:
    pts = [tuple(p) for p in points]
    for p in pts:
        cube.check_point(p)
    if len(pts) != cube.n or len(set(pts)) != cube.n:
        raise NotALine(f"expected {cube.n} distinct points, got {pts}")
    # a linear ordering is monotone in every nonconstant coordinate
    for axis in range(cube.d):
        if len({p[axis] for p in pts}) > 1:
            seq = sorted(pts, key=lambda p: p[axis])
            if is_linear_sequence(cube, seq):
                return _sequence_type(seq)
            break
    raise NotALine(f"points {pts} cannot be ordered into a linear sequence")


def line_points(cube: CubeParams, t: LineType) -> list[Point]:
    """Points of the line of type ``t`` in linear order."""
    if len(t.entries) != cube.d:
        raise ValueError(f"type {t} does not match dimension {cube.d}")
    for e in t.entries:
        if isinstance(e, int) and e >= cube.n:
            raise ValueError(f"constant {e} outside [0, {cube.n})")
    pts = []
    for k in range(cube.n):
        pts.append(tuple(
            k if e == PLUS else cube.n - 1 - k if e == MINUS else e
            for e in t.entries
        ))
    return pts


def line_from_type(cube: CubeParams, t: LineType) -> Line:
    pts = line_points(cube, t)
    return Line(t, tuple(sorted(cube.index(p) for p in pts)))


def line_types(cube: CubeParams) -> Iterable[LineType]:
    """Normalized line types, lexicographic over the alphabet 0..n-1, '+', '-'."""
    alphabet: list[Symbol] = list(range(cube.n)) + [PLUS, MINUS]
    for entries in itertools.product(alphabet, repeat=cube.d):
        first = next((e for e in entries if e in (PLUS, MINUS)), None)
        if first == PLUS:
            yield LineType(entries)


def enumerate_lines(cube: CubeParams) -> list[Line]:
    return [line_from_type(cube, t) for t in line_types(cube)]


def line_count(cube: CubeParams) -> int:
    return ((cube.n + 2) ** cube.d - cube.n ** cube.d) // 2


def dim_of_line(line: Line) -> int:
    return line.type.dim


def classify_point(cube: CubeParams, p: Sequence[int]) -> PointKind:
    cube.check_point(p)
    extreme = [x in (0, cube.n - 1) for x in p]
    if all(extreme):
        return PointKind.CORNER
    if any(extreme):
        return PointKind.OUTER
    return PointKind.INNER


def blocks(cube: CubeParams, p: Sequence[int]) -> list[Block]:
    cube.check_point(p)
    groups: dict[int, set[int]] = {}
    for i, x in enumerate(p):
        groups.setdefault(min(x, cube.n - 1 - x), set()).add(i)
    return [Block(j, frozenset(m)) for j, m in sorted(groups.items())]


def is_central_block(cube: CubeParams, b: Block) -> bool:
    return cube.n % 2 == 1 and b.j == (cube.n - 1) // 2


def active_line_count(cube: CubeParams, b: Block) -> int:
    """Lines through the point that move some coordinate of block ``b``."""
    k = len(b.members)
    if is_central_block(cube, b):
        return (3 ** k - 1) // 2
    return 2 ** k - 1


def degree(cube: CubeParams, p: Sequence[int]) -> int:
    return sum(active_line_count(cube, b) for b in blocks(cube, p))


def main_diagonals(cube: CubeParams) -> list[Line]:
    return [line for line in enumerate_lines(cube) if line.dim == cube.d]


def edges(cube: CubeParams) -> list[Line]:
    def is_corner(i: int) -> bool:
        return classify_point(cube, cube.point(i)) is PointKind.CORNER

    return [
        line for line in enumerate_lines(cube)
        if line.dim == 1 and sum(map(is_corner, line.points)) == 2
    ]


def corners(cube: CubeParams) -> list[Point]:
    return [p for p in itertools.product((0, cube.n - 1), repeat=cube.d)]


def incidence(cube: CubeParams) -> list[list[int]]:
    """For every point index, the positions in ``enumerate_lines`` of its lines."""
    table: list[list[int]] = [[] for _ in range(cube.size)]
    for k, line in enumerate(enumerate_lines(cube)):
        for i in line.points:
            table[i].append(k)
    return table
