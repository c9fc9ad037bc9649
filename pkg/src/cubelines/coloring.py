"""Colorings of n^d, canonical forms and the Colored Cube Isomorphism decision."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Optional

import numpy as np

from .cube import CubeParams
from .group import (DEFAULT_CAP, Automorphism, GroupError, compose, group_table,
                    identity, inverse, point_map_array)

TTT_SYMBOLS = {".": 0, "x": 1, "o": 2}
CHUNK = 1 << 15


@dataclass(frozen=True)
class Coloring:
    cube: CubeParams
    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        arr = np.asarray(self.colors, dtype=np.int64).ravel()
        if arr.size != self.cube.size:
            raise ValueError(f"coloring has {arr.size} entries, {self.cube} has {self.cube.size} points")
        if self.k < 1 or (arr.size and (arr.min() < 0 or arr.max() >= self.k)):
            raise ValueError(f"colors must lie in [0, {self.k})")
        if not (isinstance(self.colors, tuple) and all(type(c) is int for c in self.colors)):
            object.__setattr__(self, "colors", tuple(arr.tolist()))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.colors, dtype=np.int16)
        arr.flags.writeable = False
        return arr

    @cached_property
    def histogram(self) -> tuple[int, ...]:
        return tuple(np.bincount(self.array, minlength=self.k).tolist())

    def to_json(self) -> str:
        return json.dumps({"n": self.cube.n, "d": self.cube.d, "k": self.k,
                           "colors": list(self.colors)})

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        data = json.loads(text)
        try:
            return cls(CubeParams(int(data["n"]), int(data["d"])), int(data["k"]),
                       tuple(data["colors"]))
        except KeyError as exc:
            raise ValueError(f"coloring JSON lacks field {exc}") from None

    @classmethod
    def from_ttt(cls, text: str, cube: CubeParams) -> "Coloring":
        """Board string over ``.``, ``x``, ``o`` in point-index order."""
        text = "".join(text.split())
        bad = set(text) - set(TTT_SYMBOLS)
        if bad:
            raise ValueError(f"unexpected board symbols {sorted(bad)}")
        return cls(cube, 3, tuple(TTT_SYMBOLS[ch] for ch in text))

    def to_ttt(self) -> str:
        symbols = {v: ch for ch, v in TTT_SYMBOLS.items()}
        return "".join(symbols[c] for c in self.colors)


@dataclass(frozen=True)
class CanonicalForm:
    coloring: Coloring
    witness: Automorphism


def _check_cube(a: Automorphism, s: Coloring) -> None:
    if (a.n, a.d) != (s.cube.n, s.cube.d):
        raise GroupError(f"automorphism of {a.n}^{a.d} applied to a coloring of {s.cube}")


def apply_to_coloring(a: Automorphism, s: Coloring) -> Coloring:
    """The coloring r with r[a(p)] = s[p]."""
    _check_cube(a, s)
    out = np.empty(s.cube.size, dtype=np.int16)
    out[point_map_array(a)] = s.array
    return Coloring(s.cube, s.k, tuple(out.tolist()))


def _chunk_min(images: np.ndarray) -> int:
    """Row index of the first lexicographically smallest row."""
    rows = np.arange(images.shape[0])
    for col in range(images.shape[1]):
        column = images[rows, col]
        rows = rows[column == column.min()]
        if rows.size == 1:
            break
    return int(rows[0])


def _minimum_image(colors: np.ndarray, inv: np.ndarray, threads: int) -> tuple[int, np.ndarray]:
    starts = range(0, inv.shape[0], CHUNK)

    def scan(start: int) -> tuple[int, np.ndarray]:
        images = colors[inv[start:start + CHUNK]]
        row = _chunk_min(images)
        return start + row, images[row]

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(scan, starts))
    else:
        results = [scan(s) for s in starts]
    best_idx, best = results[0]
    for idx, img in results[1:]:
        diff = np.flatnonzero(img != best)
        if diff.size and img[diff[0]] < best[diff[0]]:
            best_idx, best = idx, img
    return best_idx, best


def canonical_form(s: Coloring, cap: int = DEFAULT_CAP, threads: int = 1) -> CanonicalForm:
    """Lexicographically smallest coloring in the orbit of ``s``.

    The witness is the first group element, in enumeration order, that maps
    ``s`` onto it.  Results are memoised per coloring.
    """
    return _canonical_form(s, cap, max(1, threads))


@lru_cache(maxsize=4096)
def _canonical_form(s: Coloring, cap: int, threads: int) -> CanonicalForm:
    table = group_table(s.cube, cap)
    if len(set(s.colors)) <= 1:
        return CanonicalForm(s, identity(s.cube))
    idx, best = _minimum_image(s.array, table.inverse_maps, threads)
    return CanonicalForm(Coloring(s.cube, s.k, tuple(best.tolist())), table.element(idx))


def are_isomorphic(s1: Coloring, s2: Coloring, cap: int = DEFAULT_CAP) -> Optional[Automorphism]:
    """Some automorphism carrying s1 onto s2, or None."""
    if s1.cube != s2.cube or s1.k != s2.k:
        raise ValueError("colorings must share the cube and the number of colors")
    if s1.histogram != s2.histogram:
        return None
    c1 = canonical_form(s1, cap)
    c2 = canonical_form(s2, cap)
    if c1.coloring != c2.coloring:
        return None
    return compose(c1.witness, inverse(c2.witness))


def stabilizer(s: Coloring, cap: int = DEFAULT_CAP) -> list[Automorphism]:
    table = group_table(s.cube, cap)
    hits = np.flatnonzero((s.array[table.inverse_maps] == s.array).all(axis=1))
    return [table.element(i) for i in hits]


def orbit_and_stabilizer_size(s: Coloring, cap: int = DEFAULT_CAP) -> tuple[int, int]:
    table = group_table(s.cube, cap)
    images = s.array[table.inverse_maps]
    stab = int((images == s.array).all(axis=1).sum())
    return table.order // stab, stab


def orbit(s: Coloring, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    table = group_table(s.cube, cap)
    images = s.array[table.inverse_maps]
    return {tuple(row) for row in np.unique(images, axis=0).tolist()}


def random_coloring(cube: CubeParams, k: int, rng: np.random.Generator) -> Coloring:
    return Coloring(cube, k, tuple(rng.integers(0, k, cube.size).tolist()))

