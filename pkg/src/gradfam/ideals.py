"""Monomial ideals of A = R[X_1, ..., X_d] over a chain Artinian ring R.

R is modelled by its length ``l``: the ideals of R are the powers m^c of
the maximal ideal, 0 <= c <= l, with m^l = 0.  A generator ``(c, a)``
stands for the ideal m^c * x^a * A, and an ideal J is stored by its
minimal generators.  Everything about J is captured by the level function

    lambda_J(a) = min{c : m^c x^a is contained in J}   (l if no such c),

so that the coefficient ideal of J at x^a is m^lambda_J(a) and the
length of A/J is the sum of lambda_J over N^d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from gradfam.lattice import Exponent, as_exponent, box, deglex_key, exponents_of_degree

INFINITE = math.inf

# refuse level tables larger than this many cells
MAX_TABLE_CELLS = 50_000_000


class DimensionMismatch(ValueError):
    pass


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ChainRing:
    """Artinian local ring with ideal chain R > m > m^2 > ... > m^length = 0.

    ``length == 1`` is the field case.
    """

    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"chain ring length must be >= 1, got {self.length}")

    def mul_level(self, i: int, j: int) -> int:
        """Level of m^i * m^j."""
        return min(i + j, self.length)

    def ideal_length(self, c: int) -> int:
        """Length of the R-module m^c."""
        return self.length - min(c, self.length)


FIELD = ChainRing(1)


class LevelGenerator(NamedTuple):
    level: int
    exponent: Exponent


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal held by its minimal level generators.

    Build instances with :func:`minimalize` or the constructors below; the
    raw initializer trusts that ``gens`` is already minimal and canonically
    ordered.
    """

    ring: ChainRing
    dim: int
    gens: tuple[LevelGenerator, ...] = field(default=())

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")

    @property
    def length(self) -> int:
        return self.ring.length

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_gens(cls, ring, dim, raw) -> "MonomialIdeal":
        return minimalize(ring, dim, raw)

    @classmethod
    def unit(cls, ring: ChainRing, dim: int) -> "MonomialIdeal":
        return cls(ring, dim, (LevelGenerator(0, (0,) * dim),))

    @classmethod
    def zero(cls, ring: ChainRing, dim: int) -> "MonomialIdeal":
        return cls(ring, dim, ())

    @classmethod
    def maximal(cls, ring: ChainRing, dim: int) -> "MonomialIdeal":
        """The irrelevant ideal (X_1, ..., X_d)."""
        return cls.maximal_power(ring, dim, 1)

    @classmethod
    def maximal_power(cls, ring: ChainRing, dim: int, k: int) -> "MonomialIdeal":
        """(X_1, ..., X_d)^k, generated by every monomial of degree k."""
        if k < 0:
            raise ValueError("power must be non-negative")
        return cls(ring, dim, tuple(LevelGenerator(0, a) for a in exponents_of_degree(dim, k)))

    # -- conveniences --------------------------------------------------------

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return power(self, n)

    def __str__(self):
        return format_ideal(self, sep="; ") or "(0)"

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @cached_property
    def pure_powers(self) -> tuple[int, ...] | None:
        """Smallest k with X_i^k in J for each axis, or None if some axis has none.

        Only level-0 generators count: m^c X_i^k with c > 0 never puts a
        power of X_i itself into J.
        """
        best = [None] * self.dim
        for c, a in self.gens:
            if c:
                continue
            support = [i for i, ai in enumerate(a) if ai]
            if not support:
                return (0,) * self.dim
            if len(support) == 1:
                i = support[0]
                if best[i] is None or a[i] < best[i]:
                    best[i] = a[i]
        if any(b is None for b in best):
            return None
        return tuple(best)

    @cached_property
    def level_table(self) -> np.ndarray | None:
        """lambda_J over the box prod [0, p_i) where p_i are the pure powers.

        lambda_J vanishes outside this box.  Built by placing generator
        levels and sweeping a running minimum along every axis, which is
        the usual order-ideal closure.  None when J is not m_A-primary.
        """
        shape = self.pure_powers
        if shape is None:
            return None
        if math.prod(shape) > MAX_TABLE_CELLS:
            raise MemoryError(f"level table of shape {shape} is too large")
        table = np.full(shape, self.length, dtype=np.int64)
        for c, a in self.gens:
            if all(ai < bi for ai, bi in zip(a, shape)):
                if c < table[a]:
                    table[a] = c
        for axis in range(self.dim):
            np.minimum.accumulate(table, axis=axis, out=table)
        return table


def _check_pair(J1: MonomialIdeal, J2: MonomialIdeal):
    if J1.ring != J2.ring:
        raise RingMismatch(f"{J1.ring} vs {J2.ring}")
    if J1.dim != J2.dim:
        raise DimensionMismatch(f"dimension {J1.dim} vs {J2.dim}")


def _divides(g: Sequence[int], a: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(g, a))


def minimalize(ring: ChainRing, dim: int, raw: Iterable) -> MonomialIdeal:
    """Drop dominated generators from ``raw``.

    ``(c, a)`` is dominated by ``(c', a')`` when c' <= c and a' <= a
    componentwise.  The result is sorted by deglex of the exponent.
    """
    best: dict[Exponent, int] = {}
    for c, a in raw:
        a = as_exponent(a)
        if len(a) != dim:
            raise DimensionMismatch(f"exponent {a} in an ideal of dimension {dim}")
        c = int(c)
        if not 0 <= c < ring.length:
            raise ValueError(f"level {c} outside [0, {ring.length})")
        if best.get(a, ring.length) > c:
            best[a] = c
    if len(best) > VECTOR_THRESHOLD:
        exps = np.array(list(best), dtype=np.int64)
        shape = tuple(int(x) + 1 for x in exps.max(axis=0))
        if math.prod(shape) <= VECTOR_MAX_CELLS:
            levels = np.fromiter(best.values(), dtype=np.int64, count=len(best))
            return _minimal_from_table(ring, dim, _placed_levels(ring, shape, exps, levels))
    return _minimal_by_scan(ring, dim, best)


# above this many candidates, minimalize on a dense table when it fits
VECTOR_THRESHOLD = 64
VECTOR_MAX_CELLS = 4_000_000


def _minimal_by_scan(ring, dim, best: dict) -> MonomialIdeal:
    kept: list[LevelGenerator] = []
    # a strict dominator has smaller total degree, so it is already kept
    for a, c in sorted(best.items(), key=lambda item: (sum(item[0]), item[1])):
        if not any(kc <= c and _divides(ka, a) for kc, ka in kept):
            kept.append(LevelGenerator(c, a))
    return _canonical(ring, dim, kept)


def _canonical(ring, dim, gens) -> MonomialIdeal:
    gens = sorted(gens, key=lambda g: (deglex_key(g.exponent), g.level))
    return MonomialIdeal(ring, dim, tuple(gens))


def _placed_levels(ring, shape, exps: np.ndarray, levels: np.ndarray) -> np.ndarray:
    table = np.full(shape, ring.length, dtype=np.int64)
    np.minimum.at(table, tuple(exps.T), levels)
    return table


def _minimal_from_table(ring, dim, placed: np.ndarray) -> MonomialIdeal:
    """Minimal generators of the levels placed on a dense table.

    ``(c, a)`` survives exactly when c is below the closed level at every
    a - e_i, i.e. nothing strictly under a reaches level c.
    """
    closed = placed.copy()
    for axis in range(dim):
        np.minimum.accumulate(closed, axis=axis, out=closed)
    below = np.full(placed.shape, ring.length, dtype=np.int64)
    for axis in range(dim):
        src = [slice(None)] * dim
        dst = [slice(None)] * dim
        src[axis] = slice(None, -1)
        dst[axis] = slice(1, None)
        np.minimum(below[tuple(dst)], closed[tuple(src)], out=below[tuple(dst)])
    mask = placed < below
    points = np.argwhere(mask)
    values = placed[mask]
    gens = [LevelGenerator(int(c), tuple(int(x) for x in a)) for c, a in zip(values, points)]
    return _canonical(ring, dim, gens)


def level_of(J: MonomialIdeal, a: Sequence[int]) -> int:
    """lambda_J(a); m^c x^a lies in J exactly when c >= lambda_J(a)."""
    if len(a) != J.dim:
        raise DimensionMismatch(f"exponent of dimension {len(a)} in ideal of dimension {J.dim}")
    level = J.length
    for c, g in J.gens:
        if c < level and _divides(g, a):
            level = c
            if level == 0:
                break
    return level


def product(J1: MonomialIdeal, J2: MonomialIdeal) -> MonomialIdeal:
    _check_pair(J1, J2)
    ring = J1.ring
    if len(J1.gens) * len(J2.gens) > VECTOR_THRESHOLD and J1.gens and J2.gens:
        e1 = np.array([a for _, a in J1.gens], dtype=np.int64)
        e2 = np.array([a for _, a in J2.gens], dtype=np.int64)
        shape = tuple(int(x) + 1 for x in e1.max(axis=0) + e2.max(axis=0))
        if math.prod(shape) <= VECTOR_MAX_CELLS:
            c1 = np.array([c for c, _ in J1.gens], dtype=np.int64)
            c2 = np.array([c for c, _ in J2.gens], dtype=np.int64)
            levels = (c1[:, None] + c2[None, :]).ravel()
            exps = (e1[:, None, :] + e2[None, :, :]).reshape(-1, J1.dim)
            alive = levels < ring.length
            placed = _placed_levels(ring, shape, exps[alive], levels[alive])
            return _minimal_from_table(ring, J1.dim, placed)
    raw = []
    for c1, a1 in J1.gens:
        for c2, a2 in J2.gens:
            c = ring.mul_level(c1, c2)
            if c < ring.length:
                raw.append((c, tuple(x + y for x, y in zip(a1, a2))))
    return minimalize(ring, J1.dim, raw)


def power(J: MonomialIdeal, n: int) -> MonomialIdeal:
    """J^n by repeated squaring; J^0 is the unit ideal."""
    if n < 0:
        raise ValueError("power must be non-negative")
    result = MonomialIdeal.unit(J.ring, J.dim)
    base = J
    while n:
        if n & 1:
            result = product(result, base)
        n >>= 1
        if n:
            base = product(base, base)
    return result


def nilpotency_bound(J: MonomialIdeal) -> int | float:
    """Least N with m_A^N contained in J, or INFINITE."""
    table = J.level_table
    if table is None:
        return INFINITE
    positive = np.nonzero(table)
    if not positive[0].size:
        return 0
    degrees = np.sum(np.stack(positive), axis=0)
    return int(degrees.max()) + 1


def colength(J: MonomialIdeal) -> int | float:
    """Length of A/J over R, i.e. the sum of lambda_J over N^d."""
    table = J.level_table
    if table is None:
        return INFINITE
    return int(table.sum())


def contains(J1: MonomialIdeal, J2: MonomialIdeal) -> bool:
    """True when J2 is a subset of J1."""
    _check_pair(J1, J2)
    table = J1.level_table
    if table is None:
        return all(level_of(J1, a) <= c for c, a in J2.gens)
    shape = table.shape
    # lambda vanishes once any coordinate reaches its pure power
    return all(
        c >= (table[a] if all(x < b for x, b in zip(a, shape)) else 0)
        for c, a in J2.gens
    )


def brute_colength(J: MonomialIdeal, bounds: int | Sequence[int]) -> int:
    """Sum of lambda_J over the box prod [0, bounds_i), each value found by
    scanning every generator.

    Raises ValueError if lambda_J is positive anywhere on the outer face of
    the box, since then the box may miss part of the staircase.
    """
    if isinstance(bounds, int):
        bounds = (bounds,) * J.dim
    bounds = tuple(bounds)
    if len(bounds) != J.dim:
        raise DimensionMismatch("box dimension does not match ideal")
    if J.is_zero or any(b < 1 for b in bounds):
        raise ValueError("box too small: the level function never vanishes")
    total = 0
    for a in box(bounds):
        level = J.length
        for c, g in J.gens:
            if all(x <= y for x, y in zip(g, a)):
                level = min(level, c)
        if level and any(x == b - 1 for x, b in zip(a, bounds)):
            raise ValueError(f"box too small: level {level} at boundary point {a}")
        total += level
    return total


def is_m_primary(J: MonomialIdeal) -> bool:
    return J.pure_powers is not None


# -- text serialization ----------------------------------------------------


def format_ideal(J: MonomialIdeal, sep: str = "\n") -> str:
    """One generator per entry, as ``level c: a_1 ... a_d``."""
    return sep.join(
        f"level {c}: " + " ".join(str(x) for x in a) for c, a in J.gens
    )


def parse_ideal(text: str, ring: ChainRing, dim: int | None = None) -> MonomialIdeal:
    """Inverse of :func:`format_ideal`; entries split on newlines or ``;``.

    An empty text is the zero ideal, which needs an explicit ``dim``.
    """
    raw = []
    for chunk in text.replace(";", "\n").splitlines():
        chunk = chunk.strip()
        if not chunk:
            continue
        head, colon, body = chunk.partition(":")
        words = head.split()
        if not colon or len(words) != 2 or words[0] != "level":
            raise ValueError(f"malformed generator {chunk!r}; expected 'level c: a_1 ... a_d'")
        try:
            c = int(words[1])
            a = tuple(int(x) for x in body.split())
        except ValueError:
            raise ValueError(f"non-integer entry in generator {chunk!r}") from None
        if not a:
            raise ValueError(f"generator {chunk!r} has no exponent")
        if dim is None:
            dim = len(a)
        raw.append((c, a))
    if dim is None:
        raise ValueError("cannot infer the dimension of an empty generator list")
    return minimalize(ring, dim, raw)
