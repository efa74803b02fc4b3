"""Graded families n -> I_n of monomial ideals.

A graded family has I_0 = (1) and I_m * I_n contained in I_{m+n}; it is a
filtration when moreover I_{n+1} is contained in I_n.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from gradfam.ideals import (
    FIELD,
    INFINITE,
    ChainRing,
    LevelGenerator,
    MonomialIdeal,
    colength,
    contains,
    power,
    product,
)

KINDS = ("power", "scaled-power", "oscillating", "table")


class FamilyWindowError(IndexError):
    pass


@dataclass(frozen=True)
class Scale:
    """A positive scale factor, either rational or a rational multiple of sqrt(2).

    Ceilings are computed by integer comparison, never through floats.
    """

    coeff: Fraction
    surd: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff <= 0:
            raise ValueError(f"scale must be positive, got {self}")

    _SURD = re.compile(r"^\s*(\d+)\s*\*\s*sqrt2\s*(?:/\s*(\d+))?\s*$")
    _RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")

    @classmethod
    def parse(cls, text: str) -> "Scale":
        """Accepts ``p``, ``p/q``, ``sqrt2``, ``p*sqrt2`` and ``p*sqrt2/q``."""
        text = text.strip()
        if re.fullmatch(r"sqrt2(\s*/\s*\d+)?", text):
            text = "1*" + text
        m = cls._SURD.match(text)
        if m:
            return cls(Fraction(int(m.group(1)), int(m.group(2) or 1)), surd=True)
        if "sqrt" in text:
            raise ValueError(f"invalid surd syntax {text!r}; expected 'p*sqrt2/q'")
        m = cls._RATIONAL.match(text)
        if not m:
            raise ValueError(f"invalid scale {text!r}")
        q = int(m.group(2) or 1)
        if q == 0:
            raise ValueError("zero denominator in scale")
        return cls(Fraction(int(m.group(1)), q))

    def __str__(self):
        p, q = self.coeff.numerator, self.coeff.denominator
        if self.surd:
            return f"{p}*sqrt2/{q}"
        return f"{p}/{q}" if q != 1 else str(p)

    def ceil_mul(self, n: int) -> int:
        """ceil(alpha * n) for integer n >= 0."""
        p, q = self.coeff.numerator, self.coeff.denominator
        if not self.surd:
            return -((-p * n) // q)
        if n == 0:
            return 0
        # alpha * n = sqrt(M) / q, and M = 2 p^2 n^2 is never a perfect square
        s = math.isqrt(2 * p * p * n * n)
        return -(-(s + 1) // q)

    @property
    def is_integer(self) -> bool:
        return not self.surd and self.coeff.denominator == 1

    def __float__(self):
        return float(self.coeff) * (math.sqrt(2) if self.surd else 1.0)

    def power_value(self, d: int):
        """alpha^d as a Fraction, or None if it is irrational."""
        if not self.surd:
            return self.coeff ** d
        if d % 2:
            return None
        return self.coeff ** d * 2 ** (d // 2)


@dataclass(frozen=True)
class OscillatingParams:
    t: int
    jumps: tuple[int, ...]

    def tau(self, n: int) -> int:
        """0 or 1 according to the parity of the jump interval holding n.

        Below the first jump the value is 0.
        """
        j = 0
        for i in self.jumps:
            if i <= n:
                j += 1
            else:
                break
        if j == len(self.jumps):
            raise FamilyWindowError(f"n = {n} lies past the last generated jump {self.jumps[-1]}")
        return j % 2


def default_jump_rule(j: int, i_j: int) -> int:
    return 2 ** j * i_j + 2


def jump_sequence(limit: int, rule: Callable[[int, int], int] = default_jump_rule) -> tuple[int, ...]:
    """i_1 = 2 and i_{j+1} = rule(j, i_j), generated until a term exceeds ``limit``.

    The rule must return an even number strictly above 2^j * i_j.
    """
    jumps = [2]
    while jumps[-1] <= limit:
        j = len(jumps)
        nxt = rule(j, jumps[-1])
        if nxt % 2 or nxt <= 2 ** j * jumps[-1]:
            raise ValueError(f"jump rule gave i_{j + 1} = {nxt}, need an even number > {2 ** j * jumps[-1]}")
        jumps.append(nxt)
    return tuple(jumps)


class GradedFamily:
    """n -> I_n together with where it came from.

    ``krull_dim`` is the dimension used when normalising lengths; it is the
    ambient ``dim`` except for the oscillating family, whose ideals really
    live in the zero-dimensional coefficient ring.
    """

    def __init__(self, ring: ChainRing, dim: int, kind: str, builder: Callable[[int], MonomialIdeal],
                 window: int | None = None, params=None, krull_dim: int | None = None):
        if kind not in KINDS:
            raise ValueError(f"unknown family kind {kind!r}")
        self.ring = ring
        self.dim = dim
        self.kind = kind
        self.window = window
        self.params = params
        self.krull_dim = dim if krull_dim is None else krull_dim
        self._builder = builder
        self._cache: dict[int, MonomialIdeal] = {0: MonomialIdeal.unit(ring, dim)}
        self._lock = threading.Lock()

    def ideal_at(self, n: int) -> MonomialIdeal:
        if n < 0:
            raise ValueError("family index must be non-negative")
        with self._lock:
            cached = self._cache.get(n)
        if cached is not None:
            return cached
        ideal = self._builder(n)
        with self._lock:
            return self._cache.setdefault(n, ideal)

    def __getitem__(self, n: int) -> MonomialIdeal:
        return self.ideal_at(n)

    def __repr__(self):
        return f"GradedFamily(kind={self.kind!r}, dim={self.dim}, ring={self.ring}, window={self.window})"


def power_family(q: MonomialIdeal, window: int | None = None) -> GradedFamily:
    """I_n = q^n."""
    if colength(q) == INFINITE:
        raise ValueError("power_family needs an ideal of finite colength")

    family: GradedFamily

    def build(n):
        prev = family._cache.get(n - 1)
        if prev is not None:
            return product(prev, q)
        return power(q, n)

    family = GradedFamily(q.ring, q.dim, "power", build, window=window, params=q)
    return family


def scaled_power_family(alpha: Scale | Fraction | int | str, dim: int, ring: ChainRing = FIELD,
                        window: int | None = None) -> GradedFamily:
    """I_n = m_A^ceil(alpha * n)."""
    if isinstance(alpha, str):
        alpha = Scale.parse(alpha)
    elif not isinstance(alpha, Scale):
        alpha = Scale(Fraction(alpha))

    def build(n):
        return MonomialIdeal.maximal_power(ring, dim, alpha.ceil_mul(n))

    return GradedFamily(ring, dim, "scaled-power", build, window=window, params=alpha)


def oscillating_family(t: int, window: int, rule: Callable[[int, int], int] = default_jump_rule) -> GradedFamily:
    """I_n = m^(t + tau(n)) in a chain ring of length t + 1.

    The chain ideal m^c is carried as (eps^c, X) inside R[X], which has the
    same quotient R/m^c; containments between such ideals match those of
    the chain ideals.  Jumps are generated one past ``window + 1`` so that
    differences up to the window are defined.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if window < 2:
        raise ValueError("oscillating family needs window >= 2")
    ring = ChainRing(t + 1)
    params = OscillatingParams(t, jump_sequence(window + 1, rule))
    x = LevelGenerator(0, (1,))

    def build(n):
        level = t + params.tau(n)
        gens = (LevelGenerator(level, (0,)), x) if level < ring.length else (x,)
        return MonomialIdeal(ring, 1, gens)

    return GradedFamily(ring, 1, "oscillating", build, window=window, params=params, krull_dim=0)


def table_family(ideals: Sequence[MonomialIdeal]) -> GradedFamily:
    """I_n = ideals[n - 1] for 1 <= n <= len(ideals)."""
    ideals = tuple(ideals)
    if not ideals:
        raise ValueError("table family needs at least one ideal")
    ring, dim = ideals[0].ring, ideals[0].dim
    if any(J.ring != ring or J.dim != dim for J in ideals):
        raise ValueError("table entries must share ring and dimension")

    def build(n):
        if n > len(ideals):
            raise FamilyWindowError(f"index {n} past table window {len(ideals)}")
        return ideals[n - 1]

    return GradedFamily(ring, dim, "table", build, window=len(ideals), params=ideals)


@dataclass
class AxiomReport:
    window: int
    graded: bool
    graded_witness: tuple[int, int] | None = None
    filtration: bool = True
    filtration_witness: int | None = None

    @property
    def passed(self) -> bool:
        return self.graded


def check_axioms(F: GradedFamily, window: int) -> AxiomReport:
    """Check I_m I_n in I_{m+n} for 1 <= m <= n, m + n <= window, and
    I_{n+1} in I_n for n < window.  The first violation found is kept.
    """
    if F.window is not None and F.kind == "table" and window > F.window:
        raise FamilyWindowError(f"window {window} exceeds table length {F.window}")
    report = AxiomReport(window, graded=True)
    for s in range(2, window + 1):
        target = F.ideal_at(s)
        for m in range(1, s // 2 + 1):
            if not contains(target, product(F.ideal_at(m), F.ideal_at(s - m))):
                report.graded = False
                report.graded_witness = (m, s - m)
                break
        if not report.graded:
            break
    for n in range(window):
        if not contains(F.ideal_at(n), F.ideal_at(n + 1)):
            report.filtration = False
            report.filtration_witness = n
            break
    return report
