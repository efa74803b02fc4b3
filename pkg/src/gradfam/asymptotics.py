"""Length sequences of graded families and their asymptotic diagnostics.

All ratios are exact :class:`~fractions.Fraction` values.  Nothing here
proves a limit exists; the reports expose windowed evidence only.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence, TypeVar

from gradfam.families import GradedFamily
from gradfam.ideals import INFINITE, MonomialIdeal, colength, nilpotency_bound, product
from gradfam.lattice import count_degree_below

T = TypeVar("T")
U = TypeVar("U")

THREADS_ENV = "GRADFAM_THREADS"


class InfiniteColengthError(ValueError):
    def __init__(self, n, message=None):
        self.n = n
        super().__init__(message or f"I_{n} has infinite colength")


class DegenerateIdealError(ValueError):
    pass


def worker_count() -> int:
    """Thread cap from GRADFAM_THREADS; 0 or unset means one per CPU."""
    raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0")
    return n or min(32, os.cpu_count() or 1)


def ordered_map(fn: Callable[[T], U], items: Iterable[T]) -> list[U]:
    """map() that may fan out over threads; results stay in input order."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def length_sequence(F: GradedFamily, W: int) -> list[int]:
    """[colength(I_0), ..., colength(I_W)]."""
    # ideals first, in order, so incremental builders reuse their cache
    ideals = [F.ideal_at(n) for n in range(W + 1)]
    lengths = ordered_map(colength, ideals)
    for n, value in enumerate(lengths):
        if value == INFINITE:
            raise InfiniteColengthError(n)
    return lengths


def _growth_ratio(diff: int, n: int, d: int) -> Fraction:
    if d == 0:
        return Fraction(diff * n)
    return Fraction(diff, n ** (d - 1))


@dataclass
class GrowthReport:
    """Differences D(n) = l(R/I_{n+1}) - l(R/I_n) for n = 0..W and ratios
    D(n)/n^(d-1) for n = 1..W.

    For d = 0 the ratio column holds D(n) * n.  ``lengths`` runs to W + 1.
    """

    d: int
    window: int
    lengths: list[int]
    diffs: list[int]
    ratios: dict[int, Fraction]
    gamma_window: Fraction | None
    tail_gamma: Fraction | None
    negative_diffs: list[int]
    head_abs: Fraction = Fraction(0)
    tail_abs: Fraction = Fraction(0)

    @property
    def bound_violated(self) -> bool:
        """d = 0 only: |D(n)| * n keeps growing into the top half of the window."""
        return self.d == 0 and self.tail_abs > self.head_abs and self.tail_abs > 0

    @property
    def passed(self) -> bool:
        if self.d == 0:
            return not self.bound_violated
        return self.gamma_window is not None and self.tail_gamma <= self.gamma_window

    def ratio(self, n: int) -> Fraction:
        return self.ratios[n]


def growth_report(F: GradedFamily, W: int) -> GrowthReport:
    if W < 1:
        raise ValueError("window must be >= 1")
    d = F.krull_dim
    lengths = length_sequence(F, W + 1)
    diffs = [lengths[n + 1] - lengths[n] for n in range(W + 1)]
    ratios = {n: _growth_ratio(diffs[n], n, d) for n in range(1, W + 1)}
    values = list(ratios.values())
    tail = [ratios[n] for n in ratios if 2 * n > W]
    head = [ratios[n] for n in ratios if 2 * n <= W]
    return GrowthReport(
        d=d,
        window=W,
        lengths=lengths,
        diffs=diffs,
        ratios=ratios,
        gamma_window=max(values),
        tail_gamma=max(tail),
        negative_diffs=[n for n, v in enumerate(diffs) if v < 0],
        head_abs=max((abs(v) for v in head), default=Fraction(0)),
        tail_abs=max(abs(v) for v in tail),
    )


def _top_quarter(samples: Sequence[T]) -> Sequence[T]:
    k = max(1, -(-len(samples) // 4))
    return samples[-k:]


@dataclass
class VolumeReport:
    d: int
    lengths: list[int]
    samples: list[tuple[int, Fraction]]
    multiplicity_samples: list[tuple[int, Fraction]] = field(default_factory=list)

    @property
    def last(self) -> Fraction:
        return self.samples[-1][1]

    @property
    def tail_spread(self) -> Fraction:
        tail = [v for _, v in _top_quarter(self.samples)]
        return max(tail) - min(tail)


def volume_report(F: GradedFamily, W: int) -> VolumeReport:
    """Samples l(R/I_n) * d! / n^d for n = 1..W."""
    d = F.krull_dim
    if d == 0:
        raise ValueError("volume is undefined for a zero-dimensional family")
    if W < 1:
        raise ValueError("window must be >= 1")
    lengths = length_sequence(F, W)
    scale = factorial(d)
    samples = [(n, Fraction(lengths[n] * scale, n ** d)) for n in range(1, W + 1)]
    return VolumeReport(d=d, lengths=lengths, samples=samples)


def _require_primary(q: MonomialIdeal):
    value = colength(q)
    if value == INFINITE:
        raise InfiniteColengthError(1, "ideal has infinite colength")
    if value == 0:
        raise DegenerateIdealError("unit ideal: multiplicity is trivially 0")


@dataclass
class MultiplicityEstimate:
    lengths: list[int]
    samples: list[tuple[int, Fraction]]
    slope: Fraction

    @property
    def final(self) -> Fraction:
        return self.samples[-1][1]


def multiplicity_estimate(q: MonomialIdeal, S: int) -> MultiplicityEstimate:
    """Samples l(A/q^s) * d! / s^d for s = 1..S.

    ``slope`` is the mean first difference across the top quarter of
    samples; it shrinks to 0 as the samples settle.
    """
    _require_primary(q)
    if S < 1:
        raise ValueError("window must be >= 1")
    d = q.dim
    ideals = [MonomialIdeal.unit(q.ring, d)]
    for _ in range(S):
        ideals.append(product(ideals[-1], q))
    lengths = ordered_map(colength, ideals)
    scale = factorial(d)
    samples = [(s, Fraction(lengths[s] * scale, s ** d)) for s in range(1, S + 1)]
    tail = [v for _, v in _top_quarter(samples)]
    steps = [b - a for a, b in zip(tail, tail[1:])]
    slope = sum(steps, Fraction(0)) / len(steps) if steps else Fraction(0)
    return MultiplicityEstimate(lengths=lengths, samples=samples, slope=slope)


def hilbert_samuel_multiplicity(q: MonomialIdeal, max_power: int = 40, settle: int = 3) -> int:
    """Exact e(q) read off the Hilbert-Samuel function.

    s -> l(A/q^s) agrees with a degree-d polynomial for large s, whose
    d-th finite difference is the constant e(q).  The first value that
    repeats ``settle`` times in a row is returned; ArithmeticError if that
    does not happen by q^max_power.
    """
    _require_primary(q)
    d = q.dim
    lengths = [0]
    current = MonomialIdeal.unit(q.ring, d)
    run = 0
    previous = None
    for s in range(1, max_power + 1):
        current = product(current, q)
        lengths.append(colength(current))
        if len(lengths) < d + 1:
            continue
        diff = lengths[-(d + 1):]
        for _ in range(d):
            diff = [b - a for a, b in zip(diff, diff[1:])]
        value = diff[0]
        run = run + 1 if value == previous else 1
        previous = value
        if run >= settle:
            return value
    raise ArithmeticError(f"Hilbert-Samuel differences did not settle by power {max_power}")


@dataclass
class ComparisonReport:
    volume: VolumeReport
    multiplicities: list[int]
    multiplicity_samples: list[tuple[int, Fraction]]

    @property
    def volume_tail(self) -> Fraction:
        return self.volume.last

    @property
    def multiplicity_tail(self) -> Fraction:
        return self.multiplicity_samples[-1][1]

    @property
    def difference(self) -> Fraction:
        return abs(self.volume_tail - self.multiplicity_tail)


def volume_vs_multiplicity(F: GradedFamily, W: int, S: int) -> ComparisonReport:
    """Volume samples against e(I_s) / s^d for s = 1..S, with e exact."""
    volume = volume_report(F, W)
    d = F.krull_dim
    multiplicities = ordered_map(hilbert_samuel_multiplicity, [F.ideal_at(s) for s in range(1, S + 1)])
    mult = [(s, Fraction(e, s ** d)) for s, e in zip(range(1, S + 1), multiplicities)]
    volume.multiplicity_samples = mult
    return ComparisonReport(volume=volume, multiplicities=multiplicities, multiplicity_samples=mult)


@dataclass(frozen=True)
class Prop42Report:
    r: int
    N: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs


def prop42_check(J: MonomialIdeal, r: int) -> Prop42Report:
    """Compare l(A/m_A^r J) - l(A/J) with l^2 * r * #{b in N^(d-1) : |b| < N + r}."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    N = nilpotency_bound(J)
    if N == INFINITE:
        raise InfiniteColengthError(0, "ideal has infinite colength")
    shifted = product(MonomialIdeal.maximal_power(J.ring, J.dim, r), J)
    lhs = colength(shifted) - colength(J)
    rhs = J.length ** 2 * r * count_degree_below(J.dim - 1, N + r)
    return Prop42Report(r=r, N=N, lhs=lhs, rhs=rhs)
