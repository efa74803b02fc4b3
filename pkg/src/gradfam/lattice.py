"""Exponent vectors and the degree lexicographic order on N^d.

Exponents are plain tuples of non-negative ints. The lexicographic
tie-break treats X_1 as the largest variable, so within one degree
(2, 0) > (1, 1) > (0, 2).
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Iterator, Sequence

Exponent = tuple[int, ...]


def as_exponent(coords: Sequence[int], dim: int | None = None) -> Exponent:
    """Validate ``coords`` and return it as a tuple."""
    a = tuple(int(c) for c in coords)
    if not a:
        raise ValueError("exponent must have at least one coordinate")
    if any(c < 0 for c in a):
        raise ValueError(f"negative coordinate in exponent {a}")
    if dim is not None and len(a) != dim:
        raise ValueError(f"exponent {a} has dimension {len(a)}, expected {dim}")
    return a


def total_degree(a: Sequence[int]) -> int:
    return sum(a)


def deglex_key(a: Sequence[int]) -> tuple[int, Exponent]:
    """Sort key realising deglex; tuple comparison is lex with X_1 first."""
    return (sum(a), tuple(a))


def deglex_cmp(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``a`` is smaller, equal or larger than ``b``."""
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    ka, kb = deglex_key(a), deglex_key(b)
    return (ka > kb) - (ka < kb)


def deglex_succ(a: Sequence[int]) -> Exponent:
    """Immediate successor of ``a`` in deglex.

    Inside a degree class the rightmost coordinate that still has mass to
    its right is bumped and the remainder is pushed to the last slot. The
    top element s*e_1 of degree s is followed by (s+1)*e_d.
    """
    a = list(a)
    d = len(a)
    tail = 0
    for i in range(d - 2, -1, -1):
        tail += a[i + 1]
        if tail > 0:
            a[i] += 1
            a[i + 1:] = [0] * (d - i - 1)
            a[-1] = tail - 1
            return tuple(a)
    return (0,) * (d - 1) + (sum(a) + 1,)


def project(a: Sequence[int]) -> Exponent:
    """Drop the last coordinate (the projection N^d -> N^(d-1))."""
    return tuple(a[:-1])


def exponents_of_degree(dim: int, s: int) -> Iterator[Exponent]:
    """All exponents of total degree ``s`` in increasing deglex order."""
    if dim == 1:
        yield (s,)
        return
    for first in range(s + 1):
        for rest in exponents_of_degree(dim - 1, s - first):
            yield (first,) + rest


def exponents_below(dim: int, bound: int) -> Iterator[Exponent]:
    """All exponents with total degree < ``bound``, in increasing deglex order."""
    for s in range(bound):
        yield from exponents_of_degree(dim, s)


def box(shape: Sequence[int]) -> Iterator[Exponent]:
    return itertools.product(*(range(b) for b in shape))


def count_degree_below(dim: int, bound: int) -> int:
    """#{b in N^dim : |b| < bound}, which is C(bound + dim - 1, dim).

    ``dim = 0`` is allowed (the single empty vector), since the growth
    bound for d = 1 projects onto N^0.
    """
    if dim < 0 or bound < 0:
        raise ValueError("dim and bound must be non-negative")
    if bound == 0:
        return 0
    return comb(bound + dim - 1, dim)
