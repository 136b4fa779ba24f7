"""The ML-degree polynomial phi(n, d).

    phi(n, d) = sum over s >= 1 with s(s+1)/2 <= d of
                (s / n) * sum_{|I| = s, sum(I) = d - s} psi_I * LP_I(n)

For each s the inner sum is divided by n exactly before scaling by s.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .exact_arith import Poly, lagrange_interpolate, poly_exact_div
from .identity_suite import mc
from .lascoux_poly import N, Route, lp_poly, lp_singleton_poly, lp_tilde_poly
from .psi_engine import IndexSet, dense_psi_table, psi


@dataclass(frozen=True)
class IndexSetFamily:
    s: int
    total: int
    members: tuple[IndexSet, ...]

    def __iter__(self) -> Iterator[IndexSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class PhiResult:
    d: int
    phi: Poly
    evaluations: dict = field(default_factory=dict)


def _distinct_parts(s: int, total: int, low: int) -> Iterator[tuple[int, ...]]:
    if s == 0:
        if total == 0:
            yield ()
        return
    # smallest admissible completion is low, low+1, ..., low+s-1
    top = (total - s * (s - 1) // 2) // s
    for a in range(low, top + 1):
        for rest in _distinct_parts(s - 1, total - a, a + 1):
            yield (a,) + rest


def enumerate_index_sets(s: int, total: int) -> IndexSetFamily:
    """Every set of ``s`` distinct non-negative integers summing to ``total``."""
    if s < 1:
        raise ValueError("s must be positive")
    members = tuple(IndexSet(t) for t in _distinct_parts(s, total, 0))
    return IndexSetFamily(s, total, members)


def sizes_for(d: int) -> range:
    """Set sizes s contributing to phi(., d): s >= 1 with s(s+1)/2 <= d."""
    s = 0
    while (s + 1) * (s + 2) // 2 <= d:
        s += 1
    return range(1, s + 1)


@lru_cache(maxsize=None)
def _phi(d: int, route: Route) -> Poly:
    result = Poly()
    for s in sizes_for(d):
        inner = Poly()
        for I in enumerate_index_sets(s, d - s):
            inner = inner + lp_poly(I, route).poly * psi(I)
        result = result + poly_exact_div(inner, N) * s
    return result


def phi_poly(d: int, evaluate_at: Iterable[int] = (), route="pfaffian") -> PhiResult:
    """phi(., d) as an exact polynomial, plus values at ``evaluate_at``.

    The Pfaffian route is the default: it only needs psi of small sets,
    whereas interpolation needs psi of complements in [d + 2].
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    poly = _phi(d, Route.parse(route))
    return PhiResult(d, poly, {n: poly(n) for n in evaluate_at})


def phi_value(n: int, d: int) -> Fraction:
    return phi_poly(d).phi(n)


def phi_at_zero_closed(d: int) -> Fraction:
    """phi(0, d) from singleton and pair terms alone.

    psi_{{d-1}} * LP~_{{d-1}}(0) + 2 * sum_{0 <= i < (d-2)/2} psi_{{i, d-2-i}} MC(i, d-2-i);
    every |I| >= 3 term carries n^2 and vanishes after division by n.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    value = psi((d - 1,)) * lp_tilde_poly((d - 1,), "closed_form")(0)
    i = 0
    while 2 * i < d - 2:
        value += 2 * psi((i, d - 2 - i)) * mc(i, d - 2 - i)
        i += 1
    return value


def phi_at_minus_one_closed(d: int) -> Fraction:
    """phi(-1, d) from the single s = 1 term; (n+1) kills every |I| >= 2 term."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    # (1/n) psi_{{d-1}} LP_{{d-1}}(n) at n = -1
    return -psi((d - 1,)) * lp_singleton_poly(d - 1).poly(-1)


def phi_direct_value(n: int, d: int, psi_of=None) -> Fraction:
    """phi(n, d) for n >= 1 computed from psi alone, with no polynomial built.

    ``psi_of`` maps an IndexSet to its psi value; a lookup into a
    :func:`dense_psi_table` makes large n cheap.
    """
    if n < 1:
        raise ValueError("direct evaluation needs n >= 1")
    psi_of = psi_of or psi
    value = Fraction(0)
    for s in sizes_for(d):
        acc = 0
        for I in enumerate_index_sets(s, d - s):
            if I.issubset_of_prefix(n):
                acc += psi_of(I) * psi_of(I.complement(n))
        value += Fraction(s * acc, n)
    return value


def phi_poly_from_psi(d: int, dense: list[int] | None = None) -> Poly:
    """Interpolate phi(., d) from direct values at n = d+1, ..., 2d+2."""
    ns = range(d + 1, 2 * d + 3)
    if dense is None:
        dense = dense_psi_table(ns[-1])
    elif len(dense) < 1 << ns[-1]:
        raise ValueError(f"dense table must cover subsets of [{ns[-1]}]")

    def lookup(I: IndexSet) -> int:
        return dense[I.mask]

    return lagrange_interpolate((n, phi_direct_value(n, d, lookup)) for n in ns)


def phi_minus_one_expected(d: int) -> int:
    return (-2) ** (d - 1)


def phi_zero_expected(d: int) -> int:
    return (-1) ** (d - 1)


def singleton_term_at_minus_one(d: int) -> Fraction:
    """2^(d-1) (-2)(-3)...(-d) / d!, the displayed product form."""
    prod = 1
    for k in range(2, d + 1):
        prod *= -k
    return Fraction(2 ** (d - 1) * prod, factorial(d))
