"""Lascoux polynomials LP_I(n).

LP_I(n) = psi([n] minus I) when I is contained in [n] = {0, ..., n-1}, and
0 otherwise; for fixed I this is a polynomial in n.  Three constructions
are provided and are expected to agree coefficient for coefficient:

* ``interpolation``: sample the definition at n = 0..D with
  D = sum(I) + len(I), interpolate, then confirm two further samples;
* ``closed_form``: explicit formulas for one- and two-element sets;
* ``pfaffian``: Pfaffian of the matrix of two-element polynomials,
  bordered by the one-element polynomials when len(I) is odd.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import DegreeBoundViolated, InvalidIndexSet, UnsupportedSize
from .exact_arith import (
    Poly,
    SkewMatrix,
    falling_factorial,
    lagrange_interpolate,
    pfaffian,
    poly_exact_div,
)
from .psi_engine import IndexSet, psi

N = Poly.variable()


class Route(str, enum.Enum):
    INTERPOLATION = "interpolation"
    CLOSED_FORM = "closed_form"
    PFAFFIAN = "pfaffian"

    @classmethod
    def parse(cls, value) -> "Route":
        if isinstance(value, Route):
            return value
        aliases = {"interp": cls.INTERPOLATION, "closed": cls.CLOSED_FORM}
        try:
            return aliases.get(value) or cls(value)
        except ValueError:
            raise ValueError(f"unknown route {value!r}") from None


@dataclass(frozen=True)
class LascouxPolynomial:
    index_set: IndexSet
    poly: Poly
    route: Route

    def __call__(self, n):
        return self.poly(n)


def lp_value(index_set, n: int) -> int:
    """LP_I(n) straight from the definition, for integer n >= 0."""
    I = IndexSet(index_set)
    if n < 0:
        raise ValueError("lp_value is defined by psi only for n >= 0")
    if not I.issubset_of_prefix(n):
        return 0
    return psi(I.complement(n))


def degree_bound(index_set) -> int:
    I = IndexSet(index_set)
    return sum(I) + len(I)


@lru_cache(maxsize=None)
def lp_singleton_poly(i: int) -> LascouxPolynomial:
    """LP_{{i}}(n) = binomial(n, i+1)."""
    if i < 0:
        raise InvalidIndexSet(f"negative index {i}")
    poly = falling_factorial(N, i + 1) / factorial(i + 1)
    return LascouxPolynomial(IndexSet((i,)), poly, Route.CLOSED_FORM)


@lru_cache(maxsize=None)
def lp_pair_poly(i: int, j: int) -> LascouxPolynomial:
    if not 0 <= i < j:
        raise InvalidIndexSet(f"pair needs 0 <= i < j, got ({i}, {j})")
    total = Poly()
    a = 1  # a_{i,d} = prod_{k<d} (i-k)(i-k+1)
    for d in range(i + 1):
        term = falling_factorial(N, i - d) * (a * factorial(i + j + 1 - d))
        total = total + term if d % 2 == 0 else total - term
        a *= (i - d) * (i - d + 1)
    scale = (j - i) * falling_factorial(N + 1, j + 2)
    denom = factorial(i + 1) * factorial(j + 1) * factorial(i + j + 2)
    return LascouxPolynomial(IndexSet((i, j)), scale * total / denom, Route.CLOSED_FORM)


def _interpolated(I: IndexSet) -> Poly:
    D = degree_bound(I)
    poly = lagrange_interpolate((n, lp_value(I, n)) for n in range(D + 1))
    for n in (D + 1, D + 2):
        expected = lp_value(I, n)
        if poly(n) != expected:
            raise DegreeBoundViolated(
                f"LP_{list(I)} interpolated through n=0..{D} gives {poly(n)} at n={n}, "
                f"definition gives {expected}"
            )
    return poly


def _pfaffian_matrix(I: IndexSet) -> SkewMatrix:
    if len(I) % 2 == 0:
        return SkewMatrix.from_function(len(I), lambda k, l: lp_pair_poly(I[k], I[l]).poly)

    def entry(k, l):
        if k == 0:
            return lp_singleton_poly(I[l - 1]).poly
        return lp_pair_poly(I[k - 1], I[l - 1]).poly

    return SkewMatrix.from_function(len(I) + 1, entry)


@lru_cache(maxsize=None)
def _lp_poly(I: IndexSet, route: Route) -> Poly:
    if route is Route.INTERPOLATION:
        return _interpolated(I)
    if route is Route.PFAFFIAN:
        return Poly.coerce(pfaffian(_pfaffian_matrix(I)))
    if len(I) == 1:
        return lp_singleton_poly(I[0]).poly
    if len(I) == 2:
        return lp_pair_poly(*I).poly
    raise UnsupportedSize(f"no closed form for {len(I)}-element sets")


def lp_poly(index_set, route="interpolation") -> LascouxPolynomial:
    I = IndexSet(index_set)
    if not I:
        raise InvalidIndexSet("lp_poly needs a non-empty index set")
    route = Route.parse(route)
    return LascouxPolynomial(I, _lp_poly(I, route), route)


def lp_tilde_poly(index_set, route="interpolation") -> Poly:
    """LP_I(n) / n, which is a polynomial for non-empty I."""
    return poly_exact_div(lp_poly(index_set, route).poly, N)
