from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lascoux.errors import DuplicateAbscissa, NonzeroRemainder
from lascoux.exact_arith import (
    ZERO_DEGREE,
    Poly,
    SkewMatrix,
    falling_factorial,
    lagrange_interpolate,
    pfaffian,
    poly_exact_div,
)

from oracles import bareiss_det, matching_pfaffian, poly_eval

n = Poly.variable()

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
polys = st.lists(rationals, max_size=7).map(Poly)
nonzero_polys = polys.filter(bool)


class TestPoly:
    def test_canonical_form_strips_trailing_zeros(self):
        p = Poly([1, 2, 0, 0])
        assert p.coeffs == (1, 2)
        assert p.degree == 1
        assert p == Poly([1, 2])

    def test_zero_polynomial(self):
        z = Poly([0, 0])
        assert z.is_zero and not z
        assert z.coeffs == ()
        assert z.degree == ZERO_DEGREE
        assert z.degree < 0

    def test_mixed_denominators(self):
        p = Poly([Fraction(1, 2), Fraction(1, 3)])
        assert p.coeffs == (Fraction(1, 2), Fraction(1, 3))
        assert 6 * p == Poly([3, 2])

    def test_scalar_equality_and_hash(self):
        assert Poly([5]) == 5
        assert hash(Poly([1, Fraction(2, 4)])) == hash(Poly([1, Fraction(1, 2)]))

    def test_str(self):
        assert str(n * n - 2 * n + 1) == "n^2 - 2*n + 1"
        assert str(Poly([0, Fraction(-1, 6)])) == "-1/6*n"
        assert str(Poly()) == "0"

    def test_evaluation_at_rational(self):
        p = Poly([1, -3, Fraction(1, 2)])
        assert p(Fraction(2, 3)) == 1 - 2 + Fraction(2, 9)
        assert p(-1) == Fraction(9, 2)
        assert Poly()(7) == 0

    def test_pow(self):
        assert (n + 1) ** 3 == Poly([1, 3, 3, 1])
        assert (n + 1) ** 0 == 1

    @given(polys, polys, rationals)
    def test_ring_operations_match_pointwise(self, a, b, x):
        assert (a * b)(x) == a(x) * b(x)
        assert (a + b)(x) == a(x) + b(x)
        assert (a - b)(x) == a(x) - b(x)
        assert (-a)(x) == -a(x)

    @given(polys, rationals)
    def test_coeff_view_agrees_with_evaluation(self, a, x):
        assert a(x) == poly_eval(a.coeffs, x)


class TestFallingFactorial:
    def test_empty_product(self):
        assert falling_factorial(n, 0) == 1

    def test_n_choose_two_shape(self):
        assert falling_factorial(n, 2) == n * n - n

    def test_shifted_base(self):
        # oracle: repeated multiplication by hand
        expected = (n + 1) * n * (n - 1)
        assert falling_factorial(n + 1, 3) == expected
        assert expected == Poly([0, -1, 0, 1])

    @given(st.integers(0, 12), st.integers(0, 30))
    def test_matches_permutation_count(self, k, extra):
        m = k + extra
        assert falling_factorial(n, k)(m) == factorial(m) // factorial(m - k)

    def test_rejects_negative_k(self):
        with pytest.raises(ValueError):
            falling_factorial(n, -1)


class TestExactDivision:
    def test_examples(self):
        assert poly_exact_div(n * n - n, n) == n - 1
        assert poly_exact_div(n**3 - n, n + 1) == n * n - n

    def test_remainder_raises(self):
        with pytest.raises(NonzeroRemainder):
            poly_exact_div(n * n + 1, n)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            poly_exact_div(n, Poly())

    @given(polys, nonzero_polys)
    def test_product_divides_back(self, a, b):
        assert poly_exact_div(a * b, b) == a

    @given(polys, nonzero_polys)
    def test_divmod_reconstructs(self, a, b):
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree


class TestInterpolation:
    def test_single_point(self):
        assert lagrange_interpolate([(0, 1)]) == 1

    def test_square(self):
        assert lagrange_interpolate([(0, 0), (1, 1), (2, 4)]) == n * n

    def test_quartic(self):
        pts = [(0, 0), (1, 1), (2, 2), (3, 3), (4, 6)]
        p = lagrange_interpolate(pts)
        # oracle: evaluate candidates at the abscissas; binom(n,4) + n gives 5 at
        # n = 4, so the interpolant through (4, 6) is 2*binom(n,4) + n
        assert [2 * comb(x, 4) + x for x, _ in pts] == [y for _, y in pts]
        assert p == 2 * falling_factorial(n, 4) / 24 + n
        assert p.degree == 4

    def test_duplicate_abscissa(self):
        with pytest.raises(DuplicateAbscissa):
            lagrange_interpolate([(0, 1), (1, 2), (0, 3)])

    def test_empty(self):
        with pytest.raises(ValueError):
            lagrange_interpolate([])

    @given(polys, st.integers(-20, 20))
    def test_reproduces_polynomial(self, p, start):
        deg = max(p.degree, 0)
        pts = [(x, p(x)) for x in range(start, start + deg + 1)]
        assert lagrange_interpolate(pts) == p


def _random_skew(draw_entries, d):
    rows = [[Fraction(0)] * d for _ in range(d)]
    it = iter(draw_entries)
    for k in range(d):
        for l in range(k + 1, d):
            v = next(it)
            rows[k][l], rows[l][k] = v, -v
    return rows


class TestPfaffian:
    def test_two_by_two(self):
        x = n + 3
        assert pfaffian(SkewMatrix(2, [[x]])) == x

    def test_empty_and_odd(self):
        assert pfaffian(SkewMatrix(0, [])) == 1
        assert pfaffian(SkewMatrix.from_function(3, lambda k, l: k + l + 1)) == 0

    def test_four_by_four_symbolic(self):
        # distinct primes as stand-ins for the six entries
        a12, a13, a14, a23, a24, a34 = 2, 3, 5, 7, 11, 13
        m = SkewMatrix(4, [[a12, a13, a14], [a23, a24], [a34]])
        assert pfaffian(m) == a12 * a34 - a13 * a24 + a14 * a23

    def test_four_by_four_numeric(self):
        m = SkewMatrix(4, [[3, 3, 1], [2, 4], [1]])
        assert pfaffian(m) == -7
        assert matching_pfaffian(m.to_rows()) == -7

    def test_polynomial_entries(self):
        m = SkewMatrix(4, [[n, 1, 0], [n + 1, 2], [n]])
        assert pfaffian(m) == n * n - 2 + 0 * (n + 1)

    def test_skew_extension(self):
        m = SkewMatrix(3, [[1, 2], [3]])
        assert m.entry(1, 0) == -1 and m.entry(2, 1) == -3 and m.entry(2, 2) == 0
        assert SkewMatrix.from_rows(m.to_rows()).to_rows() == m.to_rows()

    def test_from_rows_rejects_non_skew(self):
        with pytest.raises(ValueError):
            SkewMatrix.from_rows([[0, 1], [1, 0]])

    @given(st.integers(0, 4).flatmap(
        lambda h: st.lists(rationals, min_size=h * (2 * h - 1), max_size=h * (2 * h - 1))
        .map(lambda xs, d=2 * h: _random_skew(xs, d))))
    def test_square_is_determinant(self, rows):
        pf = pfaffian(SkewMatrix.from_rows(rows))
        assert pf * pf == bareiss_det(rows)

    @given(st.integers(1, 4).flatmap(
        lambda h: st.lists(st.integers(-9, 9), min_size=h * (2 * h - 1), max_size=h * (2 * h - 1))
        .map(lambda xs, d=2 * h: _random_skew(xs, d))))
    def test_matches_matching_sum(self, rows):
        assert pfaffian(SkewMatrix.from_rows(rows)) == matching_pfaffian(rows)
