from fractions import Fraction

import pytest

from lascoux.exact_arith import Poly, lagrange_interpolate
from lascoux.lascoux_poly import N
from lascoux.ml_degree import (
    enumerate_index_sets,
    phi_at_minus_one_closed,
    phi_at_zero_closed,
    phi_direct_value,
    phi_poly,
    phi_poly_from_psi,
    phi_value,
    singleton_term_at_minus_one,
    sizes_for,
)

from oracles import distinct_part_sets

n = N


class TestEnumeration:
    def test_examples(self):
        assert list(enumerate_index_sets(1, 1)) == [(1,)]
        assert list(enumerate_index_sets(2, 1)) == [(0, 1)]
        assert list(enumerate_index_sets(2, 4)) == [(0, 4), (1, 3)]

    def test_too_small_total(self):
        assert len(enumerate_index_sets(3, 2)) == 0
        assert list(enumerate_index_sets(3, 3)) == [(0, 1, 2)]

    @pytest.mark.parametrize("s", range(1, 6))
    @pytest.mark.parametrize("total", range(0, 22))
    def test_brute_force(self, s, total):
        fam = enumerate_index_sets(s, total)
        assert [tuple(I) for I in fam] == distinct_part_sets(s, total)
        assert all(len(I) == s and sum(I) == total for I in fam)

    def test_sizes(self):
        assert list(sizes_for(1)) == [1]
        assert list(sizes_for(2)) == [1]
        assert list(sizes_for(3)) == [1, 2]
        assert list(sizes_for(6)) == [1, 2, 3]


class TestPhiPoly:
    def test_golden_small_d(self):
        assert phi_poly(1).phi == 1
        assert phi_poly(2).phi == n - 1
        assert phi_poly(3).phi == n * n - 2 * n + 1

    def test_golden_by_direct_oracle(self):
        # independent of every polynomial route: psi-only evaluation then interpolation
        for d, expected in [(1, Poly([1])), (2, n - 1), (3, (n - 1) ** 2)]:
            pts = [(k, phi_direct_value(k, d)) for k in range(d + 1, 2 * d + 3)]
            assert lagrange_interpolate(pts) == expected

    def test_evaluations_recorded(self):
        res = phi_poly(3, [0, -1])
        assert res.d == 3
        assert res.evaluations == {0: 1, -1: 4}

    def test_routes_agree(self):
        for d in range(1, 9):
            assert phi_poly(d, route="interpolation").phi == phi_poly(d).phi

    def test_rejects_nonpositive_d(self):
        with pytest.raises(ValueError):
            phi_poly(0)

    def test_degree_bound(self):
        for d in range(1, 31):
            assert phi_poly(d).phi.degree <= d - 1, d

    def test_integer_valued(self):
        for d in range(1, 21):
            for k in range(-5, 11):
                assert phi_value(k, d).denominator == 1, (k, d)

    def test_support(self):
        for k in range(1, 7):
            top = k * (k + 1) // 2
            assert phi_value(k, top) == 1
            for d in range(top + 1, top + 6):
                assert phi_value(k, d) == 0

    def test_known_small_values(self):
        assert phi_value(3, 4) == 4
        assert phi_value(3, 5) == 2
        assert phi_value(3, 6) == 1

    def test_direct_matches_polynomial(self):
        for d in range(1, 8):
            p = phi_poly(d).phi
            for k in range(1, 10):
                assert phi_direct_value(k, d) == p(k)


class TestSpecialValues:
    def test_phi_value_examples(self):
        assert phi_value(0, 4) == -1
        assert phi_value(-1, 4) == -8

    def test_zero_closed_examples(self):
        assert phi_at_zero_closed(1) == 1
        assert phi_at_zero_closed(2) == -1
        assert phi_at_zero_closed(7) == 1

    def test_minus_one_closed_examples(self):
        assert [phi_at_minus_one_closed(d) for d in (1, 2, 5)] == [1, -2, 16]

    def test_product_form(self):
        for d in range(1, 31):
            assert singleton_term_at_minus_one(d) == phi_at_minus_one_closed(d) == (-2) ** (d - 1)

    def test_range(self):
        for d in range(1, 31):
            assert phi_value(0, d) == phi_at_zero_closed(d) == (-1) ** (d - 1)
            assert phi_value(-1, d) == phi_at_minus_one_closed(d) == (-2) ** (d - 1)


def test_psi_oracle_small_table():
    for d in range(1, 6):
        assert phi_poly_from_psi(d) == phi_poly(d).phi


def test_psi_oracle_table_too_small():
    with pytest.raises(ValueError):
        phi_poly_from_psi(5, dense=[1] * 16)
