"""Exact Lascoux coefficients, Lascoux polynomials and ML-degree polynomials."""
from .errors import (
    CacheFormatError,
    DegreeBoundViolated,
    DuplicateAbscissa,
    InvalidIndexSet,
    LascouxError,
    NonIntegerPsi,
    NonzeroRemainder,
    UndefinedExtension,
    UnsupportedSize,
)
from .exact_arith import (
    Poly,
    SkewMatrix,
    falling_factorial,
    lagrange_interpolate,
    pfaffian,
    poly_exact_div,
)
from .identity_suite import VerificationReport, mc
from .lascoux_poly import (
    LascouxPolynomial,
    Route,
    lp_pair_poly,
    lp_poly,
    lp_singleton_poly,
    lp_tilde_poly,
    lp_value,
)
from .ml_degree import (
    PhiResult,
    enumerate_index_sets,
    phi_at_minus_one_closed,
    phi_at_zero_closed,
    phi_poly,
    phi_value,
)
from .psi_engine import IndexSet, PsiTable, psi, psi_empty, psi_ext_pair

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoized psi value, Lascoux polynomial and phi polynomial."""
    from . import lascoux_poly, ml_degree, psi_engine

    psi_engine.default_table.clear()
    lascoux_poly.lp_singleton_poly.cache_clear()
    lascoux_poly.lp_pair_poly.cache_clear()
    lascoux_poly._lp_poly.cache_clear()
    ml_degree._phi.cache_clear()
