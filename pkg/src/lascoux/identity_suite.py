"""MC(i, j) and exact instance checks of the psi/MC identities.

Every ``verify_*`` function walks a finite parameter grid, evaluates both
sides of one identity through separate code paths, and returns a
:class:`VerificationReport`.  Grid points may be evaluated on a thread pool
(``workers > 1``); reports are always ordered by grid position.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Iterable

from .errors import NonzeroRemainder
from .exact_arith import poly_exact_div
from .lascoux_poly import N, lp_poly, lp_tilde_poly
from .psi_engine import IndexSet, psi_ext_pair


def mc(i: int, j: int) -> Fraction:
    """(j-i)(-1)^(i+j) / ((i+1)(j+1) binom(i+j+2, i+1)), for all i, j >= 0."""
    if i < 0 or j < 0:
        raise ValueError("mc is defined for non-negative arguments")
    sign = -1 if (i + j) % 2 else 1
    return Fraction(sign * (j - i), (i + 1) * (j + 1) * comb(i + j + 2, i + 1))


def rat(x) -> str:
    """Serialize an exact rational as 'p/q' (or 'p' when integral)."""
    return str(Fraction(x))


@dataclass
class Check:
    params: dict
    lhs: Fraction
    rhs: Fraction
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class VerificationReport:
    suite: str
    range: dict
    checked: int = 0
    failures: list[Check] = field(default_factory=list)
    excluded: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_counterexample(self) -> Check | None:
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "range": self.range,
            "checked": self.checked,
            "failures": [
                {
                    "params": f.params,
                    "lhs": rat(f.lhs),
                    "rhs": rat(f.rhs),
                    **({"details": {k: rat(v) for k, v in f.details.items()}} if f.details else {}),
                }
                for f in self.failures
            ],
        }
        if self.excluded:
            out["excluded"] = self.excluded
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite} {self.range} checked={self.checked} failures={len(self.failures)}"
        if self.excluded:
            line += f" excluded={len(self.excluded)}"
        bad = self.first_counterexample
        if bad is not None:
            line += f"\n  first counterexample {bad.params}: lhs={rat(bad.lhs)} rhs={rat(bad.rhs)}"
            for k, v in bad.details.items():
                line += f"\n    {k} = {rat(v)}"
        return line


def run_grid(suite: str, rng: dict, points: Iterable, check: Callable[..., Iterable[Check]],
             workers: int = 1) -> VerificationReport:
    """Apply ``check`` to every grid point; each call yields one or more Checks."""
    points = list(points)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda p: list(check(*p)), points))
    else:
        results = [list(check(*p)) for p in points]
    report = VerificationReport(suite, rng)
    for checks in results:
        for c in checks:
            report.checked += 1
            if not c.ok:
                report.failures.append(c)
    return report


def verify_mc_recurrence(imax: int = 40, jmax: int = 40, workers: int = 1) -> VerificationReport:
    """MC(i+1, j) + MC(i, j+1) = -MC(i, j)."""

    def check(i, j):
        a, b, c = mc(i + 1, j), mc(i, j + 1), mc(i, j)
        yield Check({"i": i, "j": j}, a + b, -c,
                    {"MC(i+1,j)": a, "MC(i,j+1)": b, "MC(i,j)": c})

    grid = product(range(imax + 1), range(jmax + 1))
    return run_grid("mc", {"imax": imax, "jmax": jmax}, grid, check, workers)


def verify_value_at_zero(max_index: int = 12, route: str = "closed_form",
                         workers: int = 1) -> VerificationReport:
    """LP~_{{i}}(0) = (-1)^i/(i+1) and LP~_{{i,j}}(0) = MC(i, j)."""
    def check(i, j):
        if j is None:
            yield Check({"i": i}, lp_tilde_poly((i,), route)(0), Fraction((-1) ** i, i + 1))
        else:
            yield Check({"i": i, "j": j}, lp_tilde_poly((i, j), route)(0), mc(i, j))

    grid = [(i, None) for i in range(max_index + 1)]
    grid += [(i, j) for j in range(max_index + 1) for i in range(j)]
    return run_grid("value-at-zero", {"max_index": max_index, "route": route},
                    grid, check, workers)


def verify_pascal_identity(amax: int = 40, bmax: int = 40, workers: int = 1) -> VerificationReport:
    """psi_{a,b} = psi_{a-1,b} + psi_{a,b-1} under the extended conventions.

    (0, 0) is excluded: it needs psi_{-1,0}, which is not an integer.
    """
    excluded = [{"a": 0, "b": 0}]

    def check(a, b):
        left, down = psi_ext_pair(a - 1, b), psi_ext_pair(a, b - 1)
        yield Check({"a": a, "b": b}, psi_ext_pair(a, b), left + down,
                    {"psi(a-1,b)": left, "psi(a,b-1)": down})

    grid = [(a, b) for a in range(amax + 1) for b in range(bmax + 1) if (a, b) != (0, 0)]
    report = run_grid("pascal", {"amax": amax, "bmax": bmax}, grid, check, workers)
    report.excluded = excluded
    return report


def antidiagonal_sum(d: int) -> Fraction:
    """sum_{i=0}^{d} psi_{i,d-i} MC(i, d-i)."""
    return sum((psi_ext_pair(i, d - i) * mc(i, d - i) for i in range(d + 1)), Fraction(0))


def sum_identity_rhs(d: int) -> Fraction:
    return Fraction(2 ** (d + 1) * (-1) ** (d + 1) * (d + 1), (d + 2) * (d + 3))


def induction_rhs(d: int) -> Fraction:
    return Fraction((-1) ** d * (2 ** (d + 1) - (d + 2)), d + 2)


def verify_sum_identity(dmax: int = 40, workers: int = 1) -> VerificationReport:
    def check(d):
        upper, lower = antidiagonal_sum(d + 1), antidiagonal_sum(d)
        yield Check({"d": d}, upper + lower, sum_identity_rhs(d),
                    {"S(d+1)": upper, "S(d)": lower})

    return run_grid("sum", {"dmax": dmax}, ((d,) for d in range(dmax + 1)), check, workers)


def verify_induction_identity(dmax: int = 40, workers: int = 1) -> VerificationReport:
    """S(d) = (-1)^d (2^(d+1) - (d+2)) / (d+2), plus the induction step.

    For d < dmax the step check confirms that -S(d) + sum-identity RHS(d),
    which is how the d+1 case follows from the d case, lands on S(d+1).
    """

    def check(d):
        s = antidiagonal_sum(d)
        yield Check({"d": d}, s, induction_rhs(d))
        if d < dmax:
            stepped = -induction_rhs(d) + sum_identity_rhs(d)
            yield Check({"d": d, "check": "step"}, stepped, induction_rhs(d + 1),
                        {"S(d+1)": antidiagonal_sum(d + 1)})
            yield Check({"d": d, "check": "step-direct"}, -s + sum_identity_rhs(d),
                        antidiagonal_sum(d + 1))

    return run_grid("induction", {"dmax": dmax}, ((d,) for d in range(dmax + 1)), check, workers)


def verify_conjecture(dmax: int = 30, workers: int = 1) -> VerificationReport:
    """phi(0, d) = (-1)^(d-1) and phi(-1, d) = (-2)^(d-1), polynomial and closed routes."""
    from .ml_degree import (
        phi_at_minus_one_closed,
        phi_at_zero_closed,
        phi_poly,
    )

    def check(d):
        poly = phi_poly(d).phi
        zero, minus_one = (-1) ** (d - 1), (-2) ** (d - 1)
        yield Check({"d": d, "n": 0, "via": "phi_poly"}, poly(0), zero)
        yield Check({"d": d, "n": -1, "via": "phi_poly"}, poly(-1), minus_one)
        yield Check({"d": d, "n": 0, "via": "closed"}, phi_at_zero_closed(d), zero)
        yield Check({"d": d, "n": -1, "via": "closed"}, phi_at_minus_one_closed(d), minus_one)

    return run_grid("conjecture", {"dmax": dmax}, ((d,) for d in range(1, dmax + 1)),
                    check, workers)


def index_sets_up_to(bound: int):
    """Non-empty index sets I with sum(I) + len(I) <= bound, in a fixed order."""
    out = []

    def grow(prefix, low, weight):
        if prefix:
            out.append(IndexSet(prefix))
        for e in range(low, bound):
            w = weight + e + 1
            if w > bound:
                break
            grow(prefix + [e], e + 1, w)

    grow([], 0, 0)
    return sorted(out, key=lambda I: (sum(I) + len(I), len(I), tuple(I)))


def _power_divides(poly, base, k) -> bool:
    try:
        for _ in range(k):
            poly = poly_exact_div(poly, base)
    except NonzeroRemainder:
        return False
    return True


def verify_divisibility(bound: int = 16, route: str = "interpolation",
                        workers: int = 1) -> VerificationReport:
    """n^ceil(r/2) and (n+1)^floor(r/2) divide LP_I for r = |I|."""
    def check(I):
        poly = lp_poly(I, route).poly
        r = len(I)
        yield Check({"set": list(I), "factor": f"n^{(r + 1) // 2}"},
                    int(_power_divides(poly, N, (r + 1) // 2)), 1)
        yield Check({"set": list(I), "factor": f"(n+1)^{r // 2}"},
                    int(_power_divides(poly, N + 1, r // 2)), 1)

    return run_grid("divisibility", {"bound": bound, "route": route},
                    ((I,) for I in index_sets_up_to(bound)), check, workers)


def verify_routes(bound: int = 16, workers: int = 1) -> VerificationReport:
    """Interpolation, Pfaffian and (for |I| <= 2) closed-form LP_I coincide.

    Polynomials are compared coefficient-wise; a failure records the index
    of the first differing coefficient.
    """
    def differ(p, q):
        a, b = p.coeffs, q.coeffs
        for k in range(max(len(a), len(b))):
            x = a[k] if k < len(a) else Fraction(0)
            y = b[k] if k < len(b) else Fraction(0)
            if x != y:
                return k, x, y
        return None

    def check(I):
        ref = lp_poly(I, "interpolation").poly
        others = ["pfaffian"] + (["closed_form"] if len(I) <= 2 else [])
        for route in others:
            diff = differ(ref, lp_poly(I, route).poly)
            params = {"set": list(I), "route": route}
            if diff is None:
                yield Check(params, Fraction(0), Fraction(0))
            else:
                k, x, y = diff
                yield Check({**params, "coefficient": k}, x, y)

    return run_grid("routes", {"bound": bound},
                    ((I,) for I in index_sets_up_to(bound)), check, workers)


#: suite name -> (function, default size, size keyword(s))
SUITES = {
    "mc": (verify_mc_recurrence, 40, ("imax", "jmax")),
    "pascal": (verify_pascal_identity, 40, ("amax", "bmax")),
    "sum": (verify_sum_identity, 40, ("dmax",)),
    "induction": (verify_induction_identity, 40, ("dmax",)),
    "value-at-zero": (verify_value_at_zero, 12, ("max_index",)),
    "conjecture": (verify_conjecture, 30, ("dmax",)),
    "divisibility": (verify_divisibility, 16, ("bound",)),
    "routes": (verify_routes, 16, ("bound",)),
}


def run_suite(name: str, size: int | None = None, workers: int = 1) -> VerificationReport:
    func, default, keys = SUITES[name]
    size = default if size is None else size
    return func(**{k: size for k in keys}, workers=workers)
