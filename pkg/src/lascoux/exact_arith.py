"""Exact scalar and polynomial arithmetic.

Scalars are :class:`fractions.Fraction` (ints are accepted wherever a
Fraction is).  :class:`Poly` is a dense univariate polynomial in the
variable ``n`` with rational coefficients.  Internally a Poly stores
integer numerators over a single positive common denominator, which keeps
multiplication an integer convolution; the public view is a tuple of
Fractions.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence, Union

from .errors import DuplicateAbscissa, NonzeroRemainder

Scalar = Union[int, Fraction]

#: degree of the zero polynomial; compares below every integer and can
#: never be used as a list index
ZERO_DEGREE = -math.inf


def _normalize(nums, den):
    nums = list(nums)
    while nums and nums[-1] == 0:
        nums.pop()
    if not nums:
        return (), 1
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g != 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


class Poly:
    """Immutable dense polynomial over Q in one variable.

    >>> n = Poly.variable()
    >>> (n + 1) * (n - 1)
    Poly([-1, 0, 1])
    >>> Poly([Fraction(1, 2), 3])(2)
    Fraction(13, 2)
    """

    __slots__ = ("_nums", "_den", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        coeffs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        self._nums, self._den = _normalize(
            (c.numerator * (den // c.denominator) for c in coeffs), den
        )
        self._hash = None

    @classmethod
    def _raw(cls, nums, den) -> "Poly":
        obj = cls.__new__(cls)
        obj._nums, obj._den = _normalize(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def variable(cls) -> "Poly":
        return cls._raw((0, 1), 1)

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        if isinstance(value, Rational):
            return cls.constant(value)
        raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients in ascending degree; empty for the zero polynomial."""
        return tuple(Fraction(c, self._den) for c in self._nums)

    @property
    def degree(self):
        return len(self._nums) - 1 if self._nums else ZERO_DEGREE

    @property
    def is_zero(self) -> bool:
        return not self._nums

    def leading_coefficient(self) -> Fraction:
        if not self._nums:
            return Fraction(0)
        return Fraction(self._nums[-1], self._den)

    def __bool__(self) -> bool:
        return bool(self._nums)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._nums == other._nums and self._den == other._den
        if isinstance(other, Rational):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._nums, self._den))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({[int(c) if c.denominator == 1 else c for c in self.coeffs]!r})"

    def __str__(self) -> str:
        if not self._nums:
            return "0"
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "n" if k == 1 else f"n^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> "Poly":
        return Poly._raw((-c for c in self._nums), self._den)

    def __add__(self, other) -> "Poly":
        if not isinstance(other, (Poly, Rational)):
            return NotImplemented
        other = Poly.coerce(other)
        den = math.lcm(self._den, other._den)
        fa, fb = den // self._den, den // other._den
        a, b = self._nums, other._nums
        if len(a) < len(b):
            a, b, fa, fb = b, a, fb, fa
        nums = [x * fa for x in a]
        for i, y in enumerate(b):
            nums[i] += y * fb
        return Poly._raw(nums, den)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, (Poly, Rational)):
            return NotImplemented
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> "Poly":
        if not isinstance(other, Rational):
            return NotImplemented
        return Poly.coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Rational):
            other = Fraction(other)
            return Poly._raw(
                (c * other.numerator for c in self._nums), self._den * other.denominator
            )
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._nums, other._nums
        if not a or not b:
            return Poly()
        nums = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    nums[i + j] += x * y
        return Poly._raw(nums, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        """Division by a nonzero scalar only; use :func:`poly_exact_div` for polynomials."""
        if not isinstance(other, Rational):
            return NotImplemented
        other = Fraction(other)
        if other == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return Poly._raw(
            (c * other.denominator for c in self._nums), self._den * other.numerator
        )

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        result, base = Poly.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate exactly at a rational point."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        acc = 0
        qpow = 1
        # homogenized Horner: sum a_k p^k q^(deg-k)
        for c in reversed(self._nums):
            acc = acc * p + c * qpow
            qpow *= q
        if not self._nums:
            return Fraction(0)
        return Fraction(acc, self._den * q ** (len(self._nums) - 1))

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        divisor = Poly.coerce(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcoeffs = divisor.coeffs
        dlead = dcoeffs[-1]
        dd = len(dcoeffs) - 1
        if len(rem) - 1 < dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / dlead
            quot[k] = c
            if c:
                for t, dc in enumerate(dcoeffs):
                    rem[k + t] -= c * dc
        return Poly(quot), Poly(rem[:dd])


def poly_exact_div(dividend: Poly, divisor: Poly) -> Poly:
    """Return q with ``dividend == q * divisor``; raise if a remainder is left."""
    q, r = Poly.coerce(dividend).divmod(divisor)
    if not r.is_zero:
        raise NonzeroRemainder(f"({dividend}) / ({divisor}) leaves remainder {r}")
    return q


def falling_factorial(base, k: int) -> Poly:
    """[base]_k = base (base - 1) ... (base - k + 1); the empty product is 1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    base = Poly.coerce(base)
    result = Poly.constant(1)
    for t in range(k):
        result = result * (base - t)
    return result


def lagrange_interpolate(points: Iterable[tuple[int, Scalar]]) -> Poly:
    """Unique polynomial of degree < len(points) through ``points``.

    Built with Newton divided differences, then expanded to monomial form.
    """
    points = [(Fraction(x), Fraction(y)) for x, y in points]
    if not points:
        raise ValueError("need at least one point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        seen = set()
        dup = next(x for x in xs if x in seen or seen.add(x))
        raise DuplicateAbscissa(f"abscissa {dup} appears more than once")
    table = [y for _, y in points]
    newton = [table[0]]
    for level in range(1, len(points)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(len(table) - 1)
        ]
        newton.append(table[0])
    n = Poly.variable()
    result = Poly.constant(newton[-1])
    for k in range(len(newton) - 2, -1, -1):
        result = result * (n - xs[k]) + newton[k]
    return result


class SkewMatrix:
    """Skew-symmetric matrix stored by its strict upper triangle.

    Entries may be any ring elements supporting ``+``, ``-`` and ``*``
    (ints, Fractions, :class:`Poly`).  Indices are 0-based.
    """

    __slots__ = ("dimension", "_upper")

    def __init__(self, dimension: int, upper: Sequence[Sequence]):
        if dimension < 0:
            raise ValueError("dimension must be non-negative")
        if len(upper) != max(dimension - 1, 0) or any(
            len(row) != dimension - 1 - k for k, row in enumerate(upper)
        ):
            raise ValueError("upper must hold rows of length dimension-1, ..., 1")
        self.dimension = dimension
        self._upper = tuple(tuple(row) for row in upper)

    @classmethod
    def from_function(cls, dimension: int, entry: Callable[[int, int], object]) -> "SkewMatrix":
        """Build from ``entry(k, l)``, called only for ``k < l``."""
        return cls(
            dimension,
            [[entry(k, l) for l in range(k + 1, dimension)] for k in range(dimension - 1)],
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "SkewMatrix":
        """Build from a full square matrix, checking skew-symmetry."""
        d = len(rows)
        for k in range(d):
            if len(rows[k]) != d:
                raise ValueError("matrix is not square")
            if rows[k][k] != 0:
                raise ValueError(f"nonzero diagonal entry at {k}")
            for l in range(k + 1, d):
                if rows[l][k] != -rows[k][l]:
                    raise ValueError(f"entries ({k},{l}) and ({l},{k}) are not negatives")
        return cls.from_function(d, lambda k, l: rows[k][l])

    def entry(self, k: int, l: int):
        if k == l:
            return 0
        if k > l:
            return -self._upper[l][k - l - 1]
        return self._upper[k][l - k - 1]

    def to_rows(self) -> list[list]:
        return [[self.entry(k, l) for l in range(self.dimension)] for k in range(self.dimension)]


def pfaffian(m: SkewMatrix):
    """Pfaffian by expansion along the first row.

    Pf(A) = sum_{k>=2} (-1)^k a_{1k} Pf(A with rows/cols 1 and k removed),
    1-based.  Sub-Pfaffians are memoized on the tuple of surviving
    indices, so the cost is O(2^d d) ring operations instead of (d-1)!!.
    The 0x0 Pfaffian is 1 and odd dimensions give 0.
    """
    if m.dimension % 2:
        return 0
    memo: dict[tuple[int, ...], object] = {}

    def pf(idx: tuple[int, ...]):
        if not idx:
            return 1
        hit = memo.get(idx)
        if hit is not None:
            return hit
        first, rest = idx[0], idx[1:]
        total = 0
        for pos, k in enumerate(rest):
            a = m.entry(first, k)
            if a == 0:
                continue
            term = a * pf(rest[:pos] + rest[pos + 1:])
            total = total + term if pos % 2 == 0 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(m.dimension)))
