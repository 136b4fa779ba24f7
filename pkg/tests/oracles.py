"""Brute-force reference computations, deliberately independent of lascoux."""
from fractions import Fraction
from itertools import combinations


def perfect_matchings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest)):
        for m in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, rest[k])] + m


def permutation_sign(seq):
    inversions = sum(1 for x, y in combinations(range(len(seq)), 2) if seq[x] > seq[y])
    return -1 if inversions % 2 else 1


def matching_pfaffian(a):
    """sum over perfect matchings M of sgn(M) * prod a[i][j], with a a full skew matrix."""
    d = len(a)
    if d % 2:
        return 0
    total = 0
    for m in perfect_matchings(list(range(d))):
        flat = [x for pair in m for x in pair]
        term = permutation_sign(flat)
        for i, j in m:
            term = term * a[i][j]
        total = total + term
    return total


def bareiss_det(rows):
    """Fraction-free (Bareiss) determinant with row pivoting."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def distinct_part_sets(s, total):
    """All s-subsets of {0..total} summing to total, by exhaustive filtering."""
    return sorted(c for c in combinations(range(total + 1), s) if sum(c) == total)


def psi_by_recursion(J, memo=None):
    """Plain tuple-keyed recursion; the reference reading of the psi recurrence."""
    memo = {} if memo is None else memo
    J = tuple(J)
    if not J:
        return 1
    if J in memo:
        return memo[J]
    if len(J) == 1:
        return 2 ** J[0]
    total = 0
    for l in range(len(J)):
        lower = J[l - 1] if l else -1
        if J[l] - 1 > lower:
            total += 2 * psi_by_recursion(J[:l] + (J[l] - 1,) + J[l + 1:], memo)
    if J[0] == 0:
        total += psi_by_recursion(J[1:], memo)
    assert total % len(J) == 0
    memo[J] = total // len(J)
    return memo[J]


def poly_eval(coeffs, x):
    return sum(Fraction(c) * Fraction(x) ** k for k, c in enumerate(coeffs))
