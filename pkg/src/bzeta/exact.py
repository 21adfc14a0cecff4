"""Exact integer/rational combinatorics: Bernoulli and Stirling numbers.

Everything here is computed in exact arithmetic (arbitrary-precision
integers and ``fractions.Fraction``), so equality checks between the
independent evaluation routes are bit-exact, never approximate.

Conventions: ``B_n`` means the constant term B_n(0), so B_1 = -1/2; the
value at the other endpoint, B_n(1), is exposed separately because the
two differ exactly at n = 1.  0**0 = 1 throughout the inner power sums,
as forced by the zeroth-derivative term that produces them.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

BigRat = Fraction

__all__ = [
    "BigRat",
    "BernoulliPoly",
    "binomial",
    "stirling2",
    "stirling2_explicit",
    "stirling1_signed",
    "bernoulli_recurrence",
    "bernoulli_stirling",
    "bernoulli_doublesum",
    "bernoulli_at_one",
    "bernoulli_poly",
    "bernoulli_poly_eval",
    "bernoulli_poly_doublesum",
    "check_difference_identity",
    "check_stirling1_bernoulli_sum",
    "rat_str",
    "poly_json",
]


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n or k < 0."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


# Triangle caches grow monotonically; rows are appended under a lock and
# never mutated afterwards, so concurrent readers always see complete rows.
_S2_ROWS: list[list[int]] = [[1]]
_S1_ROWS: list[list[int]] = [[1]]
_BERN: list[Fraction] = [Fraction(1)]
_CACHE_LOCK = threading.Lock()


def _triangle_row(rows: list[list[int]], n: int, step) -> list[int]:
    if len(rows) <= n:
        with _CACHE_LOCK:
            while len(rows) <= n:
                m = len(rows)
                prev = rows[-1]
                rows.append([step(m, k, prev) for k in range(m + 1)])
    return rows[n]


def stirling2(n: int, k: int) -> int:
    """Partition count S(n, k) via S(n,k) = k*S(n-1,k) + S(n-1,k-1)."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return 0

    def step(m, j, prev):
        lower = prev[j] if j < m else 0
        upper = prev[j - 1] if j >= 1 else 0
        return j * lower + upper

    return _triangle_row(_S2_ROWS, n, step)[k]


def stirling2_explicit(n: int, k: int) -> Fraction:
    """S(n, k) as the explicit alternating binomial sum (cross-check route)."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return Fraction(0)
    total = sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1))
    return Fraction(total, factorial(k))


def stirling1_signed(n: int, k: int) -> int:
    """Signed first-kind s(n, k) via s(n+1,k) = s(n,k-1) - n*s(n,k)."""
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    if k > n:
        return 0

    def step(m, j, prev):
        left = prev[j - 1] if j >= 1 else 0
        right = prev[j] if j < m else 0
        return left - (m - 1) * right

    return _triangle_row(_S1_ROWS, n, step)[k]


def bernoulli_recurrence(n: int) -> Fraction:
    """B_n by solving sum_{k<m} C(m,k) B_k = 0 for the top index (cached)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(_BERN) <= n:
        with _CACHE_LOCK:
            while len(_BERN) <= n:
                m = len(_BERN) + 1  # closure relation at order m yields B_{m-1}
                acc = sum(comb(m, k) * _BERN[k] for k in range(m - 1))
                _BERN.append(-acc / m)
    return _BERN[n]


def bernoulli_stirling(n: int) -> Fraction:
    """B_n as the weighted second-kind Stirling sum (independent route)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = Fraction(0)
    fact = 1
    for k in range(n + 1):
        total += Fraction((-1) ** k * fact * stirling2(n, k), k + 1)
        fact *= k + 1
    return total


def bernoulli_doublesum(n: int) -> Fraction:
    """B_n as the finite alternating double sum (third route)."""
    return bernoulli_poly_doublesum(n, Fraction(0))


def bernoulli_at_one(n: int) -> Fraction:
    """B_n(1): equals B_n for n != 1 and +1/2 at n = 1."""
    return bernoulli_poly_eval(bernoulli_poly(n), Fraction(1))


@dataclass(frozen=True)
class BernoulliPoly:
    """Coefficients of B_n(x) in ascending powers of x (monic, degree n)."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector must have length degree + 1")


def bernoulli_poly(n: int) -> BernoulliPoly:
    """B_n(x) with coefficient of x^(n-k) equal to C(n,k) B_k."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * bernoulli_recurrence(k)
    return BernoulliPoly(n, tuple(coeffs))


def bernoulli_poly_eval(p: BernoulliPoly, x: Fraction) -> Fraction:
    """Exact Horner evaluation of B_n at a rational point."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def bernoulli_poly_doublesum(n: int, x: Fraction) -> Fraction:
    """B_n(x) via the finite alternating double sum over shifted powers."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        inner = Fraction(0)
        for j in range(k + 1):
            inner += (-1) ** j * comb(k, j) * (x + j) ** n
        total += inner / (k + 1)
    return total


def check_difference_identity(n: int, x: Fraction) -> bool:
    """True iff B_n(x+1) - B_n(x) == n * x**(n-1) exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    x = Fraction(x)
    p = bernoulli_poly(n)
    lhs = bernoulli_poly_eval(p, x + 1) - bernoulli_poly_eval(p, x)
    return lhs == n * x ** (n - 1)


def check_stirling1_bernoulli_sum(k: int) -> bool:
    """True iff sum_r s(k,r) B_r == (-1)**k k!/(k+1) exactly."""
    if k < 1:
        raise ValueError("k must be positive")
    total = sum(
        stirling1_signed(k, r) * bernoulli_recurrence(r) for r in range(1, k + 1)
    )
    return total == Fraction((-1) ** k * factorial(k), k + 1)


def rat_str(q: Fraction) -> str:
    """Serialize a rational as 'numerator/denominator' (plain n when integral)."""
    return str(Fraction(q))


def poly_json(p: BernoulliPoly) -> str:
    """JSON array of coefficient strings, ascending degree."""
    return json.dumps([rat_str(c) for c in p.coeffs])
