"""Independent oracles used by the test suite.

Everything here is deliberately primitive: Pascal triangles, polynomial
expansion, tail-bounded partial sums, sequence extrapolation.  None of
it shares code with the evaluation routes under test.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp, mpf


def pascal_binomial(n: int, k: int) -> int:
    """C(n, k) by building Pascal's triangle row by row."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[k]


def falling_factorial_coeffs(n: int) -> list[int]:
    """Coefficients of x(x-1)...(x-n+1) in ascending powers of x."""
    coeffs = [1]
    for j in range(n):
        shifted = [0] + coeffs
        coeffs = [shifted[i] - j * (coeffs[i] if i < len(coeffs) else 0)
                  for i in range(len(shifted))]
    return coeffs


def stirling2_by_sum(n: int, k: int) -> Fraction:
    """Second-kind Stirling number straight from its alternating sum."""
    total = 0
    for j in range(k + 1):
        total += (-1) ** (k - j) * pascal_binomial(k, j) * j**n
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return Fraction(total, fact)


def hurwitz_direct(s, a, terms: int):
    """Tail-bounded partial sum of sum_k (k+a)^-s for real s > 1.

    Returns (value, error_bound) with the tail bracketed by the two
    integral bounds; the midpoint halves the bracket width.
    """
    s = mpf(s)
    a = mpf(a)
    part = mp.zero
    for k in range(terms):
        part += mpmath.power(k + a, -s)
    hi = mpmath.power(terms - 1 + a, 1 - s) / (s - 1)
    lo = mpmath.power(terms + a, 1 - s) / (s - 1)
    value = part + (hi + lo) / 2
    bound = (hi - lo) / 2 + abs(part) * mpf(2) ** (10 - mp.prec)
    return value, bound


def zeta_direct(s, terms: int):
    """Riemann zeta by direct summation with an integral tail bracket."""
    return hurwitz_direct(s, 1, terms)


def euler_gamma_by_harmonic():
    """Euler's constant as the extrapolated limit of H_n - log n.

    Uses nodes n = 2^10 .. 2^16 and a Richardson tableau in 1/n; the
    returned error claim is the magnitude of the last correction.
    """
    ks = list(range(10, 17))
    h = mp.zero
    samples = []
    top = 0
    for k in ks:
        n = 2**k
        for m in range(top + 1, n + 1):
            h += mpf(1) / m
        top = n
        samples.append(h - mpmath.log(mpf(n)))
    # The asymptotic error is a series in 1/n; with n doubling each node,
    # Richardson weights are (2^j T_i - T_{i-1}) / (2^j - 1).
    t = list(samples)
    last = t[-1]
    for j in range(1, len(ks)):
        t = [
            (mpf(2) ** j * t[i + 1] - t[i]) / (mpf(2) ** j - 1)
            for i in range(len(t) - 1)
        ]
        claim = abs(t[-1] - last)
        last = t[-1]
    return last, claim * 4


def stieltjes1_by_euler_maclaurin():
    """gamma_1 as the limit of sum log k / k - log(n)^2 / 2.

    The limit is reached through tail corrections for f(x) = log(x)/x
    at n0 = 10^4 (derivatives hand-expanded); the remainder after the
    third correction is far below the claimed bound.
    """
    n0 = 10**4
    acc = mp.zero
    for k in range(2, n0 + 1):
        acc += mpmath.log(mpf(k)) / k
    ln = mpmath.log(mpf(n0))
    x = mpf(n0)
    f_n = ln / x
    d1 = (1 - ln) / x**2
    d3 = (11 - 6 * ln) / x**4
    d5 = (274 - 120 * ln) / x**6
    value = (
        acc
        - ln**2 / 2
        - f_n / 2
        - (mpf(1) / 12 * d1 - mpf(1) / 720 * d3 + mpf(1) / 30240 * d5)
    )
    return value, mpf("1e-24")


def log2_enclosure(terms: int = 40) -> tuple[Fraction, Fraction]:
    """Rational enclosure of log 2 from 2*atanh(1/3) with a geometric tail.

    Partial sums are exact rationals; the tail of sum x^(2k+1)/(2k+1) at
    x = 1/3 is below x^(2K+1)/(1 - x^2), giving a rigorous bracket.
    """
    x = Fraction(1, 3)
    part = Fraction(0)
    for k in range(terms):
        part += x ** (2 * k + 1) / (2 * k + 1)
    tail_hi = x ** (2 * terms + 1) / (1 - x * x)
    return 2 * part, 2 * (part + tail_hi)
