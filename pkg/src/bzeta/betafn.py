"""The continuous Bernoulli function beta(s) and its cross-checks.

beta interpolates the Bernoulli numbers: beta(2n) = B_2n, beta(2n+1) = 0
for n >= 1, beta(1) = -1/2.  Three independent evaluation routes are
exposed so their agreement is an executable test of the identities
connecting them:

* ``beta_closed``   -- 2 Gamma(s+1) zeta(s) (2 pi)^-s cos(pi s/2) cos(pi(1-s))
* ``beta_series``   -- -cos(pi(1-s)) times the raw difference-series
                       interpolant ``b_s_of_one``
* ``beta_reflection`` -- beta(1-s) = (1-s) zeta(s) cos(pi s), the image of
                       the closed form under the zeta functional equation

The closed-form product is a quotient of entire-function limits wherever
a gamma pole meets a cosine or zeta zero (all negative integers, and
s = 1 where the zeta pole meets cos(pi s/2)); those neighborhoods are
routed through equivalent stable branches instead of the raw product,
so no argument is a genuine pole.

Odd zeta values fall out of the same machinery two ways: the
log-weighted difference series (``zeta_odd_hasse``) and the derivative
of the functional equation at negative even integers
(``zeta_odd_functional``).
"""

from __future__ import annotations

from math import factorial

import mpmath
from mpmath import mp, mpc, mpf

from . import exact
from .hasse import (
    SeriesEval,
    _hasse_core,
    _hurwitz_core,
    _log_power_kernel,
    _power_kernel,
    _converging,
    _rounded,
    _shift_for,
    digamma,
    riemann_zeta,
    zeta_derivative,
    zeta_prime_neg_even,
)
from .numkernel import (
    DEFAULT_CTX,
    DomainError,
    PoleError,
    PrecisionCtx,
    SingularityError,
    _to_mpc,
    _to_mpf,
    cos_pi,
    cos_pi_complex,
    gamma_ap,
    is_real,
    round_to,
    sin_pi,
    tan_pi,
    working,
)

__all__ = [
    "beta_closed",
    "beta_series",
    "b_s_of_one",
    "beta_reflection",
    "beta_negative_even",
    "beta_negative_odd",
    "beta_prime",
    "beta_prime_odd",
    "zeta_odd_hasse",
    "zeta_odd_functional",
    "zeta_even_closed",
    "limit_cos_weighted_pole",
    "functional_equation_check",
]


def _tube(ctx: PrecisionCtx) -> mpf:
    return mpf(2) ** (-(ctx.prec_bits // 4))


def _nearest_int(x: mpf) -> int:
    return int(mpmath.floor(x + mpf("0.5")))


def _eps_round(ctx: PrecisionCtx) -> mpf:
    return mpf(2) ** (6 - ctx.prec_bits)


def _realify(value, s):
    """Collapse an exact-zero imaginary part produced by mpc plumbing."""
    if isinstance(value, mpc) and _to_mpc(s).imag == 0 and value.imag == 0:
        return value.real
    return value


def _closed_prefactor(s, ctx: PrecisionCtx):
    """2 Gamma(s+1) (2 pi)^-s, the zeta- and trig-free part of the product."""
    g = gamma_ap(s + 1, ctx)
    return 2 * g * mpmath.power(2 * mp.pi, -s)


def b_s_of_one(s, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """The raw difference-series interpolant through the values B_n(1).

    Literal, unshifted summation of the kernel (1+k)^s.  At nonnegative
    integer s the difference table terminates and the value is B_n(1)
    up to rounding (so +1/2 at s = 1); elsewhere convergence is slow
    and the honest error bar is correspondingly wide.
    """
    with working(ctx):
        s = _to_mpc(s)
        se = s.real if s.imag == 0 else s
        total, err, terms, converged = _hasse_core(_power_kernel(mpf(1), se), ctx)
        return _rounded(total, err, terms, converged, ctx)


def beta_series(s, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """beta(s) as -cos(pi(1-s)) times the raw interpolant."""
    with working(ctx):
        s = _to_mpc(s)
        b = b_s_of_one(s, ctx)
        c = cos_pi_complex(1 - s, ctx)
        value = -c * b.value
        err = abs(c) * b.abs_err_estimate
        return _rounded(value, err, b.outer_terms_used, b.converged, ctx)


def _beta_limit_at_one(s, ctx: PrecisionCtx):
    """beta near s = 1, where zeta's pole meets the cos(pi s/2) zero.

    The product zeta(s) cos(pi s/2) tends to -pi/2; substituting the
    limit makes the branch exact at s = 1 and O(|s-1|) beside it.
    """
    pre = _closed_prefactor(s, ctx)
    c1 = cos_pi_complex(1 - s, ctx)
    value = pre * c1 * (-mp.pi / 2)
    err = abs(value) * (_eps_round(ctx) + 8 * abs(s - 1))
    return value, err


def beta_closed(s, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """beta(s) from the closed-form product, stable on the whole plane.

    Branches: the limit form near s = 1; the series interpolant inside a
    tiny tube around odd integers >= 3 (where the product pairs a large
    zeta-gamma factor with a vanishing cosine); the reflection identity
    near negative integers (where gamma poles meet cosine or zeta
    zeros); the literal product everywhere else.  beta is entire, so no
    input raises a pole error.
    """
    with working(ctx):
        s = _to_mpc(s)
        tube = _tube(ctx)
        if abs(s - 1) < tube:
            value, err = _beta_limit_at_one(s, ctx)
            return _rounded(_realify(value, s), err, 0, True, ctx)
        n = _nearest_int(s.real)
        near_int = abs(s - n) < tube
        if near_int and n >= 3 and n % 2 == 1:
            return beta_series(s, ctx)
        if near_int and n <= -1:
            return _beta_via_reflection_arg(s, ctx)
        z = riemann_zeta(s.real if s.imag == 0 else s, ctx)
        pre = _closed_prefactor(s, ctx)
        c0 = cos_pi_complex(s / 2, ctx)
        c1 = cos_pi_complex(1 - s, ctx)
        value = pre * z.value * c0 * c1
        err = abs(pre * c0 * c1) * z.abs_err_estimate + abs(value) * _eps_round(ctx)
        return _rounded(
            _realify(value, s), err, z.outer_terms_used, z.converged, ctx
        )


def _beta_via_reflection_arg(s, ctx: PrecisionCtx) -> SeriesEval:
    """beta(s) = s zeta(1-s) cos(pi(1-s)), stable for s well left of 1."""
    w = 1 - s
    z = riemann_zeta(w.real if w.imag == 0 else w, ctx)
    c = cos_pi_complex(w, ctx)
    value = s * z.value * c
    err = abs(s * c) * z.abs_err_estimate + abs(value) * _eps_round(ctx)
    return _rounded(_realify(value, s), err, z.outer_terms_used, z.converged, ctx)


def beta_reflection(s, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """beta(1 - s) computed as (1-s) zeta(s) cos(pi s); s != 1."""
    with working(ctx):
        s = _to_mpc(s)
        if abs(s - 1) <= mpf(2) ** (-(ctx.prec_bits // 2)):
            raise PoleError("zeta factor has its pole at s = 1")
        z = riemann_zeta(s.real if s.imag == 0 else s, ctx)
        c = cos_pi_complex(s, ctx)
        value = (1 - s) * z.value * c
        err = abs((1 - s) * c) * z.abs_err_estimate + abs(value) * _eps_round(ctx)
        return _rounded(_realify(value, s), err, z.outer_terms_used, z.converged, ctx)


def beta_negative_even(n: int, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """beta(-2n) = 2n zeta(2n+1), realized through the reflection form."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    return beta_reflection(2 * n + 1, ctx)


def beta_negative_odd(n: int, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """beta(1-2n) = (1-2n) zeta(2n), realized through the reflection form."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    return beta_reflection(2 * n, ctx)


# ---------------------------------------------------------------------------
# derivatives


def beta_prime(s, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """beta'(s) for real s > -1 away from odd integers.

    Assembled from the logarithmic derivative of the closed form.  The
    tangent terms are regrouped so the zeros of beta cancel them
    analytically; what remains is singular only where tan(pi s/2) has a
    pole (odd s, where ``beta_prime_odd`` applies) or psi(s+1) does.
    """
    with working(ctx):
        if not is_real(s):
            raise DomainError("beta_prime supports real s only")
        s = _to_mpf(s)
        tube = _tube(ctx)
        if s <= -1 + tube:
            raise SingularityError("psi(s+1) pole at s <= -1")
        n = _nearest_int(s)
        if n % 2 == 1 and abs(s - n) < tube:
            raise SingularityError(
                "tan(pi s/2) pole at odd s; use beta_prime_odd there"
            )
        psi = digamma(s + 1, ctx)
        z = riemann_zeta(s, ctx)
        zp = zeta_derivative(s, ctx)
        pre = _closed_prefactor(s, ctx)
        c0 = cos_pi(s / 2, ctx)
        c1 = cos_pi(1 - s, ctx)
        s1 = sin_pi(1 - s, ctx)
        h = pre * c0
        beta_val = h * z.value * c1
        bracket = psi.value - mpmath.log(2 * mp.pi) - (mp.pi / 2) * tan_pi(s / 2, ctx)
        value = bracket * beta_val + zp.value * h * c1 + mp.pi * s1 * h * z.value
        err = (
            psi.abs_err_estimate * abs(beta_val)
            + zp.abs_err_estimate * abs(h * c1)
            + z.abs_err_estimate * (abs(bracket * h * c1) + abs(mp.pi * s1 * h))
            + abs(value) * _eps_round(ctx)
        )
        terms = max(psi.outer_terms_used, z.outer_terms_used, zp.outer_terms_used)
        conv = psi.converged and z.converged and zp.converged
        return _rounded(value, err, terms, conv, ctx)


def beta_prime_odd(n: int, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """beta'(2n+1) in closed form for n >= 1.

    Only cos(pi s/2) vanishes at odd s, so the derivative is the product
    of the remaining factors with that cosine's slope:

        beta'(2n+1) = (-1)^(n+1) pi Gamma(2n+2) zeta(2n+1) (2 pi)^(-2n-1)

    Cross-validated against central differences of ``beta_closed``.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    with working(ctx):
        z = riemann_zeta(2 * n + 1, ctx)
        scale = mp.pi * factorial(2 * n + 1) * mpmath.power(2 * mp.pi, -2 * n - 1)
        sign = 1 if n % 2 == 1 else -1
        value = sign * scale * z.value
        err = scale * z.abs_err_estimate + abs(value) * _eps_round(ctx)
        return _rounded(value, err, z.outer_terms_used, z.converged, ctx)


# ---------------------------------------------------------------------------
# odd zeta values


def _log_series_total(n: int, ctx: PrecisionCtx):
    """The log-weighted series for (2n+1) zeta'(-2n), shifted for speed.

    Returns (value, err, terms, stagnated) of the full unshifted sum,
    reconstructed from the shifted evaluation plus the exact correction
    terms; the shifted zeta input is summed numerically here (the
    exact-rational variant lives in ``zeta_prime_neg_even``).  A second
    pass at tightened tolerance absorbs the cancellation between the
    correction terms and the shifted series.
    """
    s = mpf(-2 * n)
    shift = _shift_for(ctx, s, mpf(1))

    def attempt(c: PrecisionCtx):
        a2 = mpf(1 + shift)
        corr = mp.zero
        corr_scale = mpf(0)
        for j in range(2, shift + 1):
            term = mpmath.log(j) * mpf(j) ** (2 * n)
            corr += term
            corr_scale = max(corr_scale, abs(term))
        ztot, zerr, zterms, zconv = _hurwitz_core(s, a2, c, 0)
        ltot, lerr, lterms, lconv = _hasse_core(_log_power_kernel(a2, 1 - s), c)
        # L(1) = -(2n+1) * corr + zeta(-2n, a2) + L(a2)
        value = -(2 * n + 1) * corr + ztot + ltot
        err = (
            lerr
            + zerr
            + (2 * n + 1) * corr_scale * (shift + 1) * mpf(2) ** (2 - c.work_bits)
        )
        return value, err, max(zterms, lterms), zconv and lconv

    return _converging(ctx, attempt)


def zeta_odd_hasse(n: int, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """zeta(2n+1) from the log-weighted difference series, n >= 1."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    with working(ctx):
        total, err, terms, converged = _log_series_total(n, ctx)
        sign = 1 if n % 2 == 0 else -1
        factor = 2 * mpmath.power(2 * mp.pi, 2 * n) / factorial(2 * n + 1)
        value = sign * factor * total
        err = factor * err + abs(value) * _eps_round(ctx)
        return _rounded(value, err, terms, converged, ctx)


def zeta_odd_functional(n: int, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """zeta(2n+1) from zeta'(-2n) via the differentiated functional equation."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    with working(ctx):
        zp = zeta_prime_neg_even(n, ctx)
        sign = 1 if n % 2 == 0 else -1
        factor = 2 * mpmath.power(2 * mp.pi, 2 * n) / factorial(2 * n)
        value = sign * factor * zp.value
        err = factor * zp.abs_err_estimate + abs(value) * _eps_round(ctx)
        return _rounded(value, err, zp.outer_terms_used, zp.converged, ctx)


def zeta_even_closed(n: int, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """zeta(2n) = (-1)^(n+1) B_2n (2 pi)^(2n) / (2 (2n)!), n >= 1.

    Exact-rational input, so the only error is final rounding; serves as
    an independent high-precision reference at even integer arguments.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    with working(ctx):
        b = exact.bernoulli_recurrence(2 * n)
        sign = 1 if n % 2 == 1 else -1
        value = (
            sign
            * _to_mpf(b)
            * mpmath.power(2 * mp.pi, 2 * n)
            / (2 * factorial(2 * n))
        )
        err = abs(value) * _eps_round(ctx)
        return _rounded(value, err, 0, True, ctx)


# ---------------------------------------------------------------------------
# limits and consistency checks


def limit_cos_weighted_pole(ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """Extrapolated limit of zeta(s) cos(pi s/2) as s -> 1 (equals -pi/2).

    Samples the product at s = 1 + h for h = 1e-4, 1e-5, 1e-6 and
    extrapolates the removable singularity to h = 0 with a three-node
    Neville tableau.
    """
    with working(ctx):
        hs = [mpf("1e-4"), mpf("1e-5"), mpf("1e-6")]
        samples = []
        perr = mpf(0)
        terms = 0
        for h in hs:
            z = riemann_zeta(1 + h, ctx)
            c = cos_pi((1 + h) / 2, ctx)
            samples.append(z.value * c)
            perr = max(perr, z.abs_err_estimate * abs(c))
            terms = max(terms, z.outer_terms_used)
        # In-place Neville tableau evaluated at h = 0.
        t = list(samples)
        after_linear = None
        for j in range(1, 3):
            for i in range(2, j - 1, -1):
                t[i] = t[i] + (t[i] - t[i - 1]) * hs[i] / (hs[i - j] - hs[i])
            if j == 1:
                after_linear = t[2]
        correction = abs(t[2] - after_linear)
        value = t[2]
        err = correction + 4 * perr + abs(value) * _eps_round(ctx)
        # Not a difference series: converged reports extrapolation
        # stability (the last Neville correction), not the series
        # tolerance contract.
        return SeriesEval(
            round_to(value, ctx.prec_bits),
            round_to(err, 32),
            terms,
            correction < mpf("1e-6"),
        )


def functional_equation_check(s, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """Residual zeta(1-s) - 2 (2 pi)^-s Gamma(s) cos(pi s/2) zeta(s).

    Both sides are produced by this package's own kernels; the reported
    value is the residual and ``converged`` states whether it is below
    the combined error estimates.
    """
    with working(ctx):
        s = _to_mpc(s)
        tube = _tube(ctx)
        if abs(s) < tube or abs(s - 1) < tube:
            raise SingularityError("functional equation check excludes s near 0, 1")
        se = s.real if s.imag == 0 else s
        lhs = riemann_zeta(1 - se, ctx)
        rhs_z = riemann_zeta(se, ctx)
        g = gamma_ap(se, ctx)
        c = cos_pi_complex(se / 2, ctx)
        rhs = 2 * mpmath.power(2 * mp.pi, -se) * g * c * rhs_z.value
        residual = lhs.value - rhs
        err = (
            lhs.abs_err_estimate
            + abs(2 * mpmath.power(2 * mp.pi, -se) * g * c) * rhs_z.abs_err_estimate
            + (abs(rhs) + abs(lhs.value)) * _eps_round(ctx)
        )
        terms = max(lhs.outer_terms_used, rhs_z.outer_terms_used)
        ok = lhs.converged and rhs_z.converged and abs(residual) <= err
        return _rounded(residual, err, terms, ok, ctx)
