"""Globally convergent forward-difference summation and its instances.

One engine drives everything in this module: the double series

    sum_{m>=0} 1/(m+1) * sum_{k=0}^{m} C(m,k) (-1)^k f(k)

whose inner sums are rows of the forward-difference table of the term
kernel ``f``.  Specializing ``f`` yields the Hurwitz and Riemann zeta
functions, the zeta derivative, the digamma function and the
generalized Stieltjes constants.

Convergence of the literal series is only polynomial in the number of
outer terms, far too slow for tight tolerances, so the public
evaluators first move the shift parameter into the fast-convergence
region using the exact recurrences these functions satisfy
(zeta(s,a) = a^-s + zeta(s,a+1) and its relatives) and then run the
difference engine on the shifted kernel.  The literal, unshifted sum
remains available through ``hasse_sum`` itself.

Cancellation control: the alternating inner sums lose roughly one bit
per outer term, which is why ``PrecisionCtx`` requires
``guard_bits >= max_outer_terms + 32``; the engine tracks the implied
rounding floor and folds it into the reported error estimate.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Callable, Union

import mpmath
from mpmath import mp, mpc, mpf

from . import exact
from .numkernel import (
    DEFAULT_CTX,
    DomainError,
    PoleError,
    PrecisionCtx,
    _to_mpc,
    _to_mpf,
    is_real,
    round_to,
    working,
)

Value = Union[mpf, mpc]
TermKernel = Callable[[int], Value]

__all__ = [
    "SeriesEval",
    "TermKernel",
    "hasse_sum",
    "hurwitz_zeta",
    "riemann_zeta",
    "zeta_derivative",
    "zeta_prime_neg_even",
    "digamma",
    "stieltjes",
]

STIELTJES_DEFAULT_MAX_P = 20


@dataclass(frozen=True)
class SeriesEval:
    """Value of a summed series plus an honest accuracy estimate."""

    value: Value
    abs_err_estimate: mpf
    outer_terms_used: int
    converged: bool

    def to_json_dict(self, digits: int = 30) -> dict:
        z = _to_mpc(self.value)
        return {
            "value": {
                "re": mpmath.nstr(z.real, digits),
                "im": mpmath.nstr(z.imag, digits),
            },
            "abs_err": mpmath.nstr(self.abs_err_estimate, 8),
            "terms": self.outer_terms_used,
            "converged": self.converged,
        }


def _inv_target(ctx: PrecisionCtx, value) -> mpf:
    """The accuracy a converged result must certify: rel_tol relative to
    the value, or rel_tol absolutely when the value is itself tiny."""
    av = abs(_to_mpc(value))
    return ctx.rel_tol * av if av >= ctx.rel_tol else ctx.rel_tol


def _rounded(value, err, terms, stagnated, ctx: PrecisionCtx) -> SeriesEval:
    """Round to output precision, charging the rounding to the error bar.

    The converged flag certifies the SeriesEval accuracy contract, not
    merely that summation stagnated: stagnation with a bar still above
    the target (from cancellation in an enclosing assembly) reports
    converged=False.
    """
    out = round_to(value, ctx.prec_bits)
    err = _to_mpf(err) + abs(_to_mpc(value)) * mpf(2) ** (2 - ctx.prec_bits)
    converged = bool(stagnated) and err <= _inv_target(ctx, value)
    return SeriesEval(out, round_to(err, 32), terms, converged)


def _converging(ctx: PrecisionCtx, attempt, max_passes: int = 3):
    """Drive an evaluation attempt until its bar meets the accuracy
    contract of ctx, tightening the summation tolerance between passes.

    Internal cancellation (a result much smaller than the sums that
    build it) makes a single pass miss the target; each retry rescales
    the tolerance from the latest, more trustworthy value estimate.
    Stops early when tightening is no longer representable.
    """
    c = ctx
    value, err, terms, stag = attempt(c)
    for _ in range(max_passes - 1):
        if not stag:
            break
        err = _to_mpf(err)
        target = _inv_target(ctx, value)
        if err <= target:
            break
        rel2 = c.rel_tol / (err / target * 16)
        floor = mpf(2) ** (1 - ctx.prec_bits)
        if rel2 < floor:
            rel2 = floor
        if rel2 >= c.rel_tol:
            break
        c = dataclasses.replace(ctx, rel_tol=rel2)
        value, err, terms, stag = attempt(c)
    return value, err, terms, stag


# ---------------------------------------------------------------------------
# the engine


def _hasse_core(f: TermKernel, ctx: PrecisionCtx):
    """Sum the literal double series; caller is inside working(ctx).

    Returns (total, abs_err, terms_used, converged).  The difference
    table is held as its rising anti-diagonal: after consuming
    f(0..m), ``diag[i]`` is the alternating i-th difference starting
    at offset m - i, so ``diag[m]`` is the inner sum for outer index m.
    """
    def term(k: int):
        v = f(k)
        if isinstance(v, (mpf, mpc)):
            return v
        return _to_mpc(v) if isinstance(v, complex) else _to_mpf(v)

    tol = ctx.rel_tol
    window = ctx.stagnation_window
    diag = [term(0)]
    total = diag[0]
    scale = abs(diag[0])
    sizes: list[mpf] = [scale]
    quiet = 0
    terms = 0
    converged = False
    for m in range(1, ctx.max_outer_terms + 1):
        v = term(m)
        av = abs(v)
        if av > scale:
            scale = av
        new = [v]
        for i in range(1, m + 1):
            new.append(diag[i - 1] - new[i - 1])
        diag = new
        t = diag[m] / (m + 1)
        total += t
        terms = m
        at = abs(t)
        sizes.append(at)
        # The /8 margin keeps 4x the window maximum under the tolerance.
        if at <= tol / 8 * max(abs(total), tol):
            quiet += 1
            if quiet >= window:
                converged = True
                break
        else:
            quiet = 0
    tail = max(sizes[-window:]) * 4
    if not converged:
        # Cap hit while terms were still shrinking slowly: extrapolate the
        # tail from the observed decay exponent (|t_m| ~ m^-p gives a
        # remainder near |t_M| * M / (p - 1)).
        t_end = max(sizes[-window:])
        t_mid = max(sizes[terms // 2 : terms // 2 + window]) if terms >= 8 else t_end
        if t_end > 0 and t_mid > t_end:
            p = float(mpmath.log(t_mid / t_end, 2))
        else:
            p = 1.0
        growth = terms / max(p - 1.0, 0.25)
        tail = t_end * 4 * max(growth, 1.0)
    # Cancellation floor: the table accumulates one rounding bit per row.
    floor = scale * mpf(2) ** (terms + 2 - ctx.work_bits)
    return total, tail + floor, terms, converged


def hasse_sum(f: TermKernel, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """Sum the literal alternating-binomial double series of kernel f.

    No shifting or acceleration is applied: polynomial kernels terminate
    exactly, anything else converges at the series' own (slow) rate and
    the result carries ``converged=False`` with a widened error bar when
    the term cap is hit first.
    """
    with working(ctx):
        total, err, terms, converged = _hasse_core(f, ctx)
        return _rounded(total, err, terms, converged, ctx)


# ---------------------------------------------------------------------------
# shift policy


def _tol_bits(ctx: PrecisionCtx) -> int:
    return max(12, int(math.ceil(-mpmath.log(ctx.rel_tol, 2))))


def _shift_for(ctx: PrecisionCtx, s: Value, a: mpf) -> int:
    """Shift count moving `a` into the fast-convergence region.

    Calibrated so stagnation arrives near 0.8 * tolerance-bits outer
    terms; larger imaginary parts of the exponent slow the inner-sum
    decay and get a proportional boost.
    """
    bits = _tol_bits(ctx)
    im = abs(_to_mpc(s).imag)
    target = int(math.ceil(0.55 * bits)) + 8 + int(math.ceil(4.6 * float(im)))
    return max(0, target - int(mpmath.floor(a)))


def _exact_nonpos_int(s: Value):
    """Return n >= 0 when s is exactly the integer -n, else None."""
    z = _to_mpc(s)
    if z.imag != 0 or z.real > 0:
        return None
    n = mpmath.floor(z.real + mpf("0.5"))
    if z.real == n:
        return -int(n)
    return None


# ---------------------------------------------------------------------------
# zeta family


def _check_a(a) -> mpf:
    if not is_real(a):
        raise DomainError("shift parameter must be real, got %r" % (a,))
    a = _to_mpf(a)
    if a <= 0:
        raise DomainError("shift parameter must be positive, got %s" % a)
    return a


def _check_not_pole(s: Value, ctx: PrecisionCtx) -> Value:
    s = _to_mpc(s)
    if abs(s - 1) <= mpf(2) ** (-(ctx.prec_bits // 2)):
        raise PoleError("zeta pole at s = 1")
    return s.real if s.imag == 0 else s


def _power_kernel(a: mpf, expo: Value) -> TermKernel:
    if is_real(expo):
        e = _to_mpf(expo)
        if e == mpmath.floor(e) and e >= 0:
            ei = int(e)
            return lambda k: (k + a) ** ei
        return lambda k: mpmath.power(k + a, e)
    e = _to_mpc(expo)
    return lambda k: mpmath.power(k + a, e)


def _hurwitz_shift(s: Value, a: mpf, ctx: PrecisionCtx) -> int:
    return 0 if _exact_nonpos_int(s) is not None else _shift_for(ctx, s, a)


def _hurwitz_core(s: Value, a: mpf, ctx: PrecisionCtx, shift: int | None = None):
    """zeta(s, a) unrounded; caller is inside working(ctx)."""
    if shift is None:
        shift = _hurwitz_shift(s, a, ctx)
    corr = mp.zero
    corr_scale = mpf(0)
    for j in range(shift):
        term = mpmath.power(a + j, -s)
        corr += term
        corr_scale = max(corr_scale, abs(term))
    a2 = a + shift
    total, err, terms, converged = _hasse_core(_power_kernel(a2, 1 - s), ctx)
    value = corr + total / (s - 1)
    err = err / abs(s - 1) + (corr_scale + abs(value)) * mpf(2) ** (4 - ctx.work_bits)
    return value, err, terms, converged


def hurwitz_zeta(s, a, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """Hurwitz zeta(s, a) for any s away from 1 and real a > 0.

    At exact nonpositive integer s the difference table terminates and
    the result is a rounded exact rational; elsewhere the kernel is
    shifted before summation so the requested tolerance is reachable
    within the outer-term budget.
    """
    with working(ctx):
        s = _check_not_pole(s, ctx)
        a = _check_a(a)
        # The shift is frozen across retries: tightening it too would
        # grow the shifted kernel and re-lose the digits being recovered.
        shift = _hurwitz_shift(s, a, ctx)
        value, err, terms, stag = _converging(
            ctx, lambda c: _hurwitz_core(s, a, c, shift)
        )
        return _rounded(value, err, terms, stag, ctx)


def riemann_zeta(s, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """Riemann zeta as the shift-1 specialization of hurwitz_zeta."""
    return hurwitz_zeta(s, 1, ctx)


def _log_power_kernel(a: mpf, expo: Value) -> TermKernel:
    if is_real(expo):
        e = _to_mpf(expo)
        if e == mpmath.floor(e) and e >= 0:
            ei = int(e)
            return lambda k: mpmath.log(k + a) * (k + a) ** ei
        return lambda k: mpmath.log(k + a) * mpmath.power(k + a, e)
    e = _to_mpc(expo)
    return lambda k: mpmath.log(k + a) * mpmath.power(k + a, e)


def _zeta_prime_shifted(s: Value, a2: mpf, zeta_at_a2, ctx: PrecisionCtx):
    """zeta'(s, a2) from the log-weighted series and a value of zeta(s, a2).

    Uses d/ds[(s-1) zeta(s,a)] = -sum-of-log-kernel, i.e.
    zeta'(s,a) = -(L(s,a) + zeta(s,a)) / (s - 1).
    """
    total, err, terms, converged = _hasse_core(_log_power_kernel(a2, 1 - s), ctx)
    value = -(total + zeta_at_a2) / (s - 1)
    err = (err + abs(total) * mpf(2) ** (4 - ctx.work_bits)) / abs(s - 1)
    return value, err, terms, converged


def zeta_derivative(s, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """zeta'(s) from the log-weighted difference series (s != 1)."""
    with working(ctx):
        s = _check_not_pole(s, ctx)
        shift = _shift_for(ctx, s, mpf(1))

        def attempt(c: PrecisionCtx):
            a2 = mpf(1 + shift)
            corr = mp.zero
            corr_scale = mpf(0)
            for j in range(2, shift + 1):
                term = mpmath.log(j) * mpmath.power(j, -s)
                corr -= term
                corr_scale = max(corr_scale, abs(term))
            zval, zerr, zterms, zconv = _hurwitz_core(s, a2, c, 0)
            value, err, terms, stag = _zeta_prime_shifted(s, a2, zval, c)
            value = corr + value
            err = err + zerr / abs(s - 1)
            err = err + (corr_scale + abs(value)) * mpf(2) ** (4 - c.work_bits)
            return value, err, max(terms, zterms), stag and zconv

        value, err, terms, stag = _converging(ctx, attempt)
        return _rounded(value, err, terms, stag, ctx)


def zeta_prime_neg_even(n: int, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """zeta'(-2n) for n >= 1, with the exact-rational zeta(-2n, a) input.

    The trivial zero makes (2n+1) zeta'(-2n) equal to the log-weighted
    series alone; after shifting, the zeta value at the shifted argument
    is supplied exactly from the Bernoulli-polynomial module rather than
    summed numerically, which keeps this route independent of
    ``zeta_derivative``.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    with working(ctx):
        s = mpf(-2 * n)
        shift = _shift_for(ctx, s, mpf(1))

        def attempt(c: PrecisionCtx):
            a2 = mpf(1 + shift)
            corr = mp.zero
            corr_scale = mpf(0)
            for j in range(2, shift + 1):
                term = mpmath.log(j) * mpf(j) ** (2 * n)
                corr -= term
                corr_scale = max(corr_scale, abs(term))
            zq = -exact.bernoulli_poly_eval(
                exact.bernoulli_poly(2 * n + 1), exact.BigRat(1 + shift)
            ) / (2 * n + 1)
            zx = _to_mpf(zq)
            value, err, terms, stag = _zeta_prime_shifted(s, a2, zx, c)
            value = corr + value
            err = err + (corr_scale + abs(value) + abs(zx)) * mpf(2) ** (
                4 - c.work_bits
            )
            return value, err, terms, stag

        value, err, terms, stag = _converging(ctx, attempt)
        return _rounded(value, err, terms, stag, ctx)


# ---------------------------------------------------------------------------
# digamma and Stieltjes constants


def digamma(a, ctx: PrecisionCtx = DEFAULT_CTX) -> SeriesEval:
    """psi(a) for real a > 0 from the log kernel.

    The unshifted series is exactly the finite part of zeta(s, a) at
    s = 1; the evaluator walks `a` upward with psi(a+1) = psi(a) + 1/a
    first so the series part converges within budget.
    """
    with working(ctx):
        a = _check_a(a)
        shift = _shift_for(ctx, mpf(1), a)

        def attempt(c: PrecisionCtx):
            a2 = a + shift
            corr = mp.zero
            for j in range(shift):
                corr += 1 / (a + j)
            total, err, terms, stag = _hasse_core(lambda k: mpmath.log(k + a2), c)
            value = total - corr
            err = err + (abs(corr) + abs(value)) * mpf(2) ** (4 - c.work_bits)
            return value, err, terms, stag

        value, err, terms, stag = _converging(ctx, attempt)
        return _rounded(value, err, terms, stag, ctx)


def stieltjes(p: int, u, ctx: PrecisionCtx | None = None) -> SeriesEval:
    """Generalized Stieltjes constant gamma_p(u) for real u > 0.

    The p-th power of the logarithm amplifies the inner-sum
    cancellation, so p > 20 is rejected unless the caller passes an
    explicit ctx and thereby owns the guard-bit budget.
    """
    if p < 0:
        raise DomainError("p must be nonnegative")
    if p > STIELTJES_DEFAULT_MAX_P and ctx is None:
        raise DomainError(
            "p > %d needs an explicit PrecisionCtx with a matching guard-bit "
            "budget" % STIELTJES_DEFAULT_MAX_P
        )
    ctx = ctx or DEFAULT_CTX
    with working(ctx):
        u = _check_a(u)
        q = p + 1
        shift = _shift_for(ctx, mpf(1), u)

        def attempt(c: PrecisionCtx):
            u2 = u + shift
            corr = mp.zero
            corr_scale = mpf(0)
            for j in range(shift):
                term = mpmath.log(u + j) ** p / (u + j)
                corr += term
                corr_scale = max(corr_scale, abs(term))
            total, err, terms, stag = _hasse_core(
                lambda k: mpmath.log(k + u2) ** q, c
            )
            value = corr - total / q
            err = err / q + (corr_scale + abs(value)) * mpf(2) ** (4 - c.work_bits)
            return value, err, terms, stag

        value, err, terms, stag = _converging(ctx, attempt)
        return _rounded(value, err, terms, stag, ctx)
