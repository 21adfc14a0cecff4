"""Arbitrary-precision numeric kernels shared by every other module.

The carriers are mpmath's binary floats: ``RealAP`` is a sign/mantissa/
exponent triple with configurable mantissa width, ``ComplexAP`` a pair of
them.  All operations here are pure functions of ``(arguments, ctx)``:
they compute internally at ``ctx.prec_bits + ctx.guard_bits`` and round
the result to ``ctx.prec_bits`` on return.

The gamma function is evaluated with Spouge's approximation, whose error
bound scales with the requested precision (a fixed Lanczos table does
not), and switches to the reflection formula for Re(s) < 1/2.  The
pi-multiple trig kernels reduce their argument exactly against the
nearest integer, so half-integer zeros are bit-exact.
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf
from mpmath.libmp import mpf_pos, round_nearest

RealAP = mpmath.mpf
ComplexAP = mpmath.mpc

__all__ = [
    "RealAP",
    "ComplexAP",
    "PrecisionCtx",
    "DEFAULT_CTX",
    "DomainError",
    "PoleError",
    "SingularityError",
    "gamma_ap",
    "cos_pi",
    "sin_pi",
    "tan_pi",
    "cos_pi_complex",
    "sin_pi_complex",
    "pow_complex",
    "log_ap",
]


class DomainError(ValueError):
    """Argument outside the mathematical domain of the operation."""


class PoleError(ArithmeticError):
    """Evaluation requested at (or within one ulp of) a genuine pole."""


class SingularityError(ArithmeticError):
    """Evaluation requested too close to a singular point of a formula."""


def _to_mpf(x) -> mpf:
    if isinstance(x, mpf):
        return x
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, (int, float, str)):
        return mpf(x)
    if isinstance(x, mpc):
        if x.imag == 0:
            return x.real
        raise DomainError("expected a real value, got complex %r" % (x,))
    raise TypeError("cannot coerce %r to a real value" % (x,))


def _to_mpc(x) -> mpc:
    if isinstance(x, mpc):
        return x
    if isinstance(x, complex):
        return mpc(x.real, x.imag)
    # Splice the raw mantissa in directly; mpc(x) would re-round it to the
    # ambient precision.
    return mpmath.make_mpc((_to_mpf(x)._mpf_, mpmath.libmp.fzero))


@dataclass(frozen=True)
class PrecisionCtx:
    """Per-call numeric policy.

    prec_bits          output mantissa width in bits
    rel_tol            relative truncation tolerance for series summation
    max_outer_terms    cap on outer series terms before giving up
    guard_bits         extra working-precision bits absorbing cancellation;
                       must cover one bit per outer term plus headroom
    stagnation_window  consecutive negligible terms required to stop
    """

    prec_bits: int = 256
    rel_tol: object = "1e-30"
    max_outer_terms: int = 400
    guard_bits: int | None = None
    stagnation_window: int = 5

    def __post_init__(self):
        if self.prec_bits < 8:
            raise ValueError("prec_bits must be at least 8")
        if self.max_outer_terms < 1:
            raise ValueError("max_outer_terms must be positive")
        if self.stagnation_window < 1:
            raise ValueError("stagnation_window must be positive")
        if self.guard_bits is None:
            object.__setattr__(self, "guard_bits", self.max_outer_terms + 32)
        if self.guard_bits < self.max_outer_terms + 32:
            raise ValueError("guard_bits must be >= max_outer_terms + 32")
        with mp.workprec(self.work_bits):
            tol = _to_mpf(self.rel_tol)
            if tol < mpf(2) ** (1 - self.prec_bits):
                raise ValueError("rel_tol must be >= 2**(1 - prec_bits)")
            object.__setattr__(self, "rel_tol", tol)

    @property
    def work_bits(self) -> int:
        return self.prec_bits + self.guard_bits

    @property
    def out_digits(self) -> int:
        """Significant decimal digits justified by prec_bits."""
        return max(5, math.ceil(self.prec_bits * math.log10(2)) - 5)


DEFAULT_CTX = PrecisionCtx()

# mpmath's working precision is process-global; serialize access so calls
# are safe (not parallel) under unrestricted concurrent invocation.
_MP_LOCK = threading.RLock()


@contextmanager
def working(ctx: PrecisionCtx):
    """Enter the working precision of ctx (re-entrant)."""
    with _MP_LOCK:
        with mp.workprec(ctx.work_bits):
            yield


def round_to(x, prec_bits: int):
    """Round an mpf/mpc to prec_bits (exact inputs pass through shrunk)."""
    if isinstance(x, mpc):
        return mpc(round_to(x.real, prec_bits), round_to(x.imag, prec_bits))
    return mpmath.make_mpf(mpf_pos(_to_mpf(x)._mpf_, prec_bits, round_nearest))


def is_real(x) -> bool:
    return not isinstance(x, (mpc, complex)) or _to_mpc(x).imag == 0


def ulp_at(x, prec_bits: int) -> mpf:
    """Magnitude of one unit in the last place of x at prec_bits."""
    ax = abs(_to_mpc(x)) if isinstance(x, (mpc, complex)) else abs(_to_mpf(x))
    if ax == 0:
        return mpf(2) ** (-prec_bits)
    return ax * mpf(2) ** (1 - prec_bits)


# ---------------------------------------------------------------------------
# pi-multiple trigonometry with exact integer reduction


def _split_half(x: mpf):
    """Split x = n + r exactly with integer n and r in [-1/2, 1/2]."""
    n = mpmath.floor(x + mpf("0.5"))
    # Subtraction of nearby binary floats is exact (prec=0 requests no rounding).
    r = mpmath.make_mpf(mpmath.libmp.mpf_sub(x._mpf_, n._mpf_, 0, round_nearest))
    return int(n), r


def cos_pi(x, ctx: PrecisionCtx = DEFAULT_CTX) -> mpf:
    """cos(pi*x) with the integer part of x reduced exactly.

    cos_pi(k + 1/2) == 0 and cos_pi(k) == (-1)**k bit-exactly for all
    integers k representable in the working precision.
    """
    with working(ctx):
        n, r = _split_half(_to_mpf(x))
        sign = -1 if n % 2 else 1
        if r == 0:
            return mpf(sign)
        if abs(r) == mpf("0.5"):
            return mpf(0)
        return round_to(sign * mpmath.cospi(r), ctx.prec_bits)


def sin_pi(x, ctx: PrecisionCtx = DEFAULT_CTX) -> mpf:
    """sin(pi*x); sin_pi(k) == 0 bit-exactly for integer k."""
    with working(ctx):
        n, r = _split_half(_to_mpf(x))
        sign = -1 if n % 2 else 1
        if r == 0:
            return mpf(0)
        if abs(r) == mpf("0.5"):
            return mpf(sign if r > 0 else -sign)
        return round_to(sign * mpmath.sinpi(r), ctx.prec_bits)


def tan_pi(x, ctx: PrecisionCtx = DEFAULT_CTX) -> mpf:
    """tan(pi*x); raises SingularityError at half-integer x."""
    with working(ctx):
        c = cos_pi(x, ctx)
        if c == 0:
            raise SingularityError("tan(pi*x) pole at x = %s" % x)
        return round_to(sin_pi(x, ctx) / c, ctx.prec_bits)


def cos_pi_complex(z, ctx: PrecisionCtx = DEFAULT_CTX):
    """cos(pi*z) for complex z, exact on the real axis like cos_pi."""
    z = _to_mpc(z)
    if z.imag == 0:
        return cos_pi(z.real, ctx)
    with working(ctx):
        u, v = z.real, z.imag
        pv = mp.pi * v
        val = mpc(cos_pi(u, ctx) * mpmath.cosh(pv), -sin_pi(u, ctx) * mpmath.sinh(pv))
        return round_to(val, ctx.prec_bits)


def sin_pi_complex(z, ctx: PrecisionCtx = DEFAULT_CTX):
    """sin(pi*z) for complex z, exact on the real axis like sin_pi."""
    z = _to_mpc(z)
    if z.imag == 0:
        return sin_pi(z.real, ctx)
    with working(ctx):
        u, v = z.real, z.imag
        pv = mp.pi * v
        val = mpc(sin_pi(u, ctx) * mpmath.cosh(pv), cos_pi(u, ctx) * mpmath.sinh(pv))
        return round_to(val, ctx.prec_bits)


# ---------------------------------------------------------------------------
# powers and logarithms


def pow_complex(base, s, ctx: PrecisionCtx = DEFAULT_CTX):
    """base**s = exp(s*log(base)) for a positive real base."""
    with working(ctx):
        b = _to_mpf(base)
        if b <= 0:
            raise DomainError("pow_complex requires base > 0, got %s" % b)
        s = _to_mpc(s)
        if s.imag == 0:
            return round_to(mpmath.power(b, s.real), ctx.prec_bits)
        return round_to(mpmath.exp(s * mpmath.log(b)), ctx.prec_bits)


def log_ap(x, ctx: PrecisionCtx = DEFAULT_CTX) -> mpf:
    """Natural logarithm of a positive real."""
    with working(ctx):
        x = _to_mpf(x)
        if x <= 0:
            raise DomainError("log_ap requires x > 0, got %s" % x)
        return round_to(mpmath.log(x), ctx.prec_bits)


# ---------------------------------------------------------------------------
# gamma via Spouge's approximation

_SPOUGE_CACHE: dict[tuple[int, int], list] = {}


def _spouge_a(prec_bits: int) -> int:
    return math.ceil(prec_bits * math.log(2) / math.log(2 * math.pi)) + 2


def _spouge_coeffs(a: int, work_bits: int) -> list:
    key = (a, work_bits)
    got = _SPOUGE_CACHE.get(key)
    if got is not None:
        return got
    with mp.workprec(work_bits):
        coeffs = [mpmath.sqrt(2 * mp.pi)]
        sign = 1
        fact = 1
        for k in range(1, a):
            ck = mpmath.power(a - k, k - mpf("0.5")) * mpmath.exp(a - k)
            coeffs.append(sign * ck / fact)
            sign = -sign
            fact *= k
    _SPOUGE_CACHE[key] = coeffs
    return coeffs


def _spouge_gamma_right(z, a: int, coeffs) -> mpc:
    # Gamma(z+1) for Re(z) >= -1/2; all shifted denominators stay positive.
    acc = coeffs[0]
    for k in range(1, a):
        acc += coeffs[k] / (z + k)
    return mpmath.power(z + a, z + mpf("0.5")) * mpmath.exp(-(z + a)) * acc


def gamma_ap(s, ctx: PrecisionCtx = DEFAULT_CTX):
    """Gamma(s) for real or complex s.

    Relative error is below 2**(4 - prec_bits).  Raises PoleError when s
    is within one working-precision ulp of a nonpositive integer.
    """
    with working(ctx):
        s = _to_mpc(s)
        if s.imag == 0:
            n = mpmath.floor(s.real + mpf("0.5"))
            if n <= 0 and abs(s.real - n) <= ulp_at(max(abs(n), mpf(1)), ctx.work_bits):
                raise PoleError("gamma pole at s = %s" % mpmath.nstr(s.real, 8))
        a = _spouge_a(ctx.prec_bits)
        coeffs = _spouge_coeffs(a, ctx.work_bits)
        if s.real < mpf("0.5"):
            # Reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
            g = _spouge_gamma_right(-s, a, coeffs)
            val = mp.pi / (sin_pi_complex(s, ctx) * g)
        else:
            val = _spouge_gamma_right(s - 1, a, coeffs)
        if s.imag == 0:
            val = val.real if isinstance(val, mpc) else val
        return round_to(val, ctx.prec_bits)
