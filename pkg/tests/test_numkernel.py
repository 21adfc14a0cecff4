"""Kernel-level contracts: gamma, pi-multiple trig, powers, logs."""

import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mpc, mpf

from bzeta import (
    DomainError,
    PoleError,
    PrecisionCtx,
    SingularityError,
    cos_pi,
    gamma_ap,
    log_ap,
    pow_complex,
    sin_pi,
    tan_pi,
)
from oracles import log2_enclosure


def eps(ctx, slack):
    return mpf(2) ** (slack - ctx.prec_bits)


class TestGamma:
    def test_factorial_base_case(self, ctx):
        assert abs(gamma_ap(1, ctx) - 1) <= eps(ctx, 4)

    def test_integer_factorials(self, ctx):
        assert abs(gamma_ap(5, ctx) - 24) <= 24 * eps(ctx, 4)
        assert abs(gamma_ap(7, ctx) - 720) <= 720 * eps(ctx, 4)

    def test_half_integer_via_reflection_oracle(self, ctx):
        # Gamma(1/2)^2 = pi is exactly the reflection identity at s = 1/2.
        g = gamma_ap(mpf("0.5"), ctx)
        assert abs(g * g - mpmath.pi) <= mpmath.pi * eps(ctx, 6)

    @pytest.mark.parametrize("s", [0, -1, -2, -7])
    def test_pole_rejection(self, ctx, s):
        with pytest.raises(PoleError):
            gamma_ap(s, ctx)

    def test_complex_matches_library(self, ctx):
        # Extra oracle besides the identities: an independent implementation.
        for s in (mpc(3, 2), mpc("0.25", "-1.5"), mpf("-2.5")):
            ours = gamma_ap(s, ctx)
            ref = mpmath.gamma(mpc(s))
            assert abs(ours - ref) <= abs(ref) * eps(ctx, 6)

    def _pole_safe_grid(self, count=100, seed=20260810):
        rng = random.Random(seed)
        pts = []
        while len(pts) < count:
            re = rng.uniform(-20, 20)
            im = rng.uniform(-12, 12)
            if abs(complex(re, im)) > 20:
                continue
            if abs(im) < 1e-3 and (re < 0.5 and abs(re - round(re)) < 1e-3):
                continue
            pts.append(mpc(re, im))
        return pts

    def test_recurrence_residual_grid(self, ctx):
        bound = mpf(2) ** (8 - ctx.prec_bits)
        for s in self._pole_safe_grid():
            up = gamma_ap(s + 1, ctx)
            lo = gamma_ap(s, ctx)
            assert abs(up - s * lo) / abs(up) < bound

    def test_reflection_residual_grid(self, ctx):
        from bzeta.numkernel import sin_pi_complex

        bound = mpf(2) ** (8 - ctx.prec_bits)
        for s in self._pole_safe_grid(seed=977):
            if abs(s.imag) < 1e-3 and abs(s.real - round(float(s.real))) < 1e-3:
                continue  # sin(pi s) zero makes the normalized residual 0/0
            lhs = gamma_ap(s, ctx) * gamma_ap(1 - s, ctx) * sin_pi_complex(s, ctx)
            assert abs(lhs / mpmath.pi - 1) < bound


class TestPiTrig:
    def test_half_integer_zeros_bit_exact(self, ctx):
        rng = random.Random(7)
        ks = list(range(-100, 101)) + [rng.randint(-10**6, 10**6) for _ in range(500)]
        ks += [-(10**6), 10**6]
        half = mpf("0.5")
        for k in ks:
            assert cos_pi(mpf(k) + half, ctx) == 0
            assert sin_pi(mpf(k), ctx) == 0

    def test_integer_parity_values(self, ctx):
        assert cos_pi(3, ctx) == -1
        assert cos_pi(-4, ctx) == 1
        assert sin_pi(mpf("2.5"), ctx) == 1
        assert sin_pi(mpf("-2.5"), ctx) == -1

    def test_exact_rational_point(self, ctx):
        val = sin_pi(Fraction(1, 6), ctx)
        assert abs(val - mpf("0.5")) <= eps(ctx, 3)

    def test_tan_pole(self, ctx):
        with pytest.raises(SingularityError):
            tan_pi(mpf("0.5"), ctx)
        assert abs(tan_pi(Fraction(1, 4), ctx) - 1) <= eps(ctx, 4)


class TestPowLog:
    def test_power_of_one(self, ctx):
        for s in (mpf(3), mpc(2, 5), mpf("-7.25")):
            assert pow_complex(1, s, ctx) == 1

    def test_integer_power(self, ctx):
        assert pow_complex(2, 3, ctx) == 8

    def test_euler_identity(self, ctx):
        s = mpc(0, mpmath.pi / mpmath.log(mpf(2)))
        val = pow_complex(2, s, ctx)
        assert abs(val + 1) <= eps(ctx, 8)

    def test_domain_errors(self, ctx):
        with pytest.raises(DomainError):
            pow_complex(0, 2, ctx)
        with pytest.raises(DomainError):
            pow_complex(-3, 2, ctx)
        with pytest.raises(DomainError):
            log_ap(0, ctx)
        with pytest.raises(DomainError):
            log_ap(-1, ctx)

    @settings(max_examples=40, deadline=None)
    @given(
        b=st.floats(min_value=0.1, max_value=50),
        x1=st.floats(min_value=-6, max_value=6),
        y1=st.floats(min_value=-6, max_value=6),
        x2=st.floats(min_value=-6, max_value=6),
    )
    def test_power_additivity(self, ctx, b, x1, y1, x2):
        s1 = mpc(x1, y1)
        s2 = mpc(x2, -y1 / 2)
        lhs = pow_complex(b, s1 + s2, ctx)
        rhs = pow_complex(b, s1, ctx) * pow_complex(b, s2, ctx)
        assert abs(lhs - rhs) <= 4 * abs(lhs) * mpf(2) ** (1 - ctx.prec_bits)

    def test_log_one_exact(self, ctx):
        assert log_ap(1, ctx) == 0

    def test_log_inverse_of_exp(self, ctx):
        e = mpmath.exp(mpf(1))
        assert abs(log_ap(e, ctx) - 1) <= eps(ctx, 4)

    def test_log_two_against_rational_enclosure(self, ctx):
        lo, hi = log2_enclosure()
        val = log_ap(2, ctx)
        assert mpf(lo.numerator) / lo.denominator - eps(ctx, 4) <= val
        assert val <= mpf(hi.numerator) / hi.denominator + eps(ctx, 4)


class TestPrecisionCtx:
    def test_guard_bits_floor(self):
        with pytest.raises(ValueError):
            PrecisionCtx(guard_bits=100)

    def test_rel_tol_floor(self):
        with pytest.raises(ValueError):
            PrecisionCtx(prec_bits=64, rel_tol=mpf(2) ** -100)

    def test_defaults(self, ctx):
        assert ctx.prec_bits == 256
        assert ctx.guard_bits == 432
        assert ctx.work_bits == 688
        assert ctx.out_digits == 73
