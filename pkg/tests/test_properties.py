"""Property-level checks at random points, plus independent-library
cross-checks (mpmath's zeta/digamma use different algorithm families,
so agreement is a genuine second opinion, not a shared code path)."""

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mpc, mpf

from bzeta import (
    beta_closed,
    digamma,
    hurwitz_zeta,
    riemann_zeta,
    stieltjes,
    zeta_derivative,
)

away_from_pole = st.one_of(
    st.floats(min_value=-6, max_value=0.7),
    st.floats(min_value=1.3, max_value=7),
)


class TestEngineProperties:
    @settings(max_examples=15, deadline=None)
    @given(s=away_from_pole, a=st.floats(min_value=0.2, max_value=4))
    def test_hurwitz_shift_identity(self, ctx, s, a):
        # zeta(s, a) = a^-s + zeta(s, a+1) at user level.
        s, a = mpf(s), mpf(a)
        lhs = hurwitz_zeta(s, a, ctx)
        rhs = hurwitz_zeta(s, a + 1, ctx)
        with mpmath.mp.workprec(500):
            res = abs(lhs.value - mpmath.power(a, -s) - rhs.value)
            assert res <= lhs.abs_err_estimate + rhs.abs_err_estimate + mpf(2) ** -240

    @settings(max_examples=10, deadline=None)
    @given(
        re=st.floats(min_value=-4, max_value=5),
        im=st.floats(min_value=0.1, max_value=4),
    )
    def test_zeta_conjugate_symmetry(self, ctx, re, im):
        if abs(complex(re, im) - 1) < 0.3:
            re += 1.5
        s = mpc(re, im)
        a = riemann_zeta(s, ctx)
        b = riemann_zeta(mpc(re, -im), ctx)
        with mpmath.mp.workprec(500):
            res = abs(a.value - mpmath.conj(b.value))
            assert res <= a.abs_err_estimate + b.abs_err_estimate

    @settings(max_examples=10, deadline=None)
    @given(s=st.floats(min_value=-2.8, max_value=5.8))
    def test_beta_conjugate_real_axis(self, ctx, s):
        # Real arguments give real values with honest bars.
        ev = beta_closed(mpf(s), ctx)
        assert ev.value.imag == 0 if isinstance(ev.value, mpc) else True

    @settings(max_examples=12, deadline=None)
    @given(a=st.floats(min_value=0.1, max_value=6))
    def test_digamma_recurrence_random(self, ctx, a):
        a = mpf(a)
        up = digamma(a + 1, ctx)
        lo = digamma(a, ctx)
        with mpmath.mp.workprec(500):
            res = abs(up.value - lo.value - 1 / a)
            assert res <= up.abs_err_estimate + lo.abs_err_estimate + mpf(2) ** -240


class TestIndependentLibraryCrossChecks:
    @pytest.mark.parametrize(
        "s",
        [mpf(2), mpf("2.5"), mpf("0.5"), mpf("-0.5"), mpf("-3.5"), mpc(3, 2), mpc("0.5", 14)],
    )
    def test_riemann_zeta(self, ctx, s):
        ev = riemann_zeta(s, ctx)
        with mpmath.mp.workprec(600):
            ref = mpmath.zeta(mpc(s) if isinstance(s, mpc) else s)
            assert abs(ev.value - ref) <= ev.abs_err_estimate + abs(ref) * mpf(2) ** -500

    @pytest.mark.parametrize(
        "s,a", [(mpf("2.5"), mpf("0.25")), (mpf("-1.5"), mpf(3)), (mpc(2, 1), mpf("1.5"))]
    )
    def test_hurwitz_zeta(self, ctx, s, a):
        ev = hurwitz_zeta(s, a, ctx)
        with mpmath.mp.workprec(600):
            ref = mpmath.zeta(s, a)
            assert abs(ev.value - ref) <= ev.abs_err_estimate + abs(ref) * mpf(2) ** -500

    @pytest.mark.parametrize("a", [mpf("0.1"), mpf(1), mpf("3.75")])
    def test_digamma(self, ctx, a):
        ev = digamma(a, ctx)
        with mpmath.mp.workprec(600):
            ref = mpmath.digamma(a)
            assert abs(ev.value - ref) <= ev.abs_err_estimate + abs(ref) * mpf(2) ** -500

    @pytest.mark.parametrize("p", [0, 1, 5, 12])
    def test_stieltjes_constants(self, ctx, p):
        ev = stieltjes(p, 1, ctx)
        with mpmath.mp.workprec(600):
            ref = mpmath.stieltjes(p)
            assert abs(ev.value - ref) <= ev.abs_err_estimate + abs(ref) * mpf(2) ** -400

    @pytest.mark.parametrize("s", [mpf(-2), mpf("0.5"), mpf(3)])
    def test_zeta_derivative(self, ctx, s):
        ev = zeta_derivative(s, ctx)
        with mpmath.mp.workprec(600):
            ref = mpmath.zeta(s, derivative=1)
            assert abs(ev.value - ref) <= ev.abs_err_estimate + abs(ref) * mpf(2) ** -400
