"""Executable identity suite: every connecting identity as a residual check.

Each catalog entry evaluates one identity through two independent routes
and reports the residual alongside the tolerance it was held to (the
combined error estimates of the routes, floored by the caller's
tolerance).  ``run_suite`` aggregates the results into a report whose
overall flag is the conjunction of every check.

The catalog is the completeness manifest: tests assert that every
required identity id is present and executed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mpc, mpf

from . import betafn, exact, hasse
from .numkernel import (
    DEFAULT_CTX,
    PrecisionCtx,
    _to_mpf,
    cos_pi,
    gamma_ap,
    working,
)

__all__ = [
    "CheckResult",
    "VerifyReport",
    "CATALOG",
    "REQUIRED_CHECKS",
    "SUITES",
    "run_suite",
]


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    detail: str
    residual: mpf
    tolerance: mpf
    passed: bool


@dataclass
class VerifyReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            lines.append(
                "%-4s %-24s %-28s residual=%-12s tol=%s"
                % (
                    "ok" if r.passed else "FAIL",
                    r.check_id,
                    r.detail,
                    mpmath.nstr(r.residual, 3),
                    mpmath.nstr(r.tolerance, 3),
                )
            )
        lines.append(
            "suite %s: %d checks, %s"
            % (self.suite, len(self.results), "all passed" if self.passed else "FAILURES")
        )
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {
                    "id": r.check_id,
                    "detail": r.detail,
                    "residual": mpmath.nstr(r.residual, 8),
                    "tolerance": mpmath.nstr(r.tolerance, 8),
                    "passed": r.passed,
                }
                for r in self.results
            ],
        }


def _exact_check(cid, detail, failures: int) -> CheckResult:
    return CheckResult(cid, detail, mpf(failures), mpf(0), failures == 0)


def _residual_check(cid, detail, residual, tol, floor) -> CheckResult:
    tol = max(_to_mpf(tol), _to_mpf(floor))
    residual = abs(residual)
    return CheckResult(cid, detail, residual, tol, residual <= tol)


# ---------------------------------------------------------------------------
# exact-arithmetic checks


def _chk_poly_coefficients(ctx, floor):
    bad = 0
    for n in range(13):
        p = exact.bernoulli_poly(n)
        for k in range(n + 1):
            if p.coeffs[n - k] != exact.binomial(n, k) * exact.bernoulli_recurrence(k):
                bad += 1
        if p.coeffs[n] != 1 or p.coeffs[0] != exact.bernoulli_recurrence(n):
            bad += 1
    return [_exact_check("poly-coefficients", "n <= 12", bad)]


_X_GRID = (Fraction(-2), Fraction(-1, 2), Fraction(0), Fraction(1, 3), Fraction(1), Fraction(7))


def _chk_difference_identity(ctx, floor):
    bad = sum(
        not exact.check_difference_identity(n, x)
        for n in range(1, 21)
        for x in _X_GRID
    )
    return [_exact_check("difference-identity", "n <= 20, 6 points", bad)]


def _chk_endpoint_equality(ctx, floor):
    bad = sum(
        exact.bernoulli_at_one(n) != exact.bernoulli_recurrence(n)
        for n in range(2, 21)
    )
    if exact.bernoulli_at_one(1) != Fraction(1, 2):
        bad += 1
    if exact.bernoulli_recurrence(1) != Fraction(-1, 2):
        bad += 1
    return [_exact_check("endpoint-equality", "n <= 20", bad)]


def _chk_recurrence_closure(ctx, floor):
    bad = 0
    for n in range(2, 41):
        acc = sum(
            exact.binomial(n, k) * exact.bernoulli_recurrence(k) for k in range(n)
        )
        bad += acc != 0
    return [_exact_check("recurrence-closure", "n = 2..40", bad)]


def _chk_poly_double_sum(ctx, floor):
    bad = 0
    for n in range(13):
        p = exact.bernoulli_poly(n)
        for x in _X_GRID:
            if exact.bernoulli_poly_doublesum(n, x) != exact.bernoulli_poly_eval(p, x):
                bad += 1
    return [_exact_check("poly-double-sum", "n <= 12, 6 points", bad)]


def _chk_vanishing_differences(ctx, floor):
    bad = 0
    for n in range(9):
        for k in range(n + 1, 13):
            for x in (Fraction(0), Fraction(1, 2), Fraction(3)):
                acc = sum(
                    (-1) ** j * exact.binomial(k, j) * (x + j) ** n
                    for j in range(k + 1)
                )
                bad += acc != 0
    return [_exact_check("vanishing-differences", "n <= 8, k <= 12", bad)]


def _chk_number_double_sum(ctx, floor):
    bad = 0
    for n in range(41):
        r = exact.bernoulli_recurrence(n)
        if exact.bernoulli_doublesum(n) != r or exact.bernoulli_stirling(n) != r:
            bad += 1
    return [_exact_check("number-double-sum", "triple agreement n <= 40", bad)]


def _chk_stirling2_explicit(ctx, floor):
    bad = 0
    for n in range(26):
        for k in range(n + 1):
            if exact.stirling2_explicit(n, k) != exact.stirling2(n, k):
                bad += 1
    return [_exact_check("stirling2-explicit", "n <= 25", bad)]


def _chk_stirling_bernoulli(ctx, floor):
    bad = sum(
        exact.bernoulli_stirling(n) != exact.bernoulli_recurrence(n)
        for n in range(41)
    )
    return [_exact_check("stirling-bernoulli", "n <= 40", bad)]


def _chk_stirling1_weighted(ctx, floor):
    bad = sum(not exact.check_stirling1_bernoulli_sum(k) for k in range(1, 21))
    return [_exact_check("stirling1-weighted-sum", "k <= 20", bad)]


def _chk_stirling_orthogonality(ctx, floor):
    bad = 0
    for n in range(16):
        for k in range(16):
            acc = sum(
                exact.stirling1_signed(n, j) * exact.stirling2(j, k)
                for j in range(16)
            )
            bad += acc != (1 if n == k else 0)
    return [_exact_check("stirling-orthogonality", "n, k <= 15", bad)]


# ---------------------------------------------------------------------------
# zeta-family checks


def _dirichlet_oracle(s, a, terms):
    """Tail-bounded partial sum of sum (k+a)^-s; returns (value, bound)."""
    s = mpf(s)
    a = mpf(a)
    part = sum(mpmath.power(k + a, -s) for k in range(terms))
    hi = mpmath.power(terms - 1 + a, 1 - s) / (s - 1)
    lo = mpmath.power(terms + a, 1 - s) / (s - 1)
    return part + (hi + lo) / 2, (hi - lo) / 2 + part * mpf(2) ** (10 - mpmath.mp.prec)


def _chk_hurwitz_series(ctx, floor):
    with working(ctx):
        v = hasse.hurwitz_zeta(mpf("2.5"), mpf("1.5"), ctx)
        oracle, bound = _dirichlet_oracle("2.5", "1.5", 20000)
        res = abs(v.value - oracle)
        tol = v.abs_err_estimate + bound
    return [_residual_check("hurwitz-series", "s=2.5, a=1.5 vs direct sum", res, tol, floor)]


def _chk_riemann_reduction(ctx, floor):
    out = []
    with working(ctx):
        z1 = hasse.riemann_zeta(mpf("2.5"), ctx)
        z2 = hasse.hurwitz_zeta(mpf("2.5"), 1, ctx)
        out.append(
            _residual_check(
                "riemann-reduction",
                "zeta(2.5) = zeta(2.5, 1)",
                abs(z1.value - z2.value),
                z1.abs_err_estimate + z2.abs_err_estimate,
                floor,
            )
        )
        oracle, bound = _dirichlet_oracle(2, 1, 20000)
        z = hasse.riemann_zeta(2, ctx)
        out.append(
            _residual_check(
                "riemann-reduction",
                "zeta(2) vs direct sum",
                abs(z.value - oracle),
                z.abs_err_estimate + bound,
                floor,
            )
        )
    return out


_NEG_SHIFTS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3))


def _chk_hurwitz_neg_int(ctx, floor):
    out = []
    with working(ctx):
        for n in range(9):
            for a in _NEG_SHIFTS:
                v = hasse.hurwitz_zeta(-n, a, ctx)
                rhs = -exact.bernoulli_poly_eval(exact.bernoulli_poly(n + 1), a) / (
                    n + 1
                )
                res = abs(v.value - _to_mpf(rhs))
                out.append(
                    _residual_check(
                        "hurwitz-neg-int",
                        "n=%d, a=%s" % (n, a),
                        res,
                        v.abs_err_estimate,
                        floor,
                    )
                )
    return out


def _chk_zeta_neg_int(ctx, floor):
    out = []
    with working(ctx):
        for n in range(9):
            v = hasse.riemann_zeta(-n, ctx)
            rhs = -Fraction(exact.bernoulli_at_one(n + 1), n + 1)
            out.append(
                _residual_check(
                    "zeta-neg-int",
                    "n=%d" % n,
                    abs(v.value - _to_mpf(rhs)),
                    v.abs_err_estimate,
                    floor,
                )
            )
    return out


def _chk_trivial_zeros(ctx, floor):
    out = []
    with working(ctx):
        for n in range(1, 6):
            v = hasse.riemann_zeta(-2 * n, ctx)
            out.append(
                _residual_check(
                    "trivial-zeros",
                    "zeta(-%d)" % (2 * n),
                    abs(v.value),
                    v.abs_err_estimate,
                    floor,
                )
            )
    return out


def _tight_ctx(ctx: PrecisionCtx) -> PrecisionCtx:
    """Same output precision, but summation pushed well past the
    finite-difference noise floor used by the derivative checks."""
    bits = min(200, ctx.prec_bits - 8)
    return PrecisionCtx(
        prec_bits=ctx.prec_bits,
        rel_tol=mpf(2) ** -bits,
        max_outer_terms=ctx.max_outer_terms,
        guard_bits=ctx.guard_bits,
        stagnation_window=ctx.stagnation_window,
    )


def _chk_zeta_derivative_series(ctx, floor):
    out = []
    tight = _tight_ctx(ctx)
    with working(tight):
        h = mpf(2) ** -(ctx.prec_bits // 3)
        reltol = mpf(2) ** -(ctx.prec_bits // 4)
        for s in (mpf(-4), mpf("2.5")):
            zd = hasse.zeta_derivative(s, tight)
            fd = (
                hasse.riemann_zeta(s + h, tight).value
                - hasse.riemann_zeta(s - h, tight).value
            ) / (2 * h)
            res = abs(zd.value - fd) / abs(fd)
            out.append(
                _residual_check(
                    "zeta-derivative-series",
                    "s=%s vs central difference" % mpmath.nstr(s, 4),
                    res,
                    reltol,
                    floor,
                )
            )
    return out


def _chk_zeta_prime_neg_even(ctx, floor):
    out = []
    with working(ctx):
        for n in (1, 2, 3):
            a = hasse.zeta_prime_neg_even(n, ctx)
            b = hasse.zeta_derivative(-2 * n, ctx)
            out.append(
                _residual_check(
                    "zeta-prime-neg-even",
                    "n=%d, two derivative routes" % n,
                    abs(a.value - b.value),
                    a.abs_err_estimate + b.abs_err_estimate,
                    floor,
                )
            )
    return out


def _chk_digamma_series(ctx, floor):
    out = []
    with working(ctx):
        for a in (Fraction(1, 3), Fraction(1), Fraction(5, 2)):
            lhs = hasse.digamma(Fraction(a) + 1, ctx)
            rhs = hasse.digamma(a, ctx)
            res = abs(lhs.value - rhs.value - 1 / _to_mpf(a))
            out.append(
                _residual_check(
                    "digamma-series",
                    "recurrence at a=%s" % a,
                    res,
                    lhs.abs_err_estimate + rhs.abs_err_estimate,
                    floor,
                )
            )
        # duplication: psi(1/2) = psi(1) - 2 log 2
        ph = hasse.digamma(Fraction(1, 2), ctx)
        p1 = hasse.digamma(1, ctx)
        res = abs(ph.value - p1.value + 2 * mpmath.log(mpf(2)))
        out.append(
            _residual_check(
                "digamma-series",
                "duplication at a=1/2",
                res,
                ph.abs_err_estimate + p1.abs_err_estimate + mpf(10) ** -70,
                floor,
            )
        )
    return out


def _chk_stieltjes_series(ctx, floor):
    out = []
    with working(ctx):
        for u in (Fraction(1, 2), Fraction(1), Fraction(3)):
            g0 = hasse.stieltjes(0, u, ctx)
            ps = hasse.digamma(u, ctx)
            out.append(
                _residual_check(
                    "stieltjes-series",
                    "gamma_0(%s) = -psi(%s)" % (u, u),
                    abs(g0.value + ps.value),
                    g0.abs_err_estimate + ps.abs_err_estimate,
                    floor,
                )
            )
        # finite part of the zeta pole: zeta(1+eps, a) - 1/eps ~ -psi(a)
        eps = mpf("1e-6")
        for a in (1, 2):
            z = hasse.hurwitz_zeta(1 + eps, a, ctx)
            ps = hasse.digamma(a, ctx)
            res = abs(z.value - 1 / eps + ps.value)
            out.append(
                _residual_check(
                    "stieltjes-series",
                    "pole finite part at a=%d" % a,
                    res,
                    mpf("1e-4"),
                    floor,
                )
            )
    return out


# ---------------------------------------------------------------------------
# beta checks


def _chk_closed_form_values(ctx, floor):
    out = []
    with working(ctx):
        cases = [
            ("beta(2) = 1/6", betafn.beta_closed(2, ctx).value - Fraction(1, 6)),
            ("beta(1) = -1/2", betafn.beta_closed(1, ctx).value + Fraction(1, 2)),
            ("beta(1/2) = 0", betafn.beta_closed(mpf("0.5"), ctx).value),
        ]
        for detail, res in cases:
            out.append(
                _residual_check(
                    "closed-form-values", detail, abs(res), mpf(10) ** -25, floor
                )
            )
    return out


def _chk_integer_interpolation(ctx, floor):
    out = []
    with working(ctx):
        for n in range(0, 17):
            v = betafn.beta_closed(n, ctx)
            if n == 1:
                target = -_to_mpf(Fraction(1, 2))
            else:
                target = _to_mpf(exact.bernoulli_recurrence(n)) if n % 2 == 0 else mpf(0)
            s = betafn.beta_series(n, ctx)
            tol = v.abs_err_estimate + s.abs_err_estimate + mpf(10) ** -40
            res = max(abs(v.value - target), abs(s.value - target))
            out.append(
                _residual_check(
                    "integer-interpolation", "n=%d" % n, res, tol, floor
                )
            )
    return out


def _chk_odd_vanishing(ctx, floor):
    out = []
    with working(ctx):
        for n in (3, 5, 7):
            v = betafn.beta_closed(n, ctx)
            out.append(
                _residual_check(
                    "odd-vanishing",
                    "beta(%d) = 0" % n,
                    abs(v.value),
                    v.abs_err_estimate + mpf(10) ** -40,
                    floor,
                )
            )
    return out


def _chk_series_closed_bridge(ctx, floor):
    out = []
    with working(ctx):
        for s in (mpf(2), mpf("0.3"), mpf("2.5"), mpf("5.2")):
            a = betafn.beta_closed(s, ctx)
            b = betafn.beta_series(s, ctx)
            out.append(
                _residual_check(
                    "series-closed-bridge",
                    "s=%s" % mpmath.nstr(s, 3),
                    abs(a.value - b.value),
                    a.abs_err_estimate + b.abs_err_estimate,
                    floor,
                )
            )
    return out


def _chk_power_sum_bridge(ctx, floor):
    out = []
    with working(ctx):
        for s in (mpf(2), mpf("2.5")):
            z = hasse.riemann_zeta(s, ctx)
            lhs = (
                2
                * mpmath.power(2 * mpmath.mp.pi, -s)
                * gamma_ap(s + 1, ctx)
                * z.value
                * cos_pi(s / 2, ctx)
            )
            b = betafn.b_s_of_one(s, ctx)
            out.append(
                _residual_check(
                    "power-sum-bridge",
                    "s=%s" % mpmath.nstr(s, 3),
                    abs(lhs + b.value),
                    abs(lhs) * mpf(2) ** (8 - ctx.prec_bits)
                    + z.abs_err_estimate
                    + b.abs_err_estimate,
                    floor,
                )
            )
    return out


def _chk_functional_equation(ctx, floor):
    out = []
    with working(ctx):
        for s in (mpf(2), mpc(3, 1), mpf("0.5")):
            r = betafn.functional_equation_check(s, ctx)
            out.append(
                _residual_check(
                    "functional-equation",
                    "s=%s" % mpmath.nstr(s, 3),
                    abs(r.value),
                    r.abs_err_estimate,
                    floor,
                )
            )
    return out


def _chk_pole_limit(ctx, floor):
    with working(ctx):
        v = betafn.limit_cos_weighted_pole(ctx)
        res = abs(v.value + mpmath.mp.pi / 2)
    return [_residual_check("pole-limit", "limit -> -pi/2", res, mpf("1e-5"), floor)]


def _reflection_grid():
    pts = []
    for j in range(25):
        s = mpf(-3) + mpf(7) * j / 24
        if abs(s - 1) < mpf("0.1"):
            s += mpf("0.15")
        pts.append(s)
    pts[18] = mpc(pts[18], mpf("0.5"))
    return pts


def _chk_reflection(ctx, floor):
    out = []
    with working(ctx):
        for s in _reflection_grid():
            lhs = betafn.beta_closed(1 - s, ctx)
            rhs = betafn.beta_reflection(s, ctx)
            out.append(
                _residual_check(
                    "reflection",
                    "s=%s" % mpmath.nstr(s, 4),
                    abs(lhs.value - rhs.value),
                    lhs.abs_err_estimate + rhs.abs_err_estimate,
                    floor,
                )
            )
    return out


def _chk_negative_even_index(ctx, floor):
    with working(ctx):
        v = betafn.beta_negative_even(1, ctx)
        z3 = betafn.zeta_odd_functional(1, ctx)
        res = abs(v.value - 2 * z3.value)
        tol = v.abs_err_estimate + 2 * z3.abs_err_estimate
    return [
        _residual_check(
            "negative-even-index", "beta(-2) = 2 zeta(3)", res, tol, floor
        )
    ]


def _chk_negative_odd_index(ctx, floor):
    out = []
    with working(ctx):
        for n in (1, 2):
            v = betafn.beta_negative_odd(n, ctx)
            ze = betafn.zeta_even_closed(n, ctx)
            res = abs(v.value - (1 - 2 * n) * ze.value)
            tol = v.abs_err_estimate + (2 * n - 1) * ze.abs_err_estimate
            out.append(
                _residual_check(
                    "negative-odd-index",
                    "beta(%d) = %d zeta(%d)" % (1 - 2 * n, 1 - 2 * n, 2 * n),
                    res,
                    tol,
                    floor,
                )
            )
    return out


def _chk_interpolant_integers(ctx, floor):
    out = []
    with working(ctx):
        for n in (0, 1, 4, 6):
            v = betafn.b_s_of_one(n, ctx)
            rhs = _to_mpf(exact.bernoulli_at_one(n))
            out.append(
                _residual_check(
                    "interpolant-integers",
                    "s=%d" % n,
                    abs(v.value - rhs),
                    v.abs_err_estimate + mpf(10) ** -40,
                    floor,
                )
            )
    return out


def _chk_sign_alternation(ctx, floor):
    bad = 0
    with working(ctx):
        for n in range(1, 9):
            v = betafn.beta_closed(2 * n, ctx)
            want = 1 if n % 2 == 1 else -1
            bad += (1 if v.value > 0 else -1) != want
    return [_exact_check("sign-alternation", "sign(beta(2n)), n <= 8", bad)]


def _chk_odd_zeta_series(ctx, floor):
    out = []
    with working(ctx):
        for n in (1, 2):
            a = betafn.zeta_odd_hasse(n, ctx)
            b = hasse.riemann_zeta(2 * n + 1, ctx)
            out.append(
                _residual_check(
                    "odd-zeta-series",
                    "zeta(%d), log kernel vs power kernel" % (2 * n + 1),
                    abs(a.value - b.value),
                    a.abs_err_estimate + b.abs_err_estimate,
                    floor,
                )
            )
    return out


def _chk_odd_zeta_functional(ctx, floor):
    out = []
    with working(ctx):
        for n in (1, 2, 3):
            a = betafn.zeta_odd_functional(n, ctx)
            b = hasse.riemann_zeta(2 * n + 1, ctx)
            out.append(
                _residual_check(
                    "odd-zeta-functional",
                    "zeta(%d) via derivative route" % (2 * n + 1),
                    abs(a.value - b.value),
                    a.abs_err_estimate + b.abs_err_estimate,
                    floor,
                )
            )
    return out


def _chk_derivative_at_odd(ctx, floor):
    out = []
    with working(ctx):
        h = mpf("1e-10")
        for n in (1, 2):
            s = mpf(2 * n + 1)
            v = betafn.beta_prime_odd(n, ctx)
            fd = (
                betafn.beta_closed(s + h, ctx).value
                - betafn.beta_closed(s - h, ctx).value
            ) / (2 * h)
            res = abs(v.value - fd) / abs(fd)
            out.append(
                _residual_check(
                    "derivative-at-odd",
                    "s=%d vs central difference" % (2 * n + 1),
                    res,
                    mpf("1e-8"),
                    floor,
                )
            )
    return out


def _chk_derivative_log_formula(ctx, floor):
    out = []
    tight = _tight_ctx(ctx)
    with working(tight):
        h = mpf(2) ** -(ctx.prec_bits // 3)
        reltol = mpf(2) ** -(ctx.prec_bits // 4)
        for s in (mpf("0.5"), mpf(2), mpf("4.3")):
            v = betafn.beta_prime(s, tight)
            fd = (
                betafn.beta_closed(s + h, tight).value
                - betafn.beta_closed(s - h, tight).value
            ) / (2 * h)
            res = abs(v.value - fd) / abs(fd)
            out.append(
                _residual_check(
                    "derivative-log-formula",
                    "s=%s vs central difference" % mpmath.nstr(s, 3),
                    res,
                    reltol,
                    floor,
                )
            )
    return out


def _chk_even_zeta_inverse(ctx, floor):
    # Invert the closed form at s = 2: zeta(2) = (2 pi)^2 beta(2) / (2 * 2! * 1)
    with working(ctx):
        b = betafn.beta_series(2, ctx)
        c = cos_pi(mpf(1), ctx) * cos_pi(mpf(-1), ctx)
        rhs = mpmath.power(2 * mpmath.mp.pi, 2) * b.value / (2 * 2 * c)
        z = hasse.riemann_zeta(2, ctx)
        res = abs(z.value - rhs)
        tol = z.abs_err_estimate + abs(rhs) * mpf(2) ** (8 - ctx.prec_bits) + b.abs_err_estimate * 40
    return [
        _residual_check(
            "even-zeta-inverse", "zeta(2) from beta(2)", res, tol, floor
        )
    ]


# ---------------------------------------------------------------------------
# catalog and runner

CATALOG = {
    "poly-coefficients": _chk_poly_coefficients,
    "difference-identity": _chk_difference_identity,
    "endpoint-equality": _chk_endpoint_equality,
    "recurrence-closure": _chk_recurrence_closure,
    "poly-double-sum": _chk_poly_double_sum,
    "vanishing-differences": _chk_vanishing_differences,
    "number-double-sum": _chk_number_double_sum,
    "stirling2-explicit": _chk_stirling2_explicit,
    "stirling-bernoulli": _chk_stirling_bernoulli,
    "stirling1-weighted-sum": _chk_stirling1_weighted,
    "stirling-orthogonality": _chk_stirling_orthogonality,
    "hurwitz-series": _chk_hurwitz_series,
    "riemann-reduction": _chk_riemann_reduction,
    "hurwitz-neg-int": _chk_hurwitz_neg_int,
    "zeta-neg-int": _chk_zeta_neg_int,
    "trivial-zeros": _chk_trivial_zeros,
    "zeta-derivative-series": _chk_zeta_derivative_series,
    "zeta-prime-neg-even": _chk_zeta_prime_neg_even,
    "digamma-series": _chk_digamma_series,
    "stieltjes-series": _chk_stieltjes_series,
    "closed-form-values": _chk_closed_form_values,
    "integer-interpolation": _chk_integer_interpolation,
    "odd-vanishing": _chk_odd_vanishing,
    "series-closed-bridge": _chk_series_closed_bridge,
    "power-sum-bridge": _chk_power_sum_bridge,
    "functional-equation": _chk_functional_equation,
    "pole-limit": _chk_pole_limit,
    "reflection": _chk_reflection,
    "negative-even-index": _chk_negative_even_index,
    "negative-odd-index": _chk_negative_odd_index,
    "interpolant-integers": _chk_interpolant_integers,
    "sign-alternation": _chk_sign_alternation,
    "odd-zeta-series": _chk_odd_zeta_series,
    "odd-zeta-functional": _chk_odd_zeta_functional,
    "derivative-at-odd": _chk_derivative_at_odd,
    "derivative-log-formula": _chk_derivative_log_formula,
    "even-zeta-inverse": _chk_even_zeta_inverse,
}

REQUIRED_CHECKS = tuple(CATALOG)

_EXACT_IDS = (
    "poly-coefficients",
    "difference-identity",
    "endpoint-equality",
    "recurrence-closure",
    "poly-double-sum",
    "vanishing-differences",
    "number-double-sum",
    "stirling2-explicit",
    "stirling-bernoulli",
    "stirling1-weighted-sum",
    "stirling-orthogonality",
)
_ZETA_IDS = (
    "hurwitz-series",
    "riemann-reduction",
    "hurwitz-neg-int",
    "zeta-neg-int",
    "trivial-zeros",
    "zeta-derivative-series",
    "zeta-prime-neg-even",
    "digamma-series",
    "stieltjes-series",
)
_BETA_IDS = tuple(
    cid for cid in CATALOG if cid not in _EXACT_IDS and cid not in _ZETA_IDS
)

SUITES = {
    "exact": _EXACT_IDS,
    "zeta": _ZETA_IDS,
    "beta": _BETA_IDS,
    "all": REQUIRED_CHECKS,
}


def run_suite(
    suite: str = "all",
    ctx: PrecisionCtx = DEFAULT_CTX,
    tol_floor=None,
) -> VerifyReport:
    """Run a named suite of identity checks and collect the report.

    Each check's tolerance is the maximum of its combined error
    estimates and ``tol_floor`` (so a caller-specified floor can only
    loosen, never silently tighten, a check).
    """
    if suite not in SUITES:
        raise ValueError("unknown suite %r; choose from %s" % (suite, sorted(SUITES)))
    floor = _to_mpf(tol_floor) if tol_floor is not None else mpf(0)
    report = VerifyReport(suite=suite)
    for cid in SUITES[suite]:
        report.results.extend(CATALOG[cid](ctx, floor))
    return report
