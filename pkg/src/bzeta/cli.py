"""Command-line front end: value queries, grid sampling, identity suite.

Exit codes: 0 success (and all checks passed for ``verify``), 1 identity
suite failure, 2 usage or domain error, 3 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath
from mpmath import mpc, mpf

from . import betafn, exact, hasse, verify
from .numkernel import (
    DomainError,
    PoleError,
    PrecisionCtx,
    SingularityError,
    _to_mpc,
    working,
)

_FORMATS = ("text", "json", "csv")
_SAMPLE_FNS = ("beta", "beta-prime", "zeta")


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--prec", type=int, default=256, help="mantissa bits (default 256)")
    sp.add_argument(
        "--tol", default="1e-30", help="relative truncation tolerance (default 1e-30)"
    )
    sp.add_argument(
        "--max-terms", type=int, default=400, help="outer series term cap (default 400)"
    )
    sp.add_argument(
        "--format", choices=_FORMATS, default="text", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bzeta",
        description="Bernoulli/Stirling combinatorics and zeta-family special "
        "functions at arbitrary precision",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bn", help="exact Bernoulli number")
    p.add_argument("n", type=int)
    _add_common(p)

    p = sub.add_parser("bpoly", help="exact Bernoulli polynomial coefficients")
    p.add_argument("n", type=int)
    _add_common(p)

    p = sub.add_parser("stirling", help="Stirling number of the first or second kind")
    p.add_argument("kind", type=int, choices=(1, 2))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    _add_common(p)

    p = sub.add_parser("zeta", help="Riemann zeta at s (s may be 're' or 're,im')")
    p.add_argument("s")
    _add_common(p)

    p = sub.add_parser("hzeta", help="Hurwitz zeta at (s, a)")
    p.add_argument("s")
    p.add_argument("a")
    _add_common(p)

    p = sub.add_parser("digamma", help="digamma at real a > 0")
    p.add_argument("a")
    _add_common(p)

    p = sub.add_parser("stieltjes", help="generalized Stieltjes constant gamma_p(u)")
    p.add_argument("p", type=int)
    p.add_argument("u")
    _add_common(p)

    p = sub.add_parser("beta", help="continuous Bernoulli function")
    p.add_argument("s")
    _add_common(p)

    p = sub.add_parser("beta-prime", help="derivative of the Bernoulli function")
    p.add_argument("s")
    _add_common(p)

    p = sub.add_parser("zeta-odd", help="zeta(2n+1) from the difference series")
    p.add_argument("n", type=int)
    p.add_argument(
        "--route",
        choices=("series", "functional"),
        default="series",
        help="log-kernel series or differentiated functional equation",
    )
    _add_common(p)

    p = sub.add_parser("sample", help="sample a function over a real grid (CSV rows)")
    p.add_argument("fn", choices=_SAMPLE_FNS)
    p.add_argument("start")
    p.add_argument("stop")
    p.add_argument("step")
    _add_common(p)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), default="all")
    _add_common(p)

    return ap


def _ctx_from(args) -> PrecisionCtx:
    return PrecisionCtx(
        prec_bits=args.prec,
        rel_tol=args.tol,
        max_outer_terms=args.max_terms,
    )


def _parse_scalar(text: str, ctx: PrecisionCtx):
    """Parse 're' or 're,im' into an mpf/mpc at working precision."""
    with working(ctx):
        try:
            if "," in text:
                re_s, im_s = text.split(",", 1)
                z = mpc(mpf(re_s.strip()), mpf(im_s.strip()))
                return z.real if z.imag == 0 else z
            return mpf(text.strip())
        except ValueError as exc:
            raise DomainError("cannot parse scalar %r" % text) from exc


def _fmt_real(x, digits: int) -> str:
    # x is already an mpf; nstr formats the stored mantissa without
    # re-rounding it to the ambient precision.  Trailing zeros are kept
    # so the printed significant-digit count is exactly `digits`.
    return mpmath.nstr(x, digits, strip_zeros=False)


def _scalar_str(value, digits: int) -> str:
    z = _to_mpc(value)
    if z.imag == 0:
        return _fmt_real(z.real, digits)
    return "%s,%s" % (_fmt_real(z.real, digits), _fmt_real(z.imag, digits))


def _emit_series(query: str, ev, ctx: PrecisionCtx, fmt: str, out) -> int:
    digits = ctx.out_digits
    with working(ctx):
        if fmt == "json":
            doc = {"query": query, "result": ev.to_json_dict(digits)}
            body = json.dumps(doc)
        elif fmt == "csv":
            z = _to_mpc(ev.value)
            body = "s,re,im,abs_err,converged\n"
            body += "%s,%s,%s,%s,%s" % (
                query.split()[1],
                _fmt_real(z.real, digits),
                _fmt_real(z.imag, digits),
                mpmath.nstr(ev.abs_err_estimate, 8),
                "true" if ev.converged else "false",
            )
        else:
            body = _scalar_str(ev.value, digits)
    print(body, file=out)
    return 0 if ev.converged else 3


def _emit_exact(query: str, result_str: str, fmt: str, out) -> int:
    if fmt == "json":
        print(json.dumps({"query": query, "result": result_str}), file=out)
    elif fmt == "csv":
        print("value", file=out)
        print('"%s"' % result_str.replace('"', '""'), file=out)
    else:
        print(result_str, file=out)
    return 0


def _beta_prime_dispatch(s, ctx: PrecisionCtx):
    """Odd integers >= 3 take the closed form, everything else the
    log-derivative assembly."""
    sv = _to_mpc(s)
    if sv.imag == 0:
        n = int(mpmath.floor(sv.real + mpf("0.5")))
        if n >= 3 and n % 2 == 1 and abs(sv.real - n) < mpf(2) ** (
            -(ctx.prec_bits // 4)
        ):
            return betafn.beta_prime_odd((n - 1) // 2, ctx)
    return betafn.beta_prime(s, ctx)


def _run_sample(args, ctx: PrecisionCtx, out) -> int:
    with working(ctx):
        start = mpf(args.start)
        stop = mpf(args.stop)
        step = mpf(args.step)
        if step <= 0 or stop < start:
            raise DomainError("need start <= stop and step > 0")
        count = int(mpmath.floor((stop - start) / step + mpf("1e-9"))) + 1
        if count > 10**6:
            raise DomainError("grid of %d points exceeds the 1e6 cap" % count)
    digits = ctx.out_digits
    print("s,re,im,abs_err,converged", file=out)
    for i in range(count):
        with working(ctx):
            s = start + i * step
            s_str = _fmt_real(s, digits)
        try:
            if args.fn == "beta":
                ev = betafn.beta_closed(s, ctx)
            elif args.fn == "beta-prime":
                ev = _beta_prime_dispatch(s, ctx)
            else:
                ev = hasse.riemann_zeta(s, ctx)
            with working(ctx):
                z = _to_mpc(ev.value)
                row = (
                    s_str,
                    _fmt_real(z.real, digits),
                    _fmt_real(z.imag, digits),
                    mpmath.nstr(ev.abs_err_estimate, 8),
                    "true" if ev.converged else "false",
                )
        except (DomainError, PoleError, SingularityError):
            row = (s_str, "nan", "nan", "nan", "false")
        print(",".join(row), file=out)
    return 0


def _run_verify(args, ctx: PrecisionCtx, out) -> int:
    report = verify.run_suite(args.suite, ctx, tol_floor=args.tol)
    if args.format == "json":
        print(json.dumps(report.to_json_dict()), file=out)
    elif args.format == "csv":
        print("id,detail,residual,tolerance,passed", file=out)
        for r in report.results:
            print(
                '%s,"%s",%s,%s,%s'
                % (
                    r.check_id,
                    r.detail.replace('"', '""'),
                    mpmath.nstr(r.residual, 8),
                    mpmath.nstr(r.tolerance, 8),
                    "true" if r.passed else "false",
                ),
                file=out,
            )
    else:
        print(report.to_text(), file=out)
    return 0 if report.passed else 1


def run(argv, out=None, err=None) -> int:
    """Parse argv, dispatch, and return the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    query = " ".join(str(a) for a in argv)
    try:
        ctx = _ctx_from(args)
        cmd = args.command
        if cmd == "bn":
            return _emit_exact(
                query, exact.rat_str(exact.bernoulli_recurrence(args.n)), args.format, out
            )
        if cmd == "bpoly":
            return _emit_exact(
                query, exact.poly_json(exact.bernoulli_poly(args.n)), args.format, out
            )
        if cmd == "stirling":
            fn = exact.stirling1_signed if args.kind == 1 else exact.stirling2
            return _emit_exact(query, str(fn(args.n, args.k)), args.format, out)
        if cmd == "zeta":
            ev = hasse.riemann_zeta(_parse_scalar(args.s, ctx), ctx)
        elif cmd == "hzeta":
            ev = hasse.hurwitz_zeta(
                _parse_scalar(args.s, ctx), _parse_scalar(args.a, ctx), ctx
            )
        elif cmd == "digamma":
            ev = hasse.digamma(_parse_scalar(args.a, ctx), ctx)
        elif cmd == "stieltjes":
            ev = hasse.stieltjes(args.p, _parse_scalar(args.u, ctx), ctx)
        elif cmd == "beta":
            ev = betafn.beta_closed(_parse_scalar(args.s, ctx), ctx)
        elif cmd == "beta-prime":
            ev = _beta_prime_dispatch(_parse_scalar(args.s, ctx), ctx)
        elif cmd == "zeta-odd":
            fn = (
                betafn.zeta_odd_hasse
                if args.route == "series"
                else betafn.zeta_odd_functional
            )
            ev = fn(args.n, ctx)
        elif cmd == "sample":
            return _run_sample(args, ctx, out)
        elif cmd == "verify":
            return _run_verify(args, ctx, out)
        else:  # pragma: no cover - argparse enforces the choices
            ap.print_usage(err)
            return 2
        return _emit_series(query, ev, ctx, args.format, out)
    except (DomainError, PoleError, SingularityError, ValueError) as exc:
        print("error: %s" % exc, file=err)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
