"""Identity-suite machinery: catalog completeness, suites, report shape."""

import pytest
from mpmath import mpf

from bzeta import verify
from bzeta.verify import CheckResult, VerifyReport


def test_all_suite_passes(ctx):
    report = verify.run_suite("all", ctx)
    failures = [r for r in report.results if not r.passed]
    assert report.passed, failures


def test_catalog_covers_required_checks(ctx):
    report = verify.run_suite("all", ctx)
    ran = {r.check_id for r in report.results}
    assert set(verify.REQUIRED_CHECKS) == set(verify.CATALOG)
    assert ran == set(verify.REQUIRED_CHECKS)


def test_suites_partition_catalog():
    union = set()
    for name in ("exact", "zeta", "beta"):
        ids = set(verify.SUITES[name])
        assert not ids & union
        union |= ids
    assert union == set(verify.SUITES["all"])


def test_subsuite_runs_only_its_checks(ctx):
    report = verify.run_suite("exact", ctx)
    assert {r.check_id for r in report.results} == set(verify.SUITES["exact"])
    assert report.passed


def test_unknown_suite_rejected(ctx):
    with pytest.raises(ValueError):
        verify.run_suite("bogus", ctx)


def test_overall_flag_is_conjunction():
    report = VerifyReport(suite="x")
    report.results.append(CheckResult("a", "ok", mpf(0), mpf(1), True))
    assert report.passed
    report.results.append(CheckResult("b", "bad", mpf(2), mpf(1), False))
    assert not report.passed


def test_report_json_shape(ctx):
    report = verify.run_suite("exact", ctx)
    doc = report.to_json_dict()
    assert doc["suite"] == "exact"
    assert doc["passed"] is True
    assert all(
        set(c) == {"id", "detail", "residual", "tolerance", "passed"}
        for c in doc["checks"]
    )


def test_tol_floor_only_loosens(ctx):
    # A huge floor cannot turn a passing suite into a failing one.
    report = verify.run_suite("exact", ctx, tol_floor="1e-3")
    assert report.passed
