import mpmath
import pytest

from bzeta import PrecisionCtx


@pytest.fixture(autouse=True)
def _ambient_precision():
    """Comparison arithmetic in tests must not round results to 53 bits."""
    with mpmath.mp.workprec(900):
        yield


@pytest.fixture(scope="session")
def ctx():
    return PrecisionCtx()


@pytest.fixture(scope="session")
def tight_ctx():
    """Summation tolerance pushed far below the finite-difference floors."""
    return PrecisionCtx(prec_bits=256, rel_tol=mpmath.mpf(2) ** -200)
