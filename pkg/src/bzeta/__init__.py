"""bzeta: exact Bernoulli/Stirling combinatorics and arbitrary-precision
zeta-family special functions, every quantity computable by at least two
independent routes so the connecting identities are executable checks.
"""

from .exact import (
    BernoulliPoly,
    BigRat,
    bernoulli_at_one,
    bernoulli_doublesum,
    bernoulli_poly,
    bernoulli_poly_doublesum,
    bernoulli_poly_eval,
    bernoulli_recurrence,
    bernoulli_stirling,
    binomial,
    check_difference_identity,
    check_stirling1_bernoulli_sum,
    stirling1_signed,
    stirling2,
    stirling2_explicit,
)
from .hasse import (
    SeriesEval,
    digamma,
    hasse_sum,
    hurwitz_zeta,
    riemann_zeta,
    stieltjes,
    zeta_derivative,
    zeta_prime_neg_even,
)
from .betafn import (
    b_s_of_one,
    beta_closed,
    beta_negative_even,
    beta_negative_odd,
    beta_prime,
    beta_prime_odd,
    beta_reflection,
    beta_series,
    functional_equation_check,
    limit_cos_weighted_pole,
    zeta_even_closed,
    zeta_odd_functional,
    zeta_odd_hasse,
)
from .numkernel import (
    ComplexAP,
    DEFAULT_CTX,
    DomainError,
    PoleError,
    PrecisionCtx,
    RealAP,
    SingularityError,
    cos_pi,
    gamma_ap,
    log_ap,
    pow_complex,
    sin_pi,
    tan_pi,
)

__version__ = "0.1.0"
