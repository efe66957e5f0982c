"""Independent checks: series oracle, quadrature, exact identities, reports."""

from .identities import (
    binomial_harmonic,
    binomial_harmonic2,
    binomial_harmonic3,
    binomial_hyperharmonic,
    log1m_moment,
    log_moment,
)
from .oracle import OracleWarning, exact_term, oracle_partial_sum, oracle_series
from .quadrature import CATALOG, integrate
from .reports import VerificationReport, verify
from .suites import (
    examples_suite,
    euler_suite,
    identities_suite,
    integrals_suite,
    run_suite,
)

__all__ = [
    "binomial_harmonic",
    "binomial_harmonic2",
    "binomial_harmonic3",
    "binomial_hyperharmonic",
    "log1m_moment",
    "log_moment",
    "OracleWarning",
    "exact_term",
    "oracle_partial_sum",
    "oracle_series",
    "CATALOG",
    "integrate",
    "VerificationReport",
    "verify",
    "examples_suite",
    "euler_suite",
    "identities_suite",
    "integrals_suite",
    "run_suite",
]
