"""Hyperharmonic number sums with reciprocal binomial coefficients.

Exact rational building blocks, closed-form evaluation through Euler sums
and zeta values, and an independent verification layer (series oracle,
quadrature, exact identities).
"""

from .approx import Approx
from .closed_forms import (
    SumSpec,
    closed_linear,
    closed_quadratic,
    closed_value,
    quadratic_base,
    recip_binomial_weights,
    s_boundary,
    s_closed,
    shift_sum,
    t_boundary,
    t_closed,
)
from .config import EngineConfig, configure, get_config, set_config
from .constants import catalan, log2, pi, polylog, ti2, zeta, zeta_alt
from .errors import DivergenceError, DomainError, HHSumError
from .euler_sums import euler_reduction_check, linear_euler, quadratic_euler
from .exact import bernoulli_plus, binomial, faulhaber_coeffs, faulhaber_sum, pochhammer
from .sequences import (
    coeff_table,
    harmonic,
    harmonic_alt,
    hyperharmonic,
    hyperharmonic_via_coeffs,
)

__version__ = "0.1.0"

__all__ = [
    "Approx",
    "SumSpec",
    "closed_linear",
    "closed_quadratic",
    "closed_value",
    "quadratic_base",
    "recip_binomial_weights",
    "s_boundary",
    "s_closed",
    "shift_sum",
    "t_boundary",
    "t_closed",
    "EngineConfig",
    "configure",
    "get_config",
    "set_config",
    "catalan",
    "log2",
    "pi",
    "polylog",
    "ti2",
    "zeta",
    "zeta_alt",
    "DivergenceError",
    "DomainError",
    "HHSumError",
    "euler_reduction_check",
    "linear_euler",
    "quadratic_euler",
    "bernoulli_plus",
    "binomial",
    "faulhaber_coeffs",
    "faulhaber_sum",
    "pochhammer",
    "coeff_table",
    "harmonic",
    "harmonic_alt",
    "hyperharmonic",
    "hyperharmonic_via_coeffs",
]
