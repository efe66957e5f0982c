"""Tanh-sinh quadrature of the log-singular integrands in the catalog.

Integrands with a removable 0/0 point return the limit there, so the
quadrature never sees a NaN even if a node lands on the endpoint.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Dict, Optional

import mpmath
from mpmath import mpf

from .. import config as _config
from ..approx import Approx, to_mpf
from ..errors import DomainError

__all__ = ["Integrand", "CATALOG", "integrate", "quad_approx", "QuadratureWarning"]


class QuadratureWarning(UserWarning):
    """Quadrature error estimate above the requested tolerance."""


@dataclass(frozen=True)
class Integrand:
    id: str
    formula: str
    fn: Callable[[mpf], mpf]
    a: Callable[[], mpf]
    b: Callable[[], mpf]


def _zero() -> mpf:
    return mpf(0)


def _one() -> mpf:
    return mpf(1)


def _half_pi() -> mpf:
    return mpmath.pi / 2


def _phi2_over_sin(t):
    return t if t == 0 else t**2 / mpmath.sin(t)


def _phi_over_sin(t):
    return mpf(1) if t == 0 else t / mpmath.sin(t)


def _log2_over_x2m1(x):
    if x == 0:
        return mpmath.inf
    if x == 1:
        return mpf(0)
    return mpmath.log(x) ** 2 / (x**2 - 1)


def _log(y):
    return mpmath.log(y) if y > 0 else -mpmath.inf


def _entries():
    pi = lambda: mpmath.pi  # noqa: E731
    rows = [
        ("phi2_over_sin", "phi^2/sin(phi)", _phi2_over_sin, _zero, _half_pi),
        ("phi_over_sin", "phi/sin(phi)", _phi_over_sin, _zero, _half_pi),
        ("log2_over_x2m1", "log^2(x)/(x^2-1)", _log2_over_x2m1, _zero, _one),
        ("log_over_1py2", "log(y)/(1+y^2)", lambda y: _log(y) / (1 + y**2), _zero, _one),
        ("log2_over_1py2", "log^2(y)/(1+y^2)", lambda y: _log(y) ** 2 / (1 + y**2), _zero, _one),
        (
            "phi_2cos_m1_over_5m4cos",
            "phi(2cos(phi)-1)/(5-4cos(phi))",
            lambda t: t * (2 * mpmath.cos(t) - 1) / (5 - 4 * mpmath.cos(t)),
            _zero,
            _half_pi,
        ),
        (
            "two_phi_sin_over_5m4cos",
            "2 phi sin(phi)/(5-4cos(phi))",
            lambda t: 2 * t * mpmath.sin(t) / (5 - 4 * mpmath.cos(t)),
            _zero,
            _half_pi,
        ),
        (
            "phi_2cos_m1_over_5m4sin",
            "phi(2cos(phi)-1)/(5-4sin(phi))",
            lambda t: t * (2 * mpmath.cos(t) - 1) / (5 - 4 * mpmath.sin(t)),
            _zero,
            _half_pi,
        ),
        (
            "two_phi_sin_over_5m4sin",
            "2 phi sin(phi)/(5-4sin(phi))",
            lambda t: 2 * t * mpmath.sin(t) / (5 - 4 * mpmath.sin(t)),
            _zero,
            _half_pi,
        ),
        ("log_over_2mx", "log(x)/(2-x)", lambda x: _log(x) / (2 - x), _zero, _one),
        ("pi_over_4py2", "pi/(4+y^2)", lambda y: mpmath.pi / (4 + y**2), _zero, _one),
        (
            "ylog_over_4py2",
            "y log(y)/(4+y^2)",
            lambda y: mpf(0) if y == 0 else y * mpmath.log(y) / (4 + y**2),
            _zero,
            _one,
        ),
        (
            "pi_plus_ylog_over_4py2",
            "(pi + y log(y))/(4+y^2)",
            lambda y: (mpmath.pi + (0 if y == 0 else y * mpmath.log(y))) / (4 + y**2),
            _zero,
            _one,
        ),
        ("half_pi_y_over_4py2", "(pi/2) y/(4+y^2)", lambda y: pi() / 2 * y / (4 + y**2), _zero, _one),
        ("two_log_over_4py2", "2 log(y)/(4+y^2)", lambda y: 2 * _log(y) / (4 + y**2), _zero, _one),
    ]
    return {r[0]: Integrand(*r) for r in rows}


CATALOG: Dict[str, Integrand] = _entries()


def quad_approx(f: Callable[[mpf], mpf], a, b) -> Approx:
    """Tanh-sinh integral of ``f`` over [a, b] with mpmath's error estimate."""
    a, b = to_mpf(a), to_mpf(b)
    if a == b:
        return Approx(0)
    value, est = mpmath.quad(f, [a, b], method="tanh-sinh", error=True)
    floor = (abs(value) + 1) * mpf(2) ** (8 - mpmath.mp.prec)
    return Approx(value, abs(est) + floor)


def integrate(
    integrand_id: str,
    a=None,
    b=None,
    tol: Optional[float] = None,
) -> Approx:
    """Integral of a catalog integrand; the interval defaults to its natural range."""
    try:
        entry = CATALOG[integrand_id]
    except KeyError:
        raise DomainError(f"unknown integrand {integrand_id!r}") from None
    tol = _config.get_config().default_tolerance if tol is None else tol
    lo = entry.a() if a is None else to_mpf(a)
    hi = entry.b() if b is None else to_mpf(b)
    result = quad_approx(entry.fn, lo, hi)
    if result.err > tol:
        warnings.warn(
            f"quadrature of {integrand_id} has err {mpmath.nstr(result.err, 3)} > {tol}",
            QuadratureWarning,
            stacklevel=2,
        )
    return result
