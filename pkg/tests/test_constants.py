from fractions import Fraction

import mpmath
import pytest

from hhsum.constants import (
    catalan,
    euler_gamma,
    log2,
    pi,
    polylog,
    ti2,
    zeta,
    zeta_alt,
    zeta_alt_series,
    zeta_em,
)
from hhsum.errors import DivergenceError, DomainError


def close(a, b, tol):
    return abs(a.value - mpmath.mpf(b)) <= tol + a.err


def test_zeta_even_closed_forms():
    assert close(zeta(2), mpmath.pi**2 / 6, 1e-40)
    assert close(zeta(4), mpmath.pi**4 / 90, 1e-40)


@pytest.mark.parametrize("s", [2, 3, 4, 5, 7])
def test_zeta_two_routes(s):
    # Euler-Maclaurin against the Bernoulli closed form / mpmath
    a = zeta_em(s)
    assert abs(a.value - mpmath.zeta(s)) <= a.err + mpmath.mpf(10) ** -35


def test_zeta3_value():
    assert close(zeta(3), "1.2020569032", 1e-10)


def test_zeta_divergent():
    with pytest.raises(DivergenceError):
        zeta(1)


@pytest.mark.parametrize("s,want", [(1, mpmath.log(2)), (2, mpmath.pi**2 / 12), (3, 0.75 * mpmath.zeta(3))])
def test_zeta_alt(s, want):
    assert close(zeta_alt(s), want, 1e-30)


@pytest.mark.parametrize("s", [1, 2, 3, 6])
def test_zeta_alt_series_agrees(s):
    assert zeta_alt(s).agrees(zeta_alt_series(s), 1e-30)


def test_zeta_alt_domain():
    with pytest.raises(DomainError):
        zeta_alt(0)


def test_polylog_values():
    assert close(polylog(1, Fraction(1, 2)), mpmath.log(2), 1e-30)
    assert close(polylog(4, Fraction(1, 2)), "0.5174790617", 1e-9)
    assert close(polylog(3, 1), mpmath.zeta(3), 1e-30)
    assert close(polylog(2, Fraction(-1, 4)), mpmath.polylog(2, -0.25), 1e-30)
    assert close(polylog(3, Fraction(-3, 4)), mpmath.polylog(3, mpmath.mpf(-3) / 4), 1e-30)


def test_polylog_divergent():
    with pytest.raises(DivergenceError):
        polylog(1, 1)


def test_ti2_and_catalan():
    assert ti2(0).value == 0
    assert close(ti2(1), mpmath.catalan, 1e-30)
    assert close(ti2(Fraction(1, 2)), "0.4872223", 1e-6)
    assert close(catalan(), "0.9159655942", 1e-10)


def test_basic_constants():
    assert close(pi(), mpmath.pi, 1e-40)
    assert close(log2(), mpmath.log(2), 1e-40)
    assert close(euler_gamma(), mpmath.euler, 1e-30)


def test_cache_keyed_on_precision():
    lo = mpmath.mp.dps
    a = zeta(3)
    mpmath.mp.dps = lo + 20
    try:
        b = zeta(3)
    finally:
        mpmath.mp.dps = lo
    assert b.err < a.err
