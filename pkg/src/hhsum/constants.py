"""Zeta values, alternating zeta, polylogarithms, Ti_2, Catalan's constant.

Everything returns :class:`~hhsum.approx.Approx` at the working precision.
Odd zeta values come from Euler-Maclaurin summation; alternating series
from CVZ acceleration.
"""

from __future__ import annotations

from fractions import Fraction
from functools import wraps
from math import factorial

import mpmath
from mpmath import mpf

from . import config as _config  # noqa: F401  (sets working precision)
from .acceleration import accelerated_alternating, em_monomial_tail
from .approx import Approx, to_mpf
from .errors import DivergenceError, DomainError
from .exact import bernoulli_plus

__all__ = [
    "pi",
    "log2",
    "euler_gamma",
    "zeta",
    "zeta_em",
    "zeta_alt",
    "zeta_alt_series",
    "polylog",
    "ti2",
    "catalan",
]


def precision_cached(fn):
    """Memoize on (working precision, args)."""
    cache: dict = {}

    @wraps(fn)
    def wrapper(*args):
        key = (mpmath.mp.prec,) + tuple(args)
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = fn(*args)
        return hit

    wrapper.cache_clear = cache.clear
    return wrapper


def _eps() -> mpf:
    return mpf(2) ** (4 - mpmath.mp.prec)


@precision_cached
def pi() -> Approx:
    v = +mpmath.pi
    return Approx(v, v * _eps())


@precision_cached
def log2() -> Approx:
    v = mpmath.log(2)
    return Approx(v, v * _eps())


def _em_order(n0: int) -> int:
    # terms until B_2k/(2k)! (2k) N^-2k drops below the working precision
    return max(4, int(mpmath.mp.prec * 0.35 / max(1.0, float(mpmath.log(n0, 2)))) + 4)


@precision_cached
def euler_gamma() -> Approx:
    """gamma = H_N - log N - 1/(2N) + sum_k B_2k / (2k N^2k)."""
    N = 64
    H = mpmath.fsum(mpf(1) / j for j in range(1, N + 1))
    acc = H - mpmath.log(N) - mpf(1) / (2 * N)
    last = mpf(0)
    for k in range(1, _em_order(N) + 1):
        b = bernoulli_plus(2 * k)
        term = mpf(b.numerator) / b.denominator / (2 * k * mpf(N) ** (2 * k))
        acc += term
        last = abs(term)
    return Approx(acc, last + abs(acc) * _eps(), N)


@precision_cached
def zeta_em(s: int) -> Approx:
    """zeta(s) for integer s >= 2 by Euler-Maclaurin summation."""
    if s < 2:
        raise DivergenceError(f"zeta({s}) diverges")
    N = 40
    head = mpmath.fsum(mpf(n) ** (-s) for n in range(1, N + 1))
    tail, last = em_monomial_tail(s, 0, N, _em_order(N))
    v = head + tail
    return Approx(v, last + abs(v) * _eps(), N)


@precision_cached
def zeta(s: int) -> Approx:
    """Riemann zeta at an integer s >= 2.

    Even arguments use (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!); odd ones
    use Euler-Maclaurin.
    """
    if s <= 1:
        raise DivergenceError(f"zeta({s}) diverges")
    if s % 2:
        return zeta_em(s)
    k = s // 2
    b = abs(bernoulli_plus(s))
    coeff = Fraction(b.numerator * 2 ** (s - 1), b.denominator * factorial(s))
    v = to_mpf(coeff) * mpmath.pi**s
    return Approx(v, abs(v) * _eps())


def zeta_alt_series(s: int, depth: int | None = None) -> Approx:
    """sum (-1)^(n-1) n^-s by alternating-series acceleration."""
    if s < 1:
        raise DomainError(f"alternating zeta needs s >= 1, got {s}")
    depth = depth or _config.get_config().acceleration_depth
    return accelerated_alternating(lambda n: mpf(n) ** (-s), depth)


@precision_cached
def zeta_alt(s: int) -> Approx:
    """(1 - 2^(1-s)) zeta(s) for s >= 2; log 2 at s = 1."""
    if s < 1:
        raise DomainError(f"alternating zeta needs s >= 1, got {s}")
    if s == 1:
        return log2()
    return zeta(s) * (1 - Fraction(1, 2 ** (s - 1)))


@precision_cached
def _polylog(p: int, x: Fraction) -> Approx:
    if x == 0:
        return Approx(0)
    if x == 1:
        if p == 1:
            raise DivergenceError("Li_1(1) diverges")
        return zeta(p)
    if x == -1:
        return -zeta_alt(p)
    xm = to_mpf(x)
    if p == 1:
        v = -mpmath.log(1 - xm)
        return Approx(v, abs(v) * _eps())
    if x < 0 and x < Fraction(-1, 2):
        depth = _config.get_config().acceleration_depth
        ax = -xm
        # Li_p(x) = -sum (-1)^(n-1) |x|^n / n^p
        return -accelerated_alternating(lambda n: ax**n / mpf(n) ** p, depth)
    # direct series; tail <= |x|^(N+1) / ((N+1)^p (1-|x|))
    ax = abs(xm)
    target = mpf(2) ** (-mpmath.mp.prec)
    total = mpf(0)
    power = mpf(1)
    n = 0
    while True:
        n += 1
        power *= xm
        total += power / mpf(n) ** p
        bound = abs(power) * ax / (mpf(n + 1) ** p * (1 - ax))
        if bound < target * max(abs(total), mpf(1)):
            break
    return Approx(total, bound + n * abs(total) * _eps(), n)


def polylog(p: int, x) -> Approx:
    """Li_p(x) = sum x^n / n^p for p >= 1 and -1 <= x <= 1 (x rational)."""
    if p < 1:
        raise DomainError("polylog requires p >= 1")
    x = Fraction(x)
    if abs(x) > 1:
        raise DomainError("polylog requires |x| <= 1")
    return _polylog(p, x)


@precision_cached
def _ti2(x: Fraction) -> Approx:
    if x == 0:
        return Approx(0)
    xm = to_mpf(x)
    depth = _config.get_config().acceleration_depth
    return accelerated_alternating(lambda n: xm ** (2 * n - 1) / mpf(2 * n - 1) ** 2, depth)


def ti2(x) -> Approx:
    """Inverse tangent integral sum_{n>=0} (-1)^n x^(2n+1) / (2n+1)^2 on [0, 1]."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise DomainError("ti2 requires 0 <= x <= 1")
    return _ti2(x)


def catalan() -> Approx:
    """Catalan's constant sum (-1)^(n-1) / (2n-1)^2."""
    return _ti2(Fraction(1))
