"""Closed forms for log moments and binomial-sum formulas for harmonic numbers.

    log_moment(n, m, x)   = int_0^x y^n log^m y dy
    log1m_moment(n, m, x) = int_x^1 y^n log^m (1-y) dy

The binomial formulas express H_{n+1}, h_n^(r), H_{n+1}^(2) and
H_{n+1}^(3) as alternating binomial sums; they are checked against the
direct definitions by exact rational comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath

from ..approx import Approx, exact, to_mpf
from ..errors import DomainError
from ..exact import binomial, pochhammer

__all__ = [
    "log_moment",
    "log1m_moment",
    "log_moment_at_one",
    "log1m_moment_at_zero",
    "binomial_harmonic",
    "binomial_hyperharmonic",
    "binomial_harmonic2",
    "binomial_harmonic3",
]


def _as_exact(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return None


def log_moment_at_one(n: int, m: int) -> Fraction:
    """int_0^1 y^n log^m y dy = m! (-1)^m / (n+1)^(m+1)."""
    if n < 0 or m < 0:
        raise DomainError("log_moment needs n, m >= 0")
    return Fraction(pochhammer(1, m) * (-1) ** m, (n + 1) ** (m + 1))


def log1m_moment_at_zero(n: int, m: int) -> Fraction:
    """int_0^1 y^n log^m (1-y) dy = (-1)^m m! sum_j C(n,j) (-1)^j / (j+1)^(m+1)."""
    if n < 0 or m < 0:
        raise DomainError("log1m_moment needs n, m >= 0")
    total = sum(
        (Fraction(binomial(n, j) * (-1) ** j, (j + 1) ** (m + 1)) for j in range(n + 1)),
        Fraction(0),
    )
    return (-1) ** m * pochhammer(1, m) * total


def log_moment(n: int, m: int, x=1) -> Approx:
    """int_0^x y^n log^m y dy for 0 < x <= 1; exact at x = 1."""
    if n < 0 or m < 0:
        raise DomainError("log_moment needs n, m >= 0")
    xe = _as_exact(x)
    if xe is not None and xe == 1:
        return exact(log_moment_at_one(n, m))
    xm = to_mpf(x)
    if not 0 < xm <= 1:
        raise DomainError("log_moment needs 0 < x <= 1")
    L = mpmath.log(xm)
    poly = sum(
        to_mpf(pochhammer(m + 1 - j, j) / Fraction(n + 1) ** j) * (-1) ** j * L ** (m - j)
        for j in range(m + 1)
    )
    v = xm ** (n + 1) / (n + 1) * poly
    return Approx(v, (abs(v) + 1) * mpmath.mpf(2) ** (8 - mpmath.mp.prec))


def log1m_moment(n: int, m: int, x=0) -> Approx:
    """int_x^1 y^n log^m (1-y) dy for 0 <= x < 1; exact at x = 0."""
    if n < 0 or m < 0:
        raise DomainError("log1m_moment needs n, m >= 0")
    xe = _as_exact(x)
    if xe is not None and xe == 0:
        return exact(log1m_moment_at_zero(n, m))
    xm = to_mpf(x)
    if not 0 <= xm < 1:
        raise DomainError("log1m_moment needs 0 <= x < 1")
    u = 1 - xm
    L = mpmath.log(u)
    v = mpmath.mpf(0)
    for j in range(n + 1):
        inner = sum(
            to_mpf(pochhammer(m + 1 - i, i) / Fraction(j + 1) ** i) * (-1) ** i * L ** (m - i)
            for i in range(m + 1)
        )
        v += binomial(n, j) * (-1) ** j * u ** (j + 1) / (j + 1) * inner
    return Approx(v, (abs(v) + 1) * (n + 2) * mpmath.mpf(2) ** (8 - mpmath.mp.prec))


@lru_cache(maxsize=None)
def _alt_binom(n: int, e: int) -> Fraction:
    # sum_{j=0}^n C(n+1, j+1) (-1)^j / (j+1)^e
    return sum(
        (Fraction(binomial(n + 1, j + 1) * (-1) ** j, (j + 1) ** e) for j in range(n + 1)),
        Fraction(0),
    )


def binomial_harmonic(n: int) -> Fraction:
    """H_{n+1} = sum_{j=0}^n C(n+1, j+1) (-1)^j / (j+1)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    return _alt_binom(n, 1)


def binomial_hyperharmonic(n: int, r: int) -> Fraction:
    """h_n^(r) as C(n+r-1, r-1) times a difference of two alternating binomial sums."""
    if n < 0 or r < 1:
        raise DomainError("need n >= 0 and r >= 1")
    first = _alt_binom(n + r - 2, 1) if n + r - 2 >= 0 else Fraction(0)
    second = _alt_binom(r - 2, 1) if r >= 2 else Fraction(0)
    return binomial(n + r - 1, r - 1) * (first - second)


def binomial_harmonic2(n: int) -> Fraction:
    """H_{n+1}^(2) = A(n,2) - sum_{k<n} A(k,1)/(k+2), A(n,e) the alternating binomial sum."""
    if n < 0:
        raise DomainError("n must be >= 0")
    return _alt_binom(n, 2) - sum(
        (_alt_binom(k, 1) / (k + 2) for k in range(n)), Fraction(0)
    )


def binomial_harmonic3(n: int) -> Fraction:
    """H_{n+1}^(3) = A(n,3) - sum_{j<n} A(j,1)/(j+2)^2 - sum_{j<n} A(j,2)/(j+2)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    first = sum((_alt_binom(j, 1) / (j + 2) ** 2 for j in range(n)), Fraction(0))
    second = sum((_alt_binom(j, 2) / (j + 2) for j in range(n)), Fraction(0))
    return _alt_binom(n, 3) - first - second
