"""Exact integer/rational machinery: binomials, Pochhammer symbols,
Bernoulli numbers (B_1 = +1/2 convention) and Faulhaber's formula.

All rationals are :class:`fractions.Fraction`, which is already kept in
lowest terms with the sign on the numerator.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import List, Sequence

__all__ = [
    "binomial",
    "pochhammer",
    "bernoulli_plus",
    "bernoulli_table",
    "faulhaber_coeffs",
    "faulhaber_sum",
    "eval_faulhaber",
]

_B_PLUS: List[Fraction] = [Fraction(1)]
_B_LOCK = threading.Lock()


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def pochhammer(t, n: int) -> Fraction:
    """Rising factorial t(t+1)...(t+n-1); the empty product is 1."""
    if n < 0:
        raise ValueError("pochhammer requires n >= 0")
    t = Fraction(t)
    out = Fraction(1)
    for i in range(n):
        out *= t + i
    return out


def _extend_bernoulli(n: int) -> None:
    # sum_{j=0}^{k} C(k+1, j) B_j = k + 1, solved for B_k
    with _B_LOCK:
        while len(_B_PLUS) <= n:
            k = len(_B_PLUS)
            acc = sum((comb(k + 1, j) * _B_PLUS[j] for j in range(k)), Fraction(0))
            _B_PLUS.append((Fraction(k + 1) - acc) / (k + 1))


def bernoulli_plus(n: int) -> Fraction:
    """Bernoulli number B_n^+ from t/(1 - e^{-t}); B_1^+ = 1/2.

    Values are memoized; the table grows on demand and never changes an
    entry once written.
    """
    if n < 0:
        raise ValueError("bernoulli_plus requires n >= 0")
    if n >= len(_B_PLUS):
        _extend_bernoulli(n)
    return _B_PLUS[n]


def bernoulli_table(n: int) -> List[Fraction]:
    """[B_0^+, ..., B_n^+]."""
    bernoulli_plus(n)
    return list(_B_PLUS[: n + 1])


def faulhaber_coeffs(k: int) -> List[Fraction]:
    """Coefficients c_j with sum_{l=1}^n l^k = sum_j c_j n^(k+1-j), j = 0..k."""
    if k < 0:
        raise ValueError("faulhaber_coeffs requires k >= 0")
    return [Fraction(comb(k + 1, j)) * bernoulli_plus(j) / (k + 1) for j in range(k + 1)]


def eval_faulhaber(coeffs: Sequence[Fraction], n) -> Fraction:
    """Evaluate sum_j c_j n^(k+1-j) for the coefficient list of degree k."""
    k = len(coeffs) - 1
    n = Fraction(n)
    return sum((c * n ** (k + 1 - j) for j, c in enumerate(coeffs)), Fraction(0))


def faulhaber_sum(n: int, k: int) -> Fraction:
    """1^k + 2^k + ... + n^k through Faulhaber's formula."""
    if n < 0 or k < 0:
        raise ValueError("faulhaber_sum requires n >= 0 and k >= 0")
    if n == 0:
        return Fraction(0)
    return eval_faulhaber(faulhaber_coeffs(k), n)
