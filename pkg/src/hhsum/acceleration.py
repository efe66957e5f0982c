"""Series summation tools shared by the constant, Euler-sum and oracle code.

* ``cvz_alternating``: Cohen-Villegas-Zagier acceleration of sum (-1)^k a_k.
* ``em_tail``: Euler-Maclaurin tail sum_{n>N} n^-s log^e n.
* ``extrapolate_partial_sums``: least-squares limit of partial sums whose
  tails expand in N^-i log^e N.
* fixed-point helpers used by the long partial-sum loops (Python ints are
  much faster than mpf in tight loops and round only once per term).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

import mpmath
from mpmath import mpf

from .approx import Approx
from .exact import bernoulli_plus

__all__ = [
    "cvz_alternating",
    "accelerated_alternating",
    "em_tail",
    "em_monomial_tail",
    "extrapolate_partial_sums",
    "fixed_bits",
    "from_fixed",
    "geometric_samples",
]


# -- alternating series -------------------------------------------------------

def cvz_alternating(a: Callable[[int], mpf], depth: int) -> mpf:
    """Approximate sum_{k>=0} (-1)^k a(k) from a(0..depth-1).

    Algorithm 1 of Cohen, Rodriguez Villegas and Zagier; for moment
    sequences the error is about 2 (3 + sqrt 8)^-depth times sum |a|.
    """
    d = (3 + mpmath.sqrt(8)) ** depth
    d = (d + 1 / d) / 2
    b = mpf(-1)
    c = -d
    s = mpf(0)
    for k in range(depth):
        c = b - c
        s += c * a(k)
        b = (k + depth) * (k - depth) * b / ((k + mpf(1) / 2) * (k + 1))
    return s / d


def accelerated_alternating(
    a: Callable[[int], mpf], depth: int, offset: int = 0
) -> Approx:
    """sum_{n>=1} (-1)^(n-1) a(n) with an error estimate.

    The first ``offset`` terms are added directly; the remainder is
    accelerated at ``depth`` and ``2*depth``.  The error estimate is the
    gap between the two, floored at the working precision.
    """
    head = mpmath.fsum((-1) ** (n - 1) * a(n) for n in range(1, offset + 1))
    sign = -1 if offset % 2 else 1
    cache: Dict[int, mpf] = {}

    def shifted(k: int) -> mpf:
        if k not in cache:
            cache[k] = a(offset + 1 + k)
        return cache[k]

    lo = cvz_alternating(shifted, depth)
    hi = cvz_alternating(shifted, 2 * depth)
    floor = (abs(hi) + abs(head)) * mpf(2) ** (8 - mpmath.mp.prec)
    return Approx(head + sign * hi, abs(hi - lo) + floor, offset + 2 * depth)


# -- Euler-Maclaurin tails ----------------------------------------------------

def _deriv(t: int, poly: Tuple[mpf, ...]) -> Tuple[int, Tuple[mpf, ...]]:
    # d/dx [x^-t P(log x)] = x^-(t+1) (-t P + P')
    new = [-t * c for c in poly] + [mpf(0)]
    for i in range(1, len(poly)):
        new[i - 1] += i * poly[i]
    while len(new) > 1 and new[-1] == 0:
        new.pop()
    return t + 1, tuple(new)


def _eval_poly(poly: Sequence[mpf], L: mpf) -> mpf:
    out = mpf(0)
    for c in reversed(poly):
        out = out * L + c
    return out


@lru_cache(maxsize=None)
def _em_weight(k: int) -> Fraction:
    return bernoulli_plus(2 * k) / factorial(2 * k)


def em_monomial_tail(s: int, e: int, N: int, order: int) -> Tuple[mpf, mpf]:
    """sum_{n>N} n^-s log^e n for s >= 2 and its last correction magnitude."""
    if s < 2:
        raise ValueError("em tail requires s >= 2")
    Nm = mpf(N)
    L = mpmath.log(Nm)
    # integral_N^inf x^-s L^e dx = N^(1-s) sum_i e!/(e-i)! L^(e-i) / (s-1)^(i+1)
    integral = mpf(0)
    for i in range(e + 1):
        integral += mpmath.factorial(e) / mpmath.factorial(e - i) * L ** (e - i) / mpf(s - 1) ** (i + 1)
    integral *= Nm ** (1 - s)
    poly: Tuple[mpf, ...] = tuple([mpf(0)] * e + [mpf(1)])
    f_N = Nm ** (-s) * _eval_poly(poly, L)
    total = integral - f_N / 2
    t, cur = s, poly
    last = mpf(0)
    for k in range(1, order + 1):
        t, cur = _deriv(t, cur)  # odd derivative 2k-1
        w = _em_weight(k)
        term = mpf(w.numerator) / w.denominator * Nm ** (-t) * _eval_poly(cur, L)
        total -= term
        last = abs(term)
        t, cur = _deriv(t, cur)
    return total, last


def em_tail(coeffs: Mapping[Tuple[int, int], mpf], N: int, order: int) -> Approx:
    """sum_{n>N} sum_{(s,e)} c_{s,e} n^-s log^e n via Euler-Maclaurin."""
    total = mpf(0)
    err = mpf(0)
    for (s, e), c in coeffs.items():
        if c == 0:
            continue
        v, last = em_monomial_tail(s, e, N, order)
        total += c * v
        err += abs(c) * last
    return Approx(total, err)


# -- extrapolation of partial sums ---------------------------------------------

def geometric_samples(n0: int, ratio: float, count: int) -> List[int]:
    out: List[int] = []
    x = float(n0)
    for _ in range(count):
        n = int(x)
        if out and n <= out[-1]:
            n = out[-1] + 1
        out.append(n)
        x *= ratio
    return out


def _fit_limit(points: Sequence[Tuple[int, mpf]], orders: int, log_power: int) -> mpf:
    # basis scaled by the smallest sample to keep the system well conditioned
    n_ref = mpf(points[0][0])
    with mpmath.extradps(20):
        rows, rhs = [], []
        for N, S in points:
            x = n_ref / N
            L = mpmath.log(N)
            row = [mpf(1)]
            for i in range(1, orders + 1):
                for e in range(log_power + 1):
                    row.append(x**i * L**e)
            rows.append(row)
            rhs.append(S)
        A = mpmath.matrix(rows)
        b = mpmath.matrix(rhs)
        if A.rows == A.cols:
            sol = mpmath.lu_solve(A, b)
        else:
            sol = mpmath.qr_solve(A, b)[0]
        return +sol[0]


def extrapolate_partial_sums(
    partial: Mapping[int, mpf], orders: int, log_power: int
) -> Tuple[mpf, mpf]:
    """Limit of S_N given S_N = S - sum_{i<=orders, e<=log_power} c N^-i log^e N.

    Returns (value, error estimate); the estimate is the change when one
    order is dropped and the smallest sample is discarded.
    """
    pts = sorted(partial.items())
    unknowns = 1 + orders * (log_power + 1)
    if len(pts) < unknowns:
        raise ValueError("not enough samples for the requested fit")
    best = _fit_limit(pts[-unknowns:], orders, log_power)
    coarse_n = 1 + (orders - 1) * (log_power + 1)
    coarse = _fit_limit(pts[-coarse_n:], orders - 1, log_power)
    return best, abs(best - coarse)


# -- fixed point -------------------------------------------------------------------

def fixed_bits() -> int:
    """Fractional bits for fixed-point loops at the current precision."""
    return mpmath.mp.prec + 64


def from_fixed(x: int, bits: int) -> mpf:
    return mpmath.ldexp(mpf(x), -bits)
