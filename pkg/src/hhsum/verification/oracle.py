"""Brute-force evaluation of the target series, independent of the closed forms.

Positive-term series: terms are summed directly (exact rationals for the
first ``oracle_exact_terms`` terms, then fixed-point integers) and the limit
is extrapolated from partial sums taken at geometrically spaced N, using a
tail model sum c_{i,e} N^-i log^e N.  The error estimate is the change in
the limit when one order of the model is dropped.

Alternating series: the first terms are added directly and the rest is
accelerated (CVZ) at two depths.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

import mpmath
from mpmath import mpf

from .. import config as _config
from ..acceleration import (
    accelerated_alternating,
    extrapolate_partial_sums,
    fixed_bits,
    from_fixed,
    geometric_samples,
)
from ..approx import Approx, to_mpf
from ..closed_forms import SumSpec
from ..constants import precision_cached
from ..errors import DomainError
from ..sequences import hyperharmonic_row

__all__ = [
    "OracleWarning",
    "exact_term",
    "oracle_partial_sum",
    "oracle_series",
    "raw_partial_sums",
]

# batch bounds: one pass over n serves every m <= _MBATCH, k <= _KBATCH
_MBATCH = 6
_KBATCH = 4
_OFFSET = 10


class OracleWarning(UserWarning):
    """The oracle could not reach the requested tolerance."""


def _factors(spec: SumSpec) -> Tuple[Tuple[int, int], ...]:
    if spec.kind == "linear":
        return ((spec.p, spec.s),)
    return tuple(sorted([(spec.p, spec.s), (spec.p2, spec.s2)]))


@lru_cache(maxsize=256)
def _rows(p: int, s: int, n: int) -> Tuple[Fraction, ...]:
    return tuple(hyperharmonic_row(n, p, s))


def _numerator(factors, n: int) -> Fraction:
    out = Fraction(1)
    for p, s in factors:
        out *= _rows(p, s, _round_up(n))[n]
    return out


def _round_up(n: int) -> int:
    # row cache granularity
    return max(256, 1 << (n - 1).bit_length())


def exact_term(spec: SumSpec, n: int) -> Fraction:
    """The n-th term of the series, as an exact rational."""
    if n < 1:
        raise DomainError("terms start at n = 1")
    sign = -1 if spec.alternating and n % 2 == 0 else 1
    return sign * _numerator(_factors(spec), n) / (n**spec.m * comb(n + spec.k, spec.k))


def oracle_partial_sum(spec: SumSpec, N: int) -> Fraction:
    """Exact partial sum of the first N terms."""
    return sum((exact_term(spec, n) for n in range(1, N + 1)), Fraction(0))


def raw_partial_sums(spec: SumSpec, ns) -> Dict[int, mpf]:
    """Partial sums at the requested N (extended precision, from exact terms)."""
    wanted = sorted(set(ns))
    out: Dict[int, mpf] = {}
    acc = Fraction(0)
    n = 0
    for N in wanted:
        while n < N:
            n += 1
            acc += exact_term(spec, n)
        out[N] = to_mpf(acc)
    return out


# -- positive series ---------------------------------------------------------------

def _log_power(factors) -> int:
    # H^(p,s) involves H^(1) (hence log n) exactly when p <= s
    return sum(1 for p, s in factors if p <= s)


def _plan(log_power: int, max_terms: int) -> Tuple[List[int], int]:
    orders = {0: 12, 1: 8, 2: 6}[log_power]
    unknowns = 1 + orders * (log_power + 1)
    samples = geometric_samples(200, 1.2, unknowns + 3)
    while samples[-1] > max_terms and orders > 2:
        # shrink the model before giving up range
        orders -= 1
        unknowns = 1 + orders * (log_power + 1)
        samples = geometric_samples(200, 1.2, unknowns + 3)
    if samples[-1] > max_terms:
        n0 = max(4, max_terms // 40)
        samples = [n for n in geometric_samples(n0, 1.2, unknowns + 3) if n <= max_terms]
    return samples, orders


@precision_cached
def _positive_partials(
    factors: Tuple[Tuple[int, int], ...],
    samples: Tuple[int, ...],
    mmax: int,
    kmax: int,
    exact_terms: int,
) -> Dict[Tuple[int, int], Dict[int, int]]:
    """Fixed-point partial sums at ``samples`` for every (m, k) in the batch."""
    bits = fixed_bits()
    one = 1 << bits
    last = samples[-1]
    wanted = set(samples)
    head = min(exact_terms, last)
    acc = {(m, k): Fraction(0) for m in range(1, mmax + 1) for k in range(1, kmax + 1)}
    out: Dict[Tuple[int, int], Dict[int, int]] = {key: {} for key in acc}

    # exact head
    for n in range(1, head + 1):
        x = _numerator(factors, n)
        for k in range(1, kmax + 1):
            y = x / comb(n + k, k)
            for m in range(1, mmax + 1):
                y /= n
                acc[(m, k)] += y
        if n in wanted:
            for key, v in acc.items():
                out[key][n] = _to_fixed(v, bits)
    fixed = {key: _to_fixed(v, bits) for key, v in acc.items()}

    # fixed-point continuation: level i of each factor holds H_n^(p, i+1)
    states = []
    for p, s in factors:
        row_levels = [_to_fixed(Fraction(hyperharmonic_row(head, p, i + 1)[head]), bits) for i in range(s)]
        states.append((p, row_levels))
    for n in range(head + 1, last + 1):
        x = one
        for p, levels in states:
            levels[0] += one // n**p
            for i in range(1, len(levels)):
                levels[i] += levels[i - 1]
            x = (x * levels[-1]) >> bits
        for k in range(1, kmax + 1):
            y = x // comb(n + k, k)
            for m in range(1, mmax + 1):
                y //= n
                fixed[(m, k)] += y
        if n in wanted:
            for key, v in fixed.items():
                out[key][n] = v
    return out


def _to_fixed(x: Fraction, bits: int) -> int:
    return (x.numerator << bits) // x.denominator


def _positive(spec: SumSpec, tol: float, max_terms: int) -> Approx:
    factors = _factors(spec)
    L = _log_power(factors)
    samples, orders = _plan(L, max_terms)
    if len(samples) < 1 + orders * (L + 1) + 1:
        # too few samples for any model: report the last partial sum with a crude bound
        N = min(max_terms, samples[-1] if samples else max_terms)
        s = raw_partial_sums(spec, [N])[N]
        t = abs(to_mpf(exact_term(spec, N)))
        return Approx(s, t * N, N)
    cfg = _config.get_config()
    table = _positive_partials(
        factors,
        tuple(samples),
        max(_MBATCH, spec.m),
        max(_KBATCH, spec.k),
        cfg.oracle_exact_terms,
    )
    bits = fixed_bits()
    partial = {N: from_fixed(v, bits) for N, v in table[(spec.m, spec.k)].items()}
    value, err = extrapolate_partial_sums(partial, orders, L)
    last = samples[-1]
    # fixed-point rounding: every level and division truncates at most one unit
    depth = sum(s for _, s in factors) + spec.m + 3
    rounding = from_fixed(depth * last ** (sum(s for _, s in factors) + 2), bits)
    return Approx(value, err + rounding, last)


# -- alternating series -------------------------------------------------------------

def _alternating(spec: SumSpec, depth: int) -> Approx:
    factors = _factors(spec)
    denom_k = spec.k

    def a(n: int) -> mpf:
        return to_mpf(_numerator(factors, n) / (n**spec.m * comb(n + denom_k, denom_k)))

    return accelerated_alternating(a, depth, offset=_OFFSET)


def oracle_series(spec: SumSpec, tol: Optional[float] = None, max_terms: Optional[int] = None) -> Approx:
    """Brute-force value of the series described by ``spec``.

    If the error estimate exceeds ``tol`` an :class:`OracleWarning` is
    issued and the best available value is returned with its honest error.
    """
    cfg = _config.get_config()
    tol = cfg.default_tolerance if tol is None else tol
    max_terms = cfg.oracle_max_terms if max_terms is None else max_terms
    if max_terms < 1:
        raise DomainError("max_terms must be >= 1")
    if spec.alternating:
        depth = cfg.acceleration_depth
        if _OFFSET + 2 * depth > max_terms:
            depth = max(2, (max_terms - _OFFSET) // 2)
        result = _alternating(spec, depth)
    else:
        result = _positive(spec, tol, max_terms)
    if result.err > tol:
        warnings.warn(
            f"oracle for {spec.id} reached err {mpmath.nstr(result.err, 3)} > tol {tol}",
            OracleWarning,
            stacklevel=2,
        )
    return result
