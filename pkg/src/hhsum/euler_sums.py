"""Numerical linear and quadratic (alternating) Euler sums.

    S_{p,q}^{+,+}   = sum H_n^(p) / n^q
    S_{p,q}^{+,-}   = sum (-1)^(n-1) H_n^(p) / n^q
    S_{p,q}^{-,+}   = sum Hbar_n^(p) / n^q
    S_{p,q}^{-,-}   = sum (-1)^(n-1) Hbar_n^(p) / n^q
    S_{p1,p2,q}^{+,+,+/-} = sum (+/-1)^(n-1) H_n^(p1) H_n^(p2) / n^q

Non-alternating sums are a fixed-point partial sum to N plus an
Euler-Maclaurin tail built from the asymptotic expansion of H_n^(p).
Alternating ones use CVZ acceleration.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Literal, Optional, Tuple

import mpmath
from mpmath import mpf

from . import config as _config
from .acceleration import (
    accelerated_alternating,
    em_tail,
    extrapolate_partial_sums,
    fixed_bits,
    from_fixed,
    geometric_samples,
)
from .approx import Approx, to_mpf
from .constants import euler_gamma, precision_cached, zeta, zeta_alt
from .errors import DivergenceError, DomainError
from .exact import bernoulli_plus, pochhammer

__all__ = [
    "EulerSumSpec",
    "linear_euler",
    "quadratic_euler",
    "euler_reduction_check",
    "harmonic_asymptotic",
]

Sign = Literal["+", "-"]
_QBATCH = 12


@dataclass(frozen=True)
class EulerSumSpec:
    kind: Literal["linear", "quadratic"]
    p: int
    q: int
    p2: Optional[int] = None
    inner_sign: Sign = "+"
    outer_sign: Sign = "+"

    def __post_init__(self) -> None:
        if self.kind not in ("linear", "quadratic"):
            raise DomainError(f"unknown Euler sum kind {self.kind!r}")
        if self.inner_sign not in "+-" or self.outer_sign not in "+-":
            raise DomainError("signs must be '+' or '-'")
        if self.kind == "quadratic":
            if self.p2 is None or self.p2 < 1:
                raise DomainError("quadratic Euler sums need p2 >= 1")
            if self.inner_sign != "+":
                raise DomainError("quadratic Euler sums use ordinary harmonic numbers")
        if self.p < 1 or self.q < 1:
            raise DomainError("Euler sums need p >= 1 and q >= 1")

    @property
    def convergent(self) -> bool:
        return self.q >= 2 or self.outer_sign == "-"

    def evaluate(self) -> Approx:
        if self.kind == "linear":
            return linear_euler(self.p, self.q, self.inner_sign, self.outer_sign)
        return quadratic_euler(self.p, self.p2, self.q, self.outer_sign)


# -- asymptotics ---------------------------------------------------------------

def harmonic_asymptotic(p: int, terms: int) -> Tuple[Dict[Tuple[int, int], mpf], mpf]:
    """H_n^(p) ~ sum c_{k,e} n^-k log^e n.

    Returns the coefficients and the constant-term error (from gamma or
    zeta(p)).  ``terms`` Bernoulli corrections are included.
    """
    out: Dict[Tuple[int, int], mpf] = {}
    if p == 1:
        g = euler_gamma()
        out[(0, 1)] = mpf(1)
        out[(0, 0)] = g.value
        out[(1, 0)] = mpf(1) / 2
        for k in range(1, terms + 1):
            b = bernoulli_plus(2 * k)
            out[(2 * k, 0)] = -to_mpf(b) / (2 * k)
        return out, g.err
    z = zeta(p)
    out[(0, 0)] = z.value
    out[(p - 1, 0)] = mpf(-1) / (p - 1)
    out[(p, 0)] = mpf(1) / 2
    for k in range(1, terms + 1):
        c = bernoulli_plus(2 * k) * pochhammer(p, 2 * k - 1) / factorial(2 * k)
        out[(p + 2 * k - 1, 0)] = -to_mpf(c)
    return out, z.err


def _asym_terms(N: int) -> int:
    # Bernoulli corrections needed so that N^-(2K) is below working precision
    return max(3, int(mpmath.mp.prec / (2 * max(1.0, float(mpmath.log(N, 2))))) + 2)


def _product(a, b):
    out: Dict[Tuple[int, int], mpf] = {}
    for (k1, e1), c1 in a.items():
        for (k2, e2), c2 in b.items():
            key = (k1 + k2, e1 + e2)
            out[key] = out.get(key, mpf(0)) + c1 * c2
    return out


def _tail(asym: Dict[Tuple[int, int], mpf], const_err: mpf, q: int, N: int) -> Approx:
    order = _config.get_config().tail_order
    cutoff = _asym_terms(N) * 2 + q + 2
    shifted = {(k + q, e): c for (k, e), c in asym.items() if k + q <= cutoff}
    tail = em_tail(shifted, N, order)
    # constant-term uncertainty times a bound on sum_{n>N} log^2 n / n^q
    scale = (mpmath.log(N) + 2) ** 2 * mpf(N) ** (1 - q)
    return Approx(tail.value, tail.err + const_err * scale)


# -- partial sums (fixed point) -----------------------------------------------------

@precision_cached
def _linear_partials(p: int, N: int, qmax: int) -> Tuple[int, ...]:
    bits = fixed_bits()
    one = 1 << bits
    H = 0
    acc = [0] * (qmax + 1)
    for n in range(1, N + 1):
        H += one // n**p
        x = H
        for q in range(1, qmax + 1):
            x //= n
            acc[q] += x
    return tuple(acc)


@precision_cached
def _quadratic_partials(p1: int, p2: int, N: int, qmax: int) -> Tuple[int, ...]:
    bits = fixed_bits()
    one = 1 << bits
    H1 = H2 = 0
    acc = [0] * (qmax + 1)
    for n in range(1, N + 1):
        H1 += one // n**p1
        H2 = H1 if p2 == p1 else H2 + one // n**p2
        x = (H1 * H2) >> bits
        for q in range(1, qmax + 1):
            x //= n
            acc[q] += x
    return tuple(acc)


def _partial(parts: Tuple[int, ...], q: int, N: int) -> Approx:
    bits = fixed_bits()
    # every floor division loses < 1 ulp; q+2 roundings per term
    return Approx(from_fixed(parts[q], bits), from_fixed((q + 3) * N, bits), N)


# -- alternating helpers ---------------------------------------------------------------

@precision_cached
def _harmonic_mpf(p: int) -> List[mpf]:
    return [mpf(0)]


def _h(p: int, n: int) -> mpf:
    vals = _harmonic_mpf(p)
    while len(vals) <= n:
        j = len(vals)
        vals.append(vals[-1] + mpf(1) / mpf(j) ** p)
    return vals[n]


def _hbar(p: int, n: int) -> mpf:
    vals = _hbar_mpf(p)
    while len(vals) <= n:
        j = len(vals)
        vals.append(vals[-1] + (-1) ** (j - 1) / mpf(j) ** p)
    return vals[n]


@precision_cached
def _hbar_mpf(p: int) -> List[mpf]:
    return [mpf(0)]


def _depth(depth: Optional[int]) -> int:
    return depth or _config.get_config().acceleration_depth


def _truncation(N: Optional[int]) -> int:
    return N or _config.get_config().euler_truncation


# -- public API -------------------------------------------------------------------

@precision_cached
def _linear_pp(p: int, q: int, N: int, order: int) -> Approx:
    parts = _linear_partials(p, N, max(_QBATCH, q))
    head = _partial(parts, q, N)
    asym, cerr = harmonic_asymptotic(p, _asym_terms(N))
    return head + _tail(asym, cerr, q, N)


@precision_cached
def _linear_pm(p: int, q: int, depth: int) -> Approx:
    return accelerated_alternating(lambda n: _h(p, n) / mpf(n) ** q, depth, offset=10)


@precision_cached
def _linear_mp(p: int, q: int, depth: int) -> Approx:
    # swap the order of summation: sum_j (-1)^(j-1) (zeta(q) - H_{j-1}^(q)) / j^p
    z = zeta(q)
    acc = accelerated_alternating(lambda j: (z.value - _h(q, j - 1)) / mpf(j) ** p, depth, offset=10)
    # d/dz of the swapped sum is zeta_alt(p)
    return Approx(acc.value, acc.err + z.err * zeta_alt(p).value, acc.terms)


@precision_cached
def _linear_mm(p: int, q: int, n0: int) -> Approx:
    # swap: sum_j eta_j / j^p with eta_j = (-1)^(j-1) (zeta_alt(q) - Hbar_{j-1}^(q)) > 0
    za = zeta_alt(q)
    samples = set(geometric_samples(n0, 1.5, 14))
    partial: Dict[int, mpf] = {}
    s = mpf(0)
    for j in range(1, max(samples) + 1):
        eta = (-1) ** (j - 1) * (za.value - _hbar(q, j - 1))
        s += eta / mpf(j) ** p
        if j in samples:
            partial[j] = s
    value, err = extrapolate_partial_sums(partial, 7, 0)
    return Approx(value, err + za.err * zeta_alt(p).value, max(samples))


def linear_euler(
    p: int,
    q: int,
    inner_sign: Sign = "+",
    outer_sign: Sign = "+",
    *,
    truncation: Optional[int] = None,
    depth: Optional[int] = None,
) -> Approx:
    """Linear Euler sum S_{p,q}^{inner,outer}.

    Raises DivergenceError for non-alternating sums with q < 2.
    """
    spec = EulerSumSpec("linear", p, q, inner_sign=inner_sign, outer_sign=outer_sign)
    if not spec.convergent:
        raise DivergenceError(f"S_{{{p},{q}}}^{{{inner_sign},{outer_sign}}} diverges (needs q >= 2)")
    if inner_sign == "+":
        if outer_sign == "+":
            return _linear_pp(p, q, _truncation(truncation), _config.get_config().tail_order)
        return _linear_pm(p, q, _depth(depth))
    if outer_sign == "+":
        return _linear_mp(p, q, _depth(depth))
    return _linear_mm(p, q, 400)


@precision_cached
def _quadratic_pp(p1: int, p2: int, q: int, N: int, order: int) -> Approx:
    parts = _quadratic_partials(p1, p2, N, max(_QBATCH, q))
    head = _partial(parts, q, N)
    a1, e1 = harmonic_asymptotic(p1, _asym_terms(N))
    a2, e2 = harmonic_asymptotic(p2, _asym_terms(N))
    # constant-term errors enter multiplied by the other H (bounded by log N + 1)
    cerr = (e1 + e2) * (mpmath.log(N) + 2)
    return head + _tail(_product(a1, a2), cerr, q, N)


@precision_cached
def _quadratic_pm(p1: int, p2: int, q: int, depth: int) -> Approx:
    return accelerated_alternating(
        lambda n: _h(p1, n) * _h(p2, n) / mpf(n) ** q, depth, offset=10
    )


def quadratic_euler(
    p1: int,
    p2: int,
    q: int,
    outer_sign: Sign = "+",
    *,
    truncation: Optional[int] = None,
    depth: Optional[int] = None,
) -> Approx:
    """Quadratic Euler sum S_{p1,p2,q}^{+,+,outer}; symmetric in (p1, p2)."""
    spec = EulerSumSpec("quadratic", p1, q, p2=p2, outer_sign=outer_sign)
    if not spec.convergent:
        raise DivergenceError(f"S_{{{p1},{p2},{q}}}^{{+,+,{outer_sign}}} diverges (needs q >= 2)")
    a, b = sorted((p1, p2))
    if outer_sign == "+":
        return _quadratic_pp(a, b, q, _truncation(truncation), _config.get_config().tail_order)
    return _quadratic_pm(a, b, q, _depth(depth))


def euler_reduction_check(m: int) -> Tuple[Approx, Approx]:
    """Both sides of 2 sum H_n/n^m = (m+2) zeta(m+1) - sum_{n=1}^{m-2} zeta(m-n) zeta(n+1)."""
    if m < 2:
        raise DomainError("the reduction identity needs m >= 2")
    lhs = 2 * linear_euler(1, m)
    rhs = (m + 2) * zeta(m + 1)
    for n in range(1, m - 1):
        rhs = rhs - zeta(m - n) * zeta(n + 1)
    return lhs, rhs
