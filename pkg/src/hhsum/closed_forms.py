"""Closed forms for hyperharmonic sums with a reciprocal binomial weight.

The target series are

    sum_n (+/-1)^(n+1) H_n^(p,s) / (n^m C(n+k,k))
    sum_n (+/-1)^(n+1) H_n^(p1,s1) H_n^(p2,s2) / (n^m C(n+k,k))

They are reduced in three steps: the coefficient table rewrites H^(p,s) in
terms of n^j H^(p-l); the partial fraction 1/C(n+k,k) = sum_r w_r/(n+r)
leaves single shifted denominators; and the building blocks

    S(p, m, r)      = sum (+/-1)^(n+1) H_n^(p) / (n^m (n+r))
    T(p1, p2, m, r) = sum (+/-1)^(n+1) H_n^(p1) H_n^(p2) / (n^m (n+r))

are expressed through linear/quadratic Euler sums, zeta values and finite
harmonic numbers.  A non-positive order -q stands for the power sum
1^q + ... + n^q, which is expanded by Faulhaber's formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Literal, Optional, Tuple

from .approx import Approx, asum, exact
from .constants import precision_cached, zeta, zeta_alt
from .errors import DomainError
from .euler_sums import linear_euler, quadratic_euler
from .exact import binomial, faulhaber_coeffs
from .sequences import coeff_table, harmonic, harmonic_alt

__all__ = [
    "SumSpec",
    "recip_binomial_weights",
    "shift_sum",
    "s_closed",
    "s_boundary",
    "quadratic_base",
    "t_closed",
    "t_boundary",
    "closed_linear",
    "closed_quadratic",
    "closed_value",
]


@dataclass(frozen=True)
class SumSpec:
    """One target series.

    ``alternating`` selects the (-1)^(n+1) weight.  Quadratic specs carry
    (p, s) for the first factor and (p2, s2) for the second.
    """

    kind: Literal["linear", "quadratic"]
    p: int
    s: int
    m: int
    k: int
    alternating: bool = False
    p2: Optional[int] = None
    s2: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("linear", "quadratic"):
            raise DomainError(f"unknown kind {self.kind!r}")
        names = ["p", "s", "m", "k"]
        if self.kind == "quadratic":
            if self.p2 is None or self.s2 is None:
                raise DomainError("quadratic specs need p2 and s2")
            names += ["p2", "s2"]
        elif self.p2 is not None or self.s2 is not None:
            raise DomainError("p2/s2 only apply to quadratic specs")
        for name in names:
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
        if self.kind == "linear" and self.m < self.s:
            raise DomainError(f"m ≥ s violated (m={self.m}, s={self.s})")
        if self.kind == "quadratic" and self.m < self.s + self.s2 - 1:
            raise DomainError(
                f"m ≥ s1+s2-1 violated (m={self.m}, s1={self.s}, s2={self.s2})"
            )

    @property
    def id(self) -> str:
        sign = "alt" if self.alternating else "pos"
        if self.kind == "linear":
            return f"linear-{sign}(p={self.p},s={self.s},m={self.m},k={self.k})"
        return (
            f"quadratic-{sign}(p1={self.p},s1={self.s},p2={self.p2},s2={self.s2},"
            f"m={self.m},k={self.k})"
        )

    def params(self) -> Dict[str, object]:
        out: Dict[str, object] = {"kind": self.kind, "alternating": self.alternating}
        if self.kind == "linear":
            out.update(p=self.p, s=self.s)
        else:
            out.update(p1=self.p, s1=self.s, p2=self.p2, s2=self.s2)
        out.update(m=self.m, k=self.k)
        return out

    def swapped(self) -> "SumSpec":
        """The same quadratic series with its two factors exchanged."""
        if self.kind != "quadratic":
            return self
        return SumSpec("quadratic", self.p2, self.s2, self.m, self.k, self.alternating, self.p, self.s)


# -- elementary pieces -------------------------------------------------------------

def recip_binomial_weights(k: int) -> List[Tuple[int, Fraction]]:
    """Weights w_r with 1/C(n+k,k) = sum_{r=1}^k w_r/(n+r)."""
    if k < 1:
        raise DomainError("k must be >= 1")
    return [(r, Fraction((-1) ** (r + 1) * r * binomial(k, r))) for r in range(1, k + 1)]


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _zbar(i: int) -> Approx:
    return zeta_alt(i)


@precision_cached
def shift_sum(s: int, a: int) -> Approx:
    """sum_n a H_n^(s) / (n (n+a)) for s, a >= 1."""
    if s < 1 or a < 1:
        raise DomainError("shift_sum needs s >= 1 and a >= 1")
    rational = sum(
        (Fraction(_sgn(s + 1)) * harmonic(j, 1) / j**s for j in range(1, a)), Fraction(0)
    )
    parts = [zeta(s + 1), exact(rational)]
    parts += [_sgn(s - i) * harmonic(a - 1, s - i + 1) * zeta(i) for i in range(2, s + 1)]
    return asum(parts)


# -- S blocks -----------------------------------------------------------------------

@precision_cached
def s_boundary(p: int, r: int) -> Approx:
    """sum_n (-1)^(n+1) H_n^(p) / (n+r) for p, r >= 1."""
    if p < 1 or r < 1:
        raise DomainError("s_boundary needs p >= 1 and r >= 1")
    parts = [
        _sgn(r) * linear_euler(p, 1, "+", "-"),
        _sgn(r - 1) * _zbar(p + 1),
    ]
    for j in range(1, p + 1):
        parts.append(_sgn(p - j + r) * harmonic_alt(r - 1, p - j + 1) * _zbar(j))
    parts.append(_sgn(p + r - 1) * harmonic(r - 1, p) * _zbar(1))
    tail = sum((harmonic_alt(n, 1) / n**p for n in range(1, r)), Fraction(0))
    parts.append(exact(_sgn(p + r) * tail))
    return asum(parts)


def _power_sum_block(t: int, r: int, alt: bool) -> Approx:
    """sum_n (+/-1)^(n+1) / (n^t (n+r)) by partial fractions in n."""
    if not alt:
        # t >= 1; the n(n+r) remainder telescopes to H_r / r
        parts = [Fraction(_sgn(t - i), r ** (t - i + 1)) * zeta(i) for i in range(2, t + 1)]
        parts.append(exact(Fraction(_sgn(t - 1), r**t) * harmonic(r, 1)))
        return asum(parts)
    # t >= 0; the 1/(n+r) remainder is (-1)^r (log 2 - Hbar_r)
    parts = [Fraction(_sgn(t - i), r ** (t - i + 1)) * _zbar(i) for i in range(1, t + 1)]
    parts.append(Fraction(_sgn(t + r), r**t) * (_zbar(1) - harmonic_alt(r, 1)))
    return asum(parts)


@precision_cached
def s_closed(p: int, m: int, r: int, alt: bool) -> Approx:
    """S(p, m, r) = sum (+/-1)^(n+1) H_n^(p) / (n^m (n+r)) for any integer p.

    Hypotheses: r >= 1; for p >= 1, m >= 1 (m >= 0 when alternating);
    for p <= 0, m >= -p + 2 (m >= -p + 1 when alternating).
    """
    if r < 1:
        raise DomainError(f"shift r must be >= 1, got {r}")
    if p >= 1:
        if alt:
            if m < 0:
                raise DomainError(f"alternating S(p,m,r) requires m ≥ 0, got m={m}")
            parts = [
                Fraction(_sgn(m - i), r ** (m - i + 1)) * linear_euler(p, i, "+", "-")
                for i in range(1, m + 1)
            ]
            parts.append(Fraction(_sgn(m), r**m) * s_boundary(p, r))
            return asum(parts)
        if m < 1:
            raise DomainError(f"S(p,m,r) requires m ≥ 1, got m={m}")
        parts = [
            Fraction(_sgn(m - i), r ** (m - i + 1)) * linear_euler(p, i, "+", "+")
            for i in range(2, m + 1)
        ]
        parts.append(Fraction(_sgn(m - 1), r**m) * shift_sum(p, r))
        return asum(parts)
    q = -p
    need = q + 1 if alt else q + 2
    if m < need:
        raise DomainError(
            f"power-sum order {p} requires m ≥ {need} (m ≥ -p+{need - q}), got m={m}"
        )
    parts = []
    for ell, c in enumerate(faulhaber_coeffs(q)):
        if c:
            parts.append(c * _power_sum_block(m - q - 1 + ell, r, alt))
    return asum(parts)


# -- T blocks -----------------------------------------------------------------------

@precision_cached
def quadratic_base(p1: int, p2: int, r: int) -> Approx:
    """sum_n r H_n^(p1) H_n^(p2) / (n (n+r)) for p1, p2, r >= 1."""
    if p1 < 1 or p2 < 1 or r < 1:
        raise DomainError("quadratic_base needs p1, p2, r >= 1")
    parts = [
        linear_euler(p1, p2 + 1),
        linear_euler(p2, p1 + 1),
        -zeta(p1 + p2 + 1),
    ]
    for b in range(1, r):
        parts += [
            s_closed(p1, p2, b, False),
            s_closed(p2, p1, b, False),
            -s_closed(0, p1 + p2 + 1, b, False),
        ]
    return asum(parts)


@precision_cached
def t_boundary(p1: int, p2: int, r: int) -> Approx:
    """sum_n (-1)^(n+1) H_n^(p1) H_n^(p2) / (n+r) for p1, p2, r >= 1."""
    if p1 < 1 or p2 < 1 or r < 1:
        raise DomainError("t_boundary needs p1, p2, r >= 1")
    a, b = sorted((p1, p2))
    base = asum([
        quadratic_euler(a, b, 1, "-"),
        -linear_euler(a, b + 1, "+", "-"),
        -linear_euler(b, a + 1, "+", "-"),
        _zbar(a + b + 1),
    ])
    parts = [_sgn(r) * base]
    for j in range(1, r):
        parts.append(_sgn(r - 1 - j) * (s_closed(a, b, j, True) + s_closed(b, a, j, True)))
        parts.append(_sgn(r - j) * s_closed(0, a + b + 1, j, True))
    return asum(parts)


@precision_cached
def t_closed(p1: int, p2: int, m: int, r: int, alt: bool) -> Approx:
    """T(p1, p2, m, r) = sum (+/-1)^(n+1) H_n^(p1) H_n^(p2) / (n^m (n+r)).

    Hypotheses: both orders >= 1 needs m >= 1 (m >= 0 when alternating);
    one order -q <= 0 needs m >= q + 2 (q + 1); both -q1, -q2 <= 0 need
    m >= q1 + q2 + 3 (q1 + q2 + 2).
    """
    if r < 1:
        raise DomainError(f"shift r must be >= 1, got {r}")
    p1, p2 = max(p1, p2), min(p1, p2)
    if p2 >= 1:
        if alt:
            if m < 0:
                raise DomainError(f"alternating T requires m ≥ 0, got m={m}")
            parts = [
                Fraction(_sgn(m - i), r ** (m - i + 1)) * quadratic_euler(p2, p1, i, "-")
                for i in range(1, m + 1)
            ]
            parts.append(Fraction(_sgn(m), r**m) * t_boundary(p2, p1, r))
            return asum(parts)
        if m < 1:
            raise DomainError(f"T requires m ≥ 1, got m={m}")
        parts = [
            Fraction(_sgn(m - i), r ** (m - i + 1)) * quadratic_euler(p2, p1, i, "+")
            for i in range(2, m + 1)
        ]
        parts.append(Fraction(_sgn(m - 1), r**m) * quadratic_base(p2, p1, r))
        return asum(parts)
    if p1 >= 1:
        q = -p2
        need = q + 1 if alt else q + 2
        if m < need:
            raise DomainError(f"mixed-order T with power sum -{q} requires m ≥ {need}, got m={m}")
        parts = [
            c * s_closed(p1, m - q - 1 + ell, r, alt)
            for ell, c in enumerate(faulhaber_coeffs(q))
            if c
        ]
        return asum(parts)
    q1, q2 = -p1, -p2
    need = q1 + q2 + (2 if alt else 3)
    if m < need:
        raise DomainError(
            f"T with two power sums -{q1}, -{q2} requires m ≥ {need}, got m={m}"
        )
    parts = []
    for l1, c1 in enumerate(faulhaber_coeffs(q1)):
        for l2, c2 in enumerate(faulhaber_coeffs(q2)):
            if c1 and c2:
                parts.append(c1 * c2 * s_closed(0, m - q1 - q2 - 1 + l1 + l2, r, alt))
    return asum(parts)


# -- full series -------------------------------------------------------------------

@precision_cached
def _linear(p: int, s: int, m: int, k: int, alt: bool) -> Approx:
    weights = recip_binomial_weights(k)
    parts = []
    for l1, l2, a in coeff_table(s).nonzero():
        inner = asum(w * s_closed(p - l1, m - l2, r, alt) for r, w in weights)
        parts.append(a * inner)
    return asum(parts)


@precision_cached
def _quadratic(p1: int, s1: int, p2: int, s2: int, m: int, k: int, alt: bool) -> Approx:
    weights = recip_binomial_weights(k)
    parts = []
    for l1, t1, a1 in coeff_table(s1).nonzero():
        for l2, t2, a2 in coeff_table(s2).nonzero():
            inner = asum(
                w * t_closed(p1 - l1, p2 - l2, m - t1 - t2, r, alt) for r, w in weights
            )
            parts.append(a1 * a2 * inner)
    return asum(parts)


def closed_linear(spec: SumSpec) -> Approx:
    """Closed-form value of sum (+/-1)^(n+1) H_n^(p,s) / (n^m C(n+k,k))."""
    if spec.kind != "linear":
        raise DomainError("closed_linear needs a linear spec")
    return _linear(spec.p, spec.s, spec.m, spec.k, spec.alternating)


def closed_quadratic(spec: SumSpec) -> Approx:
    """Closed-form value of the quadratic series described by ``spec``."""
    if spec.kind != "quadratic":
        raise DomainError("closed_quadratic needs a quadratic spec")
    return _quadratic(spec.p, spec.s, spec.p2, spec.s2, spec.m, spec.k, spec.alternating)


def closed_value(spec: SumSpec) -> Approx:
    if spec.kind == "linear":
        return closed_linear(spec)
    return closed_quadratic(spec)
