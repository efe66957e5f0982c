"""High-precision reals carrying an absolute error bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

import mpmath
from mpmath import mpf

__all__ = ["Approx", "to_mpf", "exact", "asum"]

Scalar = Union[int, Fraction, mpf]


def to_mpf(x) -> mpf:
    """Convert int / Fraction / mpf / float to mpf at the working precision."""
    if isinstance(x, Fraction) or isinstance(x, Rational) and not isinstance(x, int):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def _ulp(x: mpf) -> mpf:
    # one rounding at the working precision, relative to |x|
    return abs(x) * mpf(2) ** (1 - mpmath.mp.prec)


@dataclass(frozen=True)
class Approx:
    """A value with a claimed absolute error bound ``err``.

    ``terms`` records how many series terms / function evaluations went
    into the value; it is summed when values are combined.
    """

    value: mpf
    err: mpf = mpf(0)
    terms: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", to_mpf(self.value))
        err = to_mpf(self.err)
        if not mpmath.isfinite(err) or err < 0:
            raise ValueError(f"invalid error bound {err}")
        object.__setattr__(self, "err", err)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other) -> "Approx":
        o = _lift(other)
        v = self.value + o.value
        return Approx(v, self.err + o.err + _ulp(v), self.terms + o.terms)

    __radd__ = __add__

    def __neg__(self) -> "Approx":
        return Approx(-self.value, self.err, self.terms)

    def __sub__(self, other) -> "Approx":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "Approx":
        return _lift(other) + (-self)

    def __mul__(self, other) -> "Approx":
        o = _lift(other)
        v = self.value * o.value
        err = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return Approx(v, err + _ulp(v), self.terms + o.terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Approx":
        if isinstance(other, Approx):
            if abs(other.value) <= other.err:
                raise ZeroDivisionError("divisor interval contains zero")
            inv_v = 1 / other.value
            inv_err = other.err / (abs(other.value) * (abs(other.value) - other.err))
            return self * Approx(inv_v, inv_err + _ulp(inv_v), other.terms)
        return self * Approx(1 / to_mpf(other), _ulp(1 / to_mpf(other)))

    # -- helpers --------------------------------------------------------
    def contains(self, x, slack=0) -> bool:
        return abs(to_mpf(x) - self.value) <= self.err + to_mpf(slack)

    def agrees(self, other: "Approx", tol=0) -> bool:
        o = _lift(other)
        return abs(self.value - o.value) <= self.err + o.err + to_mpf(tol)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return f"{mpmath.nstr(self.value, 20)} ± {mpmath.nstr(self.err, 3)}"


def _lift(x) -> Approx:
    if isinstance(x, Approx):
        return x
    v = to_mpf(x)
    if isinstance(x, int) or isinstance(x, Fraction) and _is_dyadic(x.denominator):
        return Approx(v, 0)
    return Approx(v, _ulp(v))


def _is_dyadic(d: int) -> bool:
    return d & (d - 1) == 0


def exact(x: Scalar) -> Approx:
    """An exactly known (or exactly representable) quantity."""
    return _lift(x)


def asum(items: Iterable[Approx]) -> Approx:
    """Sum of Approx values; the empty sum is exact zero."""
    total = Approx(mpf(0))
    for a in items:
        total = total + a
    return total
