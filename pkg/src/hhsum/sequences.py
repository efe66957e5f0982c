"""Exact harmonic-type sequences and the coefficient table that writes a
generalized hyperharmonic number as a combination of ordinary ones:

    H_n^(p,r) = sum_{m=0}^{r-1} sum_{j=0}^{r-1-m} a(r,m,j) n^j H_n^(p-m)

Orders p <= 0 mean the power sum 1^|p| + ... + n^|p|.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .exact import bernoulli_plus, binomial, faulhaber_sum

__all__ = [
    "harmonic",
    "harmonic_alt",
    "hyperharmonic",
    "hyperharmonic_row",
    "CoeffTable",
    "coeff_table",
    "hyperharmonic_via_coeffs",
]


def harmonic(n: int, p: int) -> Fraction:
    """H_n^(p) = sum_{j<=n} j^-p; for p <= 0 the power sum via Faulhaber."""
    if n < 0:
        raise ValueError("harmonic requires n >= 0")
    if p <= 0:
        return faulhaber_sum(n, -p)
    return _harmonic_list(p, n)[n]


_H_LISTS: Dict[int, List[Fraction]] = {}
_H_LOCK = threading.Lock()


def _harmonic_list(p: int, n: int) -> List[Fraction]:
    values = _H_LISTS.get(p)
    if values is None or len(values) <= n:
        with _H_LOCK:
            values = _H_LISTS.setdefault(p, [Fraction(0)])
            acc = values[-1]
            for j in range(len(values), n + 1):
                acc += Fraction(1, j**p)
                values.append(acc)
    return values


def harmonic_alt(n: int, m: int) -> Fraction:
    """Alternating harmonic number sum_{j<=n} (-1)^(j-1) / j^m."""
    if n < 0 or m < 1:
        raise ValueError("harmonic_alt requires n >= 0 and m >= 1")
    return sum((Fraction((-1) ** (j - 1), j**m) for j in range(1, n + 1)), Fraction(0))


def hyperharmonic_row(n: int, p: int, r: int) -> List[Fraction]:
    """[H_0^(p,r), ..., H_n^(p,r)] by r-fold prefix summation."""
    if n < 0 or p < 1 or r < 1:
        raise ValueError("hyperharmonic requires n >= 0, p >= 1, r >= 1")
    row = list(_harmonic_list(p, n)[: n + 1])
    for _ in range(r - 1):
        acc = Fraction(0)
        nxt = [Fraction(0)]
        for j in range(1, n + 1):
            acc += row[j]
            nxt.append(acc)
        row = nxt
    return row


@lru_cache(maxsize=4096)
def hyperharmonic(n: int, p: int, r: int) -> Fraction:
    """H_n^(p,r) = sum_{j=1}^n H_j^(p,r-1), with H_n^(p,1) = H_n^(p)."""
    return hyperharmonic_row(n, p, r)[n]


@dataclass(frozen=True)
class CoeffTable:
    """Exact coefficients a(r, m, j) for 0 <= m <= r-1, 0 <= j <= r-1-m."""

    order: int
    entries: Dict[Tuple[int, int], Fraction] = field(repr=False)

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        return self.entries[key]

    def items(self) -> Iterator[Tuple[Tuple[int, int], Fraction]]:
        for key in sorted(self.entries):
            yield key, self.entries[key]

    def nonzero(self) -> Iterator[Tuple[int, int, Fraction]]:
        for (m, j), a in self.items():
            if a:
                yield m, j, a

    def as_dict(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self.entries)


def _d_coeff(r: int, m: int, j: int, y: int) -> Fraction:
    lo = max(0, m - y - 1)
    total = Fraction(0)
    for ell in range(lo, j + 1):
        total += (
            Fraction(binomial(j + 1, j - ell), j + 1)
            * bernoulli_plus(j - ell)
            * binomial(ell + 1, m - y)
            * (-1) ** (1 + ell - m + y)
        )
    return total


def _next_order(prev: Dict[Tuple[int, int], Fraction], r: int) -> Dict[Tuple[int, int], Fraction]:
    """Table of order r+1 from the table of order r."""
    out: Dict[Tuple[int, int], Fraction] = {}
    out[(r, 0)] = -sum(
        (prev[(m, r - m - 1)] / (r - m) for m in range(r)), Fraction(0)
    )
    for m in range(r):
        for ell in range(1, r - m + 1):
            acc = Fraction(0)
            for j in range(ell - 1, r - m):
                acc += (
                    prev[(m, j)]
                    / (j + 1)
                    * binomial(j + 1, j - ell + 1)
                    * bernoulli_plus(j - ell + 1)
                )
            out[(m, ell)] = acc
        acc = Fraction(0)
        for y in range(m + 1):
            for j in range(max(0, m - y - 1), r - y):
                acc += prev[(y, j)] * _d_coeff(r, m, j, y)
        out[(m, 0)] = -acc
    return out


_TABLES: List[Dict[Tuple[int, int], Fraction]] = [{(0, 0): Fraction(1)}]
_T_LOCK = threading.Lock()


def coeff_table(r: int) -> CoeffTable:
    """Coefficient table of order r, built incrementally from a(1,0,0) = 1."""
    if r < 1:
        raise ValueError("coeff_table requires r >= 1")
    if len(_TABLES) < r:
        with _T_LOCK:
            while len(_TABLES) < r:
                _TABLES.append(_next_order(_TABLES[-1], len(_TABLES)))
    return CoeffTable(r, dict(_TABLES[r - 1]))


def hyperharmonic_via_coeffs(n: int, p: int, r: int) -> Fraction:
    """H_n^(p,r) evaluated through the coefficient table."""
    if n < 0 or p < 1 or r < 1:
        raise ValueError("hyperharmonic requires n >= 0, p >= 1, r >= 1")
    total = Fraction(0)
    for m, j, a in coeff_table(r).nonzero():
        total += a * Fraction(n) ** j * harmonic(n, p - m)
    return total
