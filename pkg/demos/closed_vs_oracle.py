#!/usr/bin/env python3
"""Walk one series through the reduction and check it by brute force.

Target:  sum_n H_n^(2,2) / (n^3 C(n+2,2))

    python3 demos/closed_vs_oracle.py [--precision 40]
"""

from __future__ import annotations

import argparse

import mpmath

from hhsum.approx import to_mpf
from hhsum import SumSpec, closed_value, coeff_table, configure, recip_binomial_weights
from hhsum.verification import oracle_partial_sum, oracle_series, verify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--precision", type=int, default=30)
    args = ap.parse_args()
    configure(precision_digits=args.precision)

    spec = SumSpec("linear", p=2, s=2, m=3, k=2)
    print(f"series  {spec.id}")

    print("\nH_n^(2,2) = sum a(2,l,j) n^j H_n^(2-l):")
    for l, j, a in coeff_table(2).nonzero():
        print(f"  a(2,{l},{j}) = {a}")

    print("\n1/C(n+2,2) = sum w_r / (n+r):")
    for r, w in recip_binomial_weights(2):
        print(f"  w_{r} = {w}")

    print("\npartial sums (exact rationals):")
    for N in (1, 2, 5, 10, 50):
        print(f"  N={N:<3} {mpmath.nstr(to_mpf(oracle_partial_sum(spec, N)), 15)}")

    closed = closed_value(spec)
    oracle = oracle_series(spec)
    print(f"\nclosed form  {closed}")
    print(f"oracle       {oracle}  ({oracle.terms} terms)")
    print(f"report       {verify(spec).line()}")


if __name__ == "__main__":
    main()
