#!/usr/bin/env python3
"""Log-trigonometric integrals by tanh-sinh quadrature.

Shows the classical evaluations, the intermediate integrals that feed the
two combined identities, and why the denominator has to be 5 - 4 cos(phi):
with 5 - 4 sin(phi) neither identity survives quadrature.

    python3 demos/integrals.py
"""

from __future__ import annotations

from hhsum.verification.quadrature import CATALOG
from hhsum.verification.suites import integrals_suite


def main() -> None:
    for r in integrals_suite(1e-8):
        if r.closed is None:
            print(f"{r.id:<44} {r.status}")
            continue
        iid = r.params["integrand"]
        print(f"{r.id:<44} {CATALOG[iid].formula:<34} rhs={float(r.closed.value): .12f} "
              f"quad={float(r.oracle.value): .12f}  {r.status}")


if __name__ == "__main__":
    main()
