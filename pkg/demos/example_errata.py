#!/usr/bin/env python3
"""Printed example values against the oracle and the closed-form machinery.

Two of the three printed example evaluations do not match their series;
the machinery value does.  Output is the examples suite as a table.

    python3 demos/example_errata.py [--json]
"""

from __future__ import annotations

import argparse

from hhsum.verification.reports import reports_to_json
from hhsum.verification.suites import examples_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    reports = examples_suite(1e-8)
    if args.json:
        print(reports_to_json(reports))
        return
    width = max(len(r.id) for r in reports)
    print(f"{'id':<{width}}  {'value':>16}  {'oracle':>16}  status")
    for r in reports:
        print(f"{r.id:<{width}}  {float(r.closed.value):>16.12f}  {float(r.oracle.value):>16.12f}  {r.status}")


if __name__ == "__main__":
    main()
