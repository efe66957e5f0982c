"""Verification reports and the closed-form-versus-oracle check."""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

import mpmath
from mpmath import mpf

from .. import config as _config
from ..approx import Approx, to_mpf
from ..closed_forms import SumSpec, closed_value
from ..errors import DomainError
from .oracle import OracleWarning, oracle_series

__all__ = [
    "VERIFIED",
    "DISCREPANCY",
    "DISCREPANCY_EXPECTED",
    "VerificationReport",
    "compare",
    "skipped",
    "verify",
    "reports_to_json",
    "reports_to_csv",
    "exit_code",
]

VERIFIED = "VERIFIED"
DISCREPANCY = "DISCREPANCY"
DISCREPANCY_EXPECTED = "DISCREPANCY-EXPECTED"
JSON_FIELDS = (
    "id",
    "params",
    "closed_value",
    "closed_err",
    "oracle_value",
    "oracle_err",
    "abs_diff",
    "tolerance",
    "terms_used",
    "status",
)
CSV_COLUMNS = ("id", "params", "closed", "oracle", "diff", "tol", "status")


@dataclass(frozen=True)
class VerificationReport:
    id: str
    params: Dict[str, Any]
    closed: Optional[Approx]
    oracle: Optional[Approx]
    abs_diff: Optional[mpf]
    tolerance: float
    terms_used: int
    status: str
    note: str = field(default="", compare=False)

    @property
    def ok(self) -> bool:
        return self.status != DISCREPANCY

    def to_dict(self) -> Dict[str, Any]:
        digits = _config.get_config().precision_digits

        def val(a: Optional[Approx]):
            return None if a is None else mpmath.nstr(a.value, digits)

        def err(a: Optional[Approx]):
            return None if a is None else float(a.err)

        return {
            "id": self.id,
            "params": self.params,
            "closed_value": val(self.closed),
            "closed_err": err(self.closed),
            "oracle_value": val(self.oracle),
            "oracle_err": err(self.oracle),
            "abs_diff": None if self.abs_diff is None else float(self.abs_diff),
            "tolerance": self.tolerance,
            "terms_used": self.terms_used,
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def csv_row(self) -> List[str]:
        d = self.to_dict()
        params = ";".join(f"{k}={v}" for k, v in self.params.items())
        return [
            self.id,
            params,
            d["closed_value"] or "",
            d["oracle_value"] or "",
            "" if self.abs_diff is None else mpmath.nstr(self.abs_diff, 3),
            repr(self.tolerance),
            self.status,
        ]

    def line(self) -> str:
        """One human-readable line."""
        digits = _config.get_config().precision_digits
        parts = [f"{self.status:<20} {self.id}"]
        if self.closed is not None:
            parts.append(f"closed={mpmath.nstr(self.closed.value, digits)} ±{mpmath.nstr(self.closed.err, 2)}")
        if self.oracle is not None:
            parts.append(f"oracle={mpmath.nstr(self.oracle.value, digits)} ±{mpmath.nstr(self.oracle.err, 2)}")
        if self.abs_diff is not None:
            parts.append(f"diff={mpmath.nstr(self.abs_diff, 3)}")
        if self.note:
            parts.append(f"[{self.note}]")
        return "  ".join(parts)


def compare(
    id: str,
    params: Dict[str, Any],
    closed: Approx,
    oracle: Approx,
    tol: float,
    *,
    terms_used: Optional[int] = None,
    expected_discrepancy: bool = False,
    note: str = "",
) -> VerificationReport:
    """Build a report from two values.

    VERIFIED needs |closed - oracle| <= tol + both errors, and both error
    bounds no larger than tol (a tolerance below what either side can
    certify is not a verification).
    """
    diff = abs(closed.value - oracle.value)
    agree = diff <= to_mpf(tol) + closed.err + oracle.err
    resolved = closed.err <= tol and oracle.err <= tol
    if agree and resolved:
        status = VERIFIED
    else:
        status = DISCREPANCY_EXPECTED if expected_discrepancy else DISCREPANCY
        if agree and not note:
            note = "tolerance below certified error"
    return VerificationReport(
        id,
        params,
        closed,
        oracle,
        diff,
        tol,
        oracle.terms if terms_used is None else terms_used,
        status,
        note,
    )


def skipped(id: str, params: Dict[str, Any], reason: str, tol: float = 0.0) -> VerificationReport:
    return VerificationReport(id, params, None, None, None, tol, 0, f"SKIPPED({reason})", reason)


def verify(spec: SumSpec, tol: Optional[float] = None, max_terms: Optional[int] = None) -> VerificationReport:
    """Closed form against oracle for one spec; domain errors become SKIPPED."""
    tol = _config.get_config().default_tolerance if tol is None else tol
    if not isinstance(spec, SumSpec):
        raise TypeError("verify needs a SumSpec")
    try:
        closed = closed_value(spec)
    except DomainError as exc:
        return skipped(spec.id, spec.params(), str(exc), tol)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OracleWarning)
        oracle = oracle_series(spec, tol, max_terms)
    return compare(spec.id, spec.params(), closed, oracle, tol)


def verify_params(tol: Optional[float] = None, max_terms: Optional[int] = None, **fields) -> VerificationReport:
    """verify() for raw parameters: an invalid spec becomes a SKIPPED report."""
    try:
        spec = SumSpec(**fields)
    except DomainError as exc:
        params = {k: v for k, v in fields.items() if v is not None}
        name = f"{fields.get('kind', '?')}({', '.join(f'{k}={v}' for k, v in params.items() if k != 'kind')})"
        return skipped(name, params, str(exc), tol or _config.get_config().default_tolerance)
    return verify(spec, tol, max_terms)


def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def exit_code(reports: Iterable[VerificationReport]) -> int:
    """0 when nothing disagrees, 1 if any report is a plain DISCREPANCY."""
    return 1 if any(r.status == DISCREPANCY for r in reports) else 0
