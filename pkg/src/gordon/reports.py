"""Residual record shared by the identity, limit and recurrence checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

ABS_FLOOR = 1e-300


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    point: dict
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    passed: bool
    tol: float
    notes: str = ""
    corrected: bool = False
    status: str = field(default="")

    @classmethod
    def build(cls, identity, point, lhs, rhs, tol, abs_floor=ABS_FLOOR,
              notes="", corrected=False, expect_fail=False) -> "IdentityReport":
        lhs, rhs = float(lhs), float(rhs)
        diff = abs(lhs - rhs)
        rel = diff / max(abs(lhs), abs(rhs), ABS_FLOOR)
        if math.isnan(diff):
            rel = math.inf
        ok = rel <= tol or diff <= abs_floor
        if expect_fail:
            status = "failed-as-printed" if not ok else "pass"
        else:
            status = "pass" if ok else "fail"
        return cls(identity, dict(point), lhs, rhs, diff, rel, ok, tol, notes, corrected, status)

    @classmethod
    def inapplicable(cls, identity, point, notes) -> "IdentityReport":
        return cls(identity, dict(point), math.nan, math.nan, math.nan, math.nan,
                   False, math.nan, notes, False, "inapplicable")

    @property
    def pass_(self) -> bool:
        return self.passed
