"""Recurrence relations among Gordon integrals with shifted parameters.

Each relation is a table of (coefficient, shift) terms. A shift is
(Δb, Δb', Δc, Δj, Δq) with Δq acting on the signed offset q, so the second
factor's denominator c + q moves by Δc + Δq. Relations are checked by
evaluating every term with ``eval_auto`` and comparing the two sides.

Several relations are listed in more than one reading. The ``printed``
reading is kept so that the check records its failure; the ``corrected``
reading is the one adopted for verification.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

from .errors import GordonError, PreconditionError, ShiftedDomainError
from .evaluate import _domain, eval_auto
from .params import GordonParams
from .reports import IdentityReport
from .special import DEFAULT_CONTROL, SeriesControl, pochhammer

RECURRENCE_IDS = ("A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8")


@dataclass(frozen=True)
class Term:
    coef: Callable[[GordonParams], float]
    shift: tuple[float, float, float, int, int]


@dataclass(frozen=True)
class RecurrenceId:
    id: str
    reading: str
    lhs: Term
    rhs: tuple[Term, ...]
    requires: Callable[[GordonParams], str | None] = lambda P: None
    corrected: bool = False
    expect_fail: bool = False
    adopted: bool = True

    @property
    def arity(self) -> int:
        return 1 + len(self.rhs)

    @property
    def label(self) -> str:
        return f"{self.id}[{self.reading}]"


def _one(P):
    return 1.0


def _T(coef, db=0.0, dbp=0.0, dc=0.0, dj=0, dq=0):
    return Term(coef, (db, dbp, dc, dj, dq))


def _need_w(P):
    return None if abs(P.w) >= 1e-6 else "needs |w| >= 1e-6"


def _need_b(P):
    return None if P.b != 0.0 else "needs b != 0"


def _need_c(P):
    return None if P.c != 0.0 else "needs c != 0"


def _need_bc(P):
    return _need_b(P) or _need_c(P)


def _need_c1(P):
    return None if P.c not in (0.0, 1.0) else "needs c != 0, 1"


def _need_z(P):
    if P.q != 0:
        return "needs q = 0"
    return None if abs(P.z) >= 1e-6 else "needs |z| >= 1e-6"


def _a3(k):
    def lead(P):
        return pochhammer(P.c + 1 - k, k) / P.w ** k

    rhs = tuple(_T(lambda P, m=m: lead(P) * (-1) ** m * math.comb(k, m), db=1 - m, dc=1 - k, dq=k)
                for m in range(k + 1))
    return RecurrenceId("A3", f"k={k}", _T(_one, db=1, dc=1), rhs, _need_w)


def _a8(reading, first, **kw):
    rhs = (_T(lambda P: first(P) / P.z, dbp=1, dj=-1),
           _T(lambda P: (P.b_prime - P.c) / P.z, dbp=-1, dj=-1),
           _T(lambda P: (P.c - 2 * P.b_prime) / P.z, dj=-1))
    return RecurrenceId("A8", reading, _T(_one), rhs, _need_z, **kw)


RELATIONS: tuple[RecurrenceId, ...] = (
    RecurrenceId("A1", "printed", _T(_one, db=1, dc=1),
                 (_T(lambda P: P.c / P.w, db=1), _T(lambda P: -P.c / P.w)),
                 _need_w, expect_fail=True, adopted=False),
    RecurrenceId("A1", "corrected", _T(_one, db=1, dc=1, dq=-1),
                 (_T(lambda P: P.c / P.w, db=1), _T(lambda P: -P.c / P.w)),
                 _need_w, corrected=True),
    RecurrenceId("A2", "printed", _T(_one, db=1),
                 (_T(lambda P: (P.c - P.b) / P.b, db=-1), _T(lambda P: P.w / P.b, dj=1),
                  _T(lambda P: (2 * P.b - P.c) / P.b)), _need_b),
    _a3(2),
    RecurrenceId("A4", "printed", _T(_one),
                 (_T(lambda P: P.b / P.c, db=1, dc=1, dj=-1, dq=-1),
                  _T(lambda P: -(P.b - P.c) / P.c, dc=1, dj=-1, dq=-1)), _need_c),
    RecurrenceId("A5", "printed", _T(_one, db=1),
                 (_T(lambda P: P.b / P.c, db=1, dc=1, dj=1, dq=-1),
                  _T(lambda P: P.w / P.c, db=1, dc=1, dq=-1),
                  _T(lambda P: -(P.b - P.c) / P.c, dc=1, dj=1, dq=-1)),
                 _need_c, expect_fail=True, adopted=False),
    RecurrenceId("A5", "corrected", _T(_one, db=1),
                 (_T(lambda P: P.b / P.c, db=1, dc=1, dj=-1, dq=-1),
                  _T(lambda P: P.w / P.c, db=1, dc=1, dq=-1),
                  _T(lambda P: -(P.b - P.c) / P.c, dc=1, dj=-1, dq=-1)),
                 _need_c, corrected=True),
    RecurrenceId("A6", "printed", _T(_one, db=1),
                 (_T(_one), _T(lambda P: P.w / P.b, dj=1),
                  _T(lambda P: -P.w * (P.b - P.c) / (P.c * P.b), dc=1, dq=-1)),
                 _need_bc, expect_fail=True, adopted=False),
    RecurrenceId("A6", "corrected", _T(_one, db=1),
                 (_T(_one), _T(lambda P: P.w / P.b, dj=1),
                  _T(lambda P: P.w * (P.b - P.c) / (P.c * P.b), dc=1, dq=-1)),
                 _need_bc, corrected=True),
    RecurrenceId("A7", "printed", _T(_one, dc=-1),
                 (_T(_one, dj=-1), _T(lambda P: P.w / (P.c - 1), dq=-1),
                  _T(lambda P: P.w * (P.b - P.c) / (P.c * (1 - P.c)), dc=1, dj=-1, dq=-2)),
                 _need_c1, expect_fail=True, adopted=False),
    RecurrenceId("A7", "corrected", _T(_one, dc=-1),
                 (_T(_one, dj=-1, dq=-1), _T(lambda P: P.w / (P.c - 1), dq=-1),
                  _T(lambda P: P.w * (P.b - P.c) / (P.c * (P.c - 1)), dc=1, dj=-1, dq=-2)),
                 _need_c1, corrected=True),
    _a8("b'+1-c", lambda P: P.b_prime + 1 - P.c, expect_fail=True, adopted=False),
    _a8("b'-c", lambda P: P.b_prime - P.c, expect_fail=True, adopted=False),
    _a8("b'", lambda P: P.b_prime, corrected=True),
)


def relation(rid: str, reading: str | None = None) -> RecurrenceId:
    """Look up a relation; without ``reading`` the adopted one is returned."""
    for r in RELATIONS:
        if r.id == rid and (r.reading == reading if reading else r.adopted):
            return r
    raise KeyError(f"unknown relation {rid!r} reading {reading!r}")


def readings(rid: str) -> list[RecurrenceId]:
    return [r for r in RELATIONS if r.id == rid]


@lru_cache(maxsize=65536)
def _cached_eval(P: GordonParams, ctrl: SeriesControl) -> float:
    return eval_auto(P, ctrl).value


def _shift(P, shift):
    db, dbp, dc, dj, dq = shift
    return P.shifted(db=db, dbp=dbp, dc=dc, dj=dj, dq=dq)


def check_recurrence(rid: str | RecurrenceId, params: GordonParams,
                     ctrl: SeriesControl = DEFAULT_CONTROL, tol: float = 1e-9) -> IdentityReport:
    """Residual of one relation at one point.

    Raises PreconditionError when a coefficient is singular at ``params``
    and ShiftedDomainError when a shifted term leaves the domain.
    """
    rel = relation(rid) if isinstance(rid, str) else rid
    why = rel.requires(params)
    if why:
        raise PreconditionError(f"{rel.label}: {why}")
    terms = [("lhs", rel.lhs)] + [(f"rhs[{i}]", t) for i, t in enumerate(rel.rhs)]
    shifted = []
    for name, t in terms:
        try:
            Q = _shift(params, t.shift)
            _domain(Q)
        except (GordonError, ValueError) as exc:
            raise ShiftedDomainError(f"{rel.label} term {name}: {exc}") from None
        shifted.append(Q)
    lhs = rel.lhs.coef(params) * _cached_eval(shifted[0], ctrl)
    parts = [t.coef(params) * _cached_eval(Q, ctrl) for t, Q in zip(rel.rhs, shifted[1:])]
    rhs = math.fsum(parts)
    scale = max(abs(x) for x in parts)
    notes = f"largest rhs term {scale:.3e}" if scale > 1e3 * max(abs(rhs), 1e-300) else ""
    return IdentityReport.build(rel.label, params.as_dict(), lhs, rhs, tol, notes=notes,
                                corrected=rel.corrected, expect_fail=rel.expect_fail)


def default_lattice() -> list[GordonParams]:
    """81 points: λ, c, (w/λ, z/λ) and (b, b', j, p) each take three values.

    The ranges are λ ∈ {1, 2, 4}, c ∈ {1.3, 2.5, 3.7}, w, z ∈ {±0.2λ, ±0.05λ},
    j ∈ {1, 2}, p ∈ {0, 1} and b, b' ∈ {0.4, 1.1}; the last two groups are
    sampled by three fixed combinations instead of the full product.
    """
    lams = (1.0, 2.0, 4.0)
    cs = (1.3, 2.5, 3.7)
    wz = ((0.2, -0.05), (-0.2, 0.05), (0.05, 0.2))
    rest = ((0.4, 1.1, 1, 0), (1.1, 0.4, 2, 1), (0.4, 0.4, 2, 0))
    out = []
    for lam, c, (fw, fz), (b, bp, j, p) in itertools.product(lams, cs, wz, rest):
        out.append(GordonParams(b, bp, c, j, p, 1, lam, fw * lam, fz * lam))
    return out


def sweep_recurrences(grid: Iterable[GordonParams], ctrl: SeriesControl = DEFAULT_CONTROL,
                      tol: float = 1e-9, ids: Iterable[str] = RECURRENCE_IDS,
                      all_readings: bool = False) -> list[IdentityReport]:
    """One report per (point, relation), in grid order then relation order.

    With ``all_readings`` the printed variants that are known to fail are
    included as well, so their failure is recorded rather than hidden.
    """
    wanted = set(ids)
    rels = [r for r in RELATIONS if r.id in wanted and (all_readings or r.adopted)]
    out = []
    for P in grid:
        for rel in rels:
            try:
                out.append(check_recurrence(rel, P, ctrl, tol))
            except GordonError as exc:
                out.append(IdentityReport.inapplicable(rel.label, P.as_dict(),
                                                       f"{exc.code}: {exc}"))
    return out


def summarize(reports: Iterable[IdentityReport]) -> dict[str, int]:
    counts = Counter(r.status for r in reports)
    return {k: counts.get(k, 0) for k in ("pass", "fail", "failed-as-printed", "inapplicable")}


def pass_fraction(reports: Iterable[IdentityReport], label: str) -> tuple[float, int]:
    """Fraction of applicable reports for ``label`` that pass, and their count."""
    rs = [r for r in reports if r.identity == label and r.status != "inapplicable"]
    if not rs:
        return math.nan, 0
    return sum(r.passed for r in rs) / len(rs), len(rs)
