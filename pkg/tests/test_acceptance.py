"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line; the lines are printed in the
pytest terminal summary and by running this file directly:

    python3 tests/test_acceptance.py
"""

import math
import subprocess
import sys
import time

import mpmath as mp
import numpy as np
import pytest

from gordon.deviations import BY_KEY
from gordon.errors import GordonError
from gordon.evaluate import eval_2f1_double_sum, eval_auto, eval_f1_sum, eval_f2_series
from gordon.identities import IDENTITY_IDS, orthogonality_suite, run_identity_suite
from gordon.params import GordonParams
from gordon.polynomial import PolyGordonParams, hermite_gordon, poly_gordon
from gordon.quadrature import integrate_gordon
from gordon.relations import default_lattice, pass_fraction, relation, sweep_recurrences
from gordon.sampling import random_points
from gordon.special import W_CANCELLATION

RESULTS: dict[int, str] = {}


def record(num, title, ok, detail):
    RESULTS[num] = f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title}: {detail}"
    return ok


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def criterion_1():
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(50):
        alpha, lam = float(rng.uniform(0.5, 20.0)), float(rng.uniform(0.1, 10.0))
        j = int(rng.integers(0, 4))
        c = alpha - j
        if c <= 0:
            c, j = alpha, 0
        got = eval_auto(GordonParams(0.0, 0.0, c, j, 0, 1, lam, 0.0, 0.0)).value
        with mp.workdps(30):
            a = mp.mpf(c) + j
            ref = float(mp.gamma(a) / mp.mpf(lam) ** a)
        worst = max(worst, rel(got, ref))
    return record(1, "Gamma baseline, 50 points", worst <= 1e-12, f"max rel {worst:.2e} (tol 1e-12)")


def _eq39_points():
    rng = np.random.default_rng(202)
    out = []
    while len(out) < 50:
        b, c = float(rng.uniform(-2.0, 3.0)), float(rng.uniform(0.5, 5.0))
        lam = float(rng.uniform(0.5, 4.0))
        z = float(rng.uniform(-0.95, 0.95)) * lam
        out.append(GordonParams(0.0, b, c, 0, 0, 1, lam, 0.0, z))
    return out


def criterion_2():
    worst_cf = worst_or = 0.0
    for P in _eq39_points():
        got = eval_auto(P).value
        b, c, lam, z = P.b_prime, P.c, P.lam, P.z
        closed = lam ** (b - c) * math.gamma(c) / (lam - z) ** b
        worst_cf = max(worst_cf, rel(got, closed))
        worst_or = max(worst_or, rel(got, integrate_gordon(P).value))
    ok = worst_cf <= 1e-10 and worst_or <= 1e-8
    return record(2, "Closed form 39, 50 points", ok,
                  f"max rel vs closed form {worst_cf:.2e} (tol 1e-10), vs oracle {worst_or:.2e} (tol 1e-8)")


POINTS_200 = random_points(7, 200, ratio=0.8, j_ge_p=True)


def criterion_3():
    worst = worst_flagged = 0.0
    flagged = 0
    bad = []
    for i, P in enumerate(POINTS_200):
        rs = [f(P) for f in (eval_f2_series, eval_f1_sum, eval_2f1_double_sum)]
        cancel = any(W_CANCELLATION in r.warnings for r in rs)
        d = max(rel(a.value, b.value) for k, a in enumerate(rs) for b in rs[k + 1:])
        if cancel:
            flagged += 1
            worst_flagged = max(worst_flagged, d)
        else:
            worst = max(worst, d)
        if d > (1e-7 if cancel else 1e-9):
            bad.append(i)
    return record(3, "Cross-strategy agreement, 200 points", not bad,
                  f"max pairwise rel {worst:.2e} (tol 1e-9); {flagged} cancellation-flagged points, "
                  f"max {worst_flagged:.2e} (tol 1e-7); failures {len(bad)}")


def criterion_4():
    worst = 0.0
    bad = 0
    for P in POINTS_200:
        a, q = eval_auto(P).value, integrate_gordon(P).value
        d = abs(a - q)
        worst = max(worst, rel(a, q))
        if d > max(1e-7 * max(abs(a), abs(q)), 1e-12):
            bad += 1
    return record(4, "Oracle agreement, 200 points", bad == 0,
                  f"max rel {worst:.2e} (tol max(rel 1e-7, abs 1e-12)); failures {bad}")


def criterion_5():
    reports = orthogonality_suite(max_degree=10)
    diag = [r for r in reports if r.point["n"] == r.point["m"]]
    off = [r for r in reports if r.point["n"] != r.point["m"]]
    ok = all(r.status == "pass" for r in reports)
    worst_diag = max(r.rel_residual for r in diag)
    return record(5, "Orthogonality 64 and 85, n, m <= 10", ok,
                  f"{len(reports)} checks; max diagonal rel {worst_diag:.2e} (tol 1e-12); "
                  f"max off-diagonal {max(r.abs_residual for r in off):.2e}")


def criterion_6():
    v53 = poly_gordon(PolyGordonParams(1, 1, 1.0, 1, 0, 1, 1.0, 1.0, 1.0), form="53").value
    v72 = poly_gordon(PolyGordonParams(1, 0, 1.0, 1, 0, 1, 1.0, 0.0, 1.0), form="72").value
    v89 = hermite_gordon(PolyGordonParams(0, 0, 0.5, 0, 0, 1, 4.0, 4.0, 4.0)).value
    errs = (abs(v53 - 3.0), abs(v72 + 1.0), abs(v89 - math.sqrt(math.pi) / 2))
    return record(6, "Anchors 53, 72, 89", max(errs) <= 1e-12,
                  f"53 -> {v53!r}, 72 -> {v72!r}, 89 -> {v89!r} (tol 1e-12)")


def eq70_combinations():
    """20 integer (n, j, p, sign) with 0 <= j - q < n, q = sign * p."""
    out = []
    for n in range(1, 5):
        for p in range(3):
            for sign in (1, -1):
                if sign == -1 and p == 0:
                    continue
                q = sign * p
                out.extend((n, j, p, sign) for j in range(q, q + n))
    return out[:20]


def criterion_7():
    combos = eq70_combinations()
    zeros = 0
    for n, j, p, sign in combos:
        r = poly_gordon(PolyGordonParams(n, 0, 2.5, j, p, sign, 1.5, 0.0, 1.5), form="70")
        zeros += r.value == 0.0
    # outside 0 <= j - q the value is finite and nonzero; see the SPECIAL-70 ledger entry
    P = PolyGordonParams(3, 0, 2.5, 0, 2, 1, 1.5, 0.0, 1.5)
    neg = poly_gordon(P, form="70").value
    neg_ok = neg != 0.0 and rel(neg, integrate_gordon(P.to_gordon()).value) < 1e-9
    return record(7, "Vanishing branch 70, 20 combinations", zeros == len(combos) == 20 and neg_ok,
                  f"{zeros}/{len(combos)} exact zeros for 0 <= j-q < n; j-q < 0 gives "
                  f"{neg:.6g} (nonzero, matches oracle; ledgered as {BY_KEY['SPECIAL-70'].status})")


def criterion_8():
    parts = []
    ok = True
    for which in IDENTITY_IDS:
        reps = run_identity_suite([which], seed=2024, count=25)
        passed = sum(r.status == "pass" for r in reps)
        if which == "Eq88":
            ok &= all(r.point["n"] <= 4 for r in reps)
        ok &= passed == len(reps) >= 25
        parts.append(f"{which} {passed}/{len(reps)}")
    return record(8, "Identity suites, 25 points each", ok,
                  ", ".join(parts) + " (rel 1e-9; Eq88 and Eq64-limit 1e-6)")


def criterion_9():
    grid = default_lattice()
    reports = sweep_recurrences(grid, all_readings=True)
    parts = []
    ok = True
    for rid in ("A1", "A2", "A3", "A4", "A5", "A6", "A7"):
        label = relation(rid).label
        passed = sum(r.identity == label and r.status == "pass" for r in reports)
        ok &= passed / len(grid) >= 0.95
        parts.append(f"{label} {passed}/{len(grid)}")
    a8 = [r for r in reports if r.identity.startswith("A8[")]
    candidates = {"A8[b'+1-c]", "A8[b'-c]"}
    cand_pass = any(pass_fraction(reports, c)[0] >= 0.95 for c in candidates)
    ledgered = BY_KEY["A8"].status == "failed-as-printed"
    unmarked = [r for r in reports if r.status not in ("pass", "failed-as-printed", "inapplicable")]
    ok &= (cand_pass or ledgered) and not unmarked and bool(a8)
    a8_state = "candidate passes" if cand_pass else "both candidates failed-as-printed, ledgered"
    return record(9, "Recurrence lattice, 81 points", ok,
                  ", ".join(parts) + f" (>= 95% at rel 1e-9); A8: {a8_state}; unmarked reports {len(unmarked)}")


def criterion_10():
    cmd = [sys.executable, "-m", "gordon", "verify", "--scope", "all", "--seed", "7"]
    t0 = time.perf_counter()
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    dt = time.perf_counter() - t0
    same = a.stdout == b.stdout and a.returncode == b.returncode
    return record(10, "Determinism of verify --scope all --seed 7", same and len(a.stdout) > 0,
                  f"{len(a.stdout)} bytes, identical={same}, exit {a.returncode}, {dt:.1f} s for two runs")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"criterion_{i + 1}" for i in range(len(CRITERIA))])
def test_criterion(crit):
    try:
        ok = crit()
    except GordonError as exc:
        num = CRITERIA.index(crit) + 1
        record(num, crit.__name__, False, f"{exc.code}: {exc}")
        raise
    assert ok, RESULTS[CRITERIA.index(crit) + 1]


if __name__ == "__main__":
    failed = 0
    for crit in CRITERIA:
        failed += not crit()
        print(RESULTS[CRITERIA.index(crit) + 1], flush=True)
    raise SystemExit(1 if failed else 0)
