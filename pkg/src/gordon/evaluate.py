"""Evaluation of J_c^{j(±p)}(b, b'; λ, w, z).

Three general strategies (the F2 series, a finite sum of F1 values and a
finite double sum of 2F1 values), a catalog of closed forms for special
parameter patterns, and ``eval_auto`` which tries them in a fixed order.

Notation used throughout: q = sign * p, α = c + j, cq = c + q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .appell import (
    AppellF1Params, AppellF2Params, appell_f1, appell_f2_double,
    appell_f2_single_sum, combine,
)
from .errors import (
    AllStrategiesFailed, DivergenceError, DomainError, GordonError, NotApplicable,
    PoleError, PreconditionError,
)
from .params import GordonParams
from .special import (
    DEFAULT_CONTROL, EvalResult, SeriesControl, gamma_prefactor, hyp1f1, hyp2f1,
    hyp_pfq, is_nonpositive_integer, pochhammer,
)

__all__ = [
    "GordonParams", "StrategyApplicability", "validate", "eval_f2_series",
    "eval_f1_sum", "eval_2f1_double_sum", "eval_special", "eval_auto",
    "all_strategies", "whittaker_m", "SPECIAL_IDS", "EXPLICIT_IDS",
]


@dataclass(frozen=True)
class StrategyApplicability:
    strategy: str
    applicable: bool
    reason: str


# ---------------------------------------------------------------- helpers

def _domain(P: GordonParams):
    if not P.lam > 0:
        raise DomainError("lambda must be positive")
    if not P.alpha > 0:
        raise DomainError("c + j must be positive")
    if is_nonpositive_integer(P.c) and not (P.b_terminates and -P.b <= -P.c or P.w == 0.0):
        raise PoleError(f"c = {P.c} is a pole of the first 1F1")
    if is_nonpositive_integer(P.cq) and not (P.bp_terminates and -P.b_prime <= -P.cq or P.z == 0.0):
        raise PoleError(f"c+q = {P.cq} is a pole of the second 1F1")


def _finite(terms, strategy):
    """Combine (coefficient, EvalResult) pairs."""
    return combine(terms, strategy)


def _exact_scalar(value, strategy):
    return EvalResult(value, 4 * 2.220446049250313e-16 * abs(value), strategy, 1, (), 1.0, True)


def _trivial_first(P):
    return P.b == 0.0 or P.w == 0.0


def _trivial_second(P):
    return P.b_prime == 0.0 or P.z == 0.0


def _den_ok(x, n, label):
    if pochhammer(x, n) == 0.0:
        raise PreconditionError(f"({label})_k vanishes for some k <= {n}")


def _need(cond, msg="pattern does not match"):
    if not cond:
        raise NotApplicable(msg)


# ------------------------------------------------------ general strategies

def eval_f2_series(P: GordonParams, ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Γ(α)/λ^α F2(α; b, b'; c, cq; w/λ, z/λ)."""
    _domain(P)
    f2 = AppellF2Params(P.alpha, P.b, P.b_prime, P.c, P.cq, P.w / P.lam, P.z / P.lam)
    if P.strictly_convergent or f2.both_terminate:
        r = appell_f2_double(f2, ctrl)
    elif (P.b_terminates or P.w == 0.0) and abs(P.z) < P.lam:
        r = appell_f2_single_sum(f2, ctrl)
    elif (P.bp_terminates or P.z == 0.0) and abs(P.w) < P.lam:
        swapped = AppellF2Params(P.alpha, P.b_prime, P.b, P.cq, P.c, P.z / P.lam, P.w / P.lam)
        r = appell_f2_single_sum(swapped, ctrl)
    else:
        raise DivergenceError("F2 series needs |w| + |z| < lambda")
    return r.scaled(gamma_prefactor(P.alpha, [(P.lam, -P.alpha)]), "F2-SERIES")


def eval_f1_sum(P: GordonParams, ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Γ(α)/(λ^{α-b'} (λ-z)^{b'}) Σ_{k≤j-q} (q-j)_k (b')_k/((cq)_k k!) (z/(z-λ))^k
    F1(b; α-b', b'+k; c; w/λ, w/(λ-z))."""
    _domain(P)
    if P.j - P.q < 0:
        raise PreconditionError("F1 sum needs j - q >= 0")
    if P.z == 0.0 or P.z == P.lam:
        raise PreconditionError("F1 sum needs z not in {0, lambda}")
    pref = gamma_prefactor(P.alpha, [(P.lam, -(P.alpha - P.b_prime)), (P.lam - P.z, -P.b_prime)])
    x = P.z / (P.z - P.lam)
    terms = []
    coef = 1.0
    for k in range(P.j - P.q + 1):
        if k:
            coef *= (P.q - P.j + k - 1) * (P.b_prime + k - 1) / ((P.cq + k - 1) * k) * x
        if coef == 0.0:
            break
        f1 = AppellF1Params(P.b, P.alpha - P.b_prime, P.b_prime + k, P.c,
                            P.w / P.lam, P.w / (P.lam - P.z))
        terms.append((coef * pref, appell_f1(f1, ctrl)))
    return _finite(terms, "F1-SUM")


def eval_2f1_double_sum(P: GordonParams, ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Finite double sum over k ≤ j-q and r ≤ j+k of 2F1 values at
    wz/((λ-z)(λ-w))."""
    _domain(P)
    if P.j < 0 or P.j - P.q < 0:
        raise PreconditionError("2F1 double sum needs j >= 0 and j - q >= 0")
    if P.w in (0.0, P.lam) or P.z in (0.0, P.lam):
        raise PreconditionError("2F1 double sum needs w, z not in {0, lambda}")
    lam, w, z, b, bp, c = P.lam, P.w, P.z, P.b, P.b_prime, P.c
    pref = gamma_prefactor(P.alpha, [(lam, -(P.alpha - b - bp)), (lam - w, -b), (lam - z, -bp)])
    xk = z / (z - lam)
    xr = w / (w - lam)
    arg = w * z / ((lam - z) * (lam - w))
    terms = []
    ck = 1.0
    for k in range(P.j - P.q + 1):
        if k:
            ck *= (P.q - P.j + k - 1) * (bp + k - 1) / ((P.cq + k - 1) * k) * xk
        if ck == 0.0:
            break
        cr = 1.0
        for r in range(P.j + k + 1):
            if r:
                cr *= (b + r - 1) * (-P.j - k + r - 1) / ((c + r - 1) * r) * xr
            if cr == 0.0:
                break
            terms.append((pref * ck * cr, hyp2f1(b + r, bp + k, c + r, arg, ctrl)))
    return _finite(terms, "2F1-DOUBLE-SUM")


# ------------------------------------------------------- special catalog

def _sp_gamma(P, ctrl):
    _need(_trivial_first(P) and _trivial_second(P))
    return _exact_scalar(gamma_prefactor(P.alpha, [(P.lam, -P.alpha)]), "SPECIAL-GAMMA")


def _sp39(P, ctrl):
    _need(_trivial_first(P) and P.j == 0 and P.q == 0)
    _need(P.z < P.lam or P.bp_terminates, "needs z < lambda")
    v = gamma_prefactor(P.c, [(P.lam, P.b_prime - P.c), (P.lam - P.z, -P.b_prime)])
    return _exact_scalar(v, "SPECIAL-39")


def _sp37(P, ctrl):
    _need(_trivial_first(P) and P.q == P.j)
    _need(P.z < P.lam or P.bp_terminates, "needs z < lambda")
    v = gamma_prefactor(P.alpha, [(P.lam, -(P.c - P.b_prime + P.j)), (P.lam - P.z, -P.b_prime)])
    return _exact_scalar(v, "SPECIAL-37")


def _sp38(P, ctrl):
    _need(_trivial_first(P) and P.q == 0 and P.j >= 1)
    _need(P.z < P.lam or P.bp_terminates, "needs z < lambda")
    lam, z, bp, c = P.lam, P.z, P.b_prime, P.c
    pref = gamma_prefactor(P.alpha, [(lam, -(P.alpha - bp)), (lam - z, -bp)])
    inner = [(1.0, hyp2f1(-P.j + k, bp + 1, c + 1, z / (z - lam), ctrl)) for k in range(1, P.j + 1)]
    s = _finite(inner, "2F1")
    head = EvalResult(1.0, 0.0, "1", 1, (), 1.0, True)
    return _finite([(pref, head), (pref * bp * z / (c * (lam - z)), s)], "SPECIAL-38")


def _sp36_euler(P, ctrl):
    _need(_trivial_first(P) and P.j - P.q >= 0)
    _need(P.z < P.lam or P.bp_terminates, "needs z < lambda")
    pref = gamma_prefactor(P.alpha, [(P.lam, -(P.q - P.b_prime + P.c)),
                                (P.lam - P.z, -(P.b_prime - P.q + P.j))])
    r = hyp2f1(P.q - P.j, P.cq - P.b_prime, P.cq, P.z / P.lam, ctrl)
    return r.scaled(pref, "SPECIAL-36")


def _sp36(P, ctrl):
    _need(_trivial_first(P))
    _need(abs(P.z) < P.lam or P.bp_terminates, "needs |z| < lambda")
    r = hyp2f1(P.alpha, P.b_prime, P.cq, P.z / P.lam, ctrl)
    return r.scaled(gamma_prefactor(P.alpha, [(P.lam, -P.alpha)]), "SPECIAL-36")


def _sp36_mirror_euler(P, ctrl):
    _need(_trivial_second(P) and P.j >= 0)
    _need(P.w < P.lam or P.b_terminates, "needs w < lambda")
    pref = gamma_prefactor(P.alpha, [(P.lam, -(P.c - P.b)), (P.lam - P.w, -(P.b + P.j))])
    r = hyp2f1(-P.j, P.c - P.b, P.c, P.w / P.lam, ctrl)
    return r.scaled(pref, "SPECIAL-36")


def _sp36_mirror(P, ctrl):
    _need(_trivial_second(P))
    _need(abs(P.w) < P.lam or P.b_terminates, "needs |w| < lambda")
    r = hyp2f1(P.alpha, P.b, P.c, P.w / P.lam, ctrl)
    return r.scaled(gamma_prefactor(P.alpha, [(P.lam, -P.alpha)]), "SPECIAL-36")


def _sp35(P, ctrl):
    _need(_trivial_second(P) and P.b == P.alpha and P.w != 0.0)
    _need(P.w < P.lam, "needs w < lambda")
    r = hyp2f1(-P.j, P.alpha, P.c, P.w / (P.w - P.lam), ctrl)
    return r.scaled(gamma_prefactor(P.alpha, [(P.lam - P.w, -P.alpha)]), "SPECIAL-35")


def _sp9(P, ctrl):
    _need(P.b_prime == P.alpha and P.j >= 0 and P.j - P.q >= 0 and P.z != 0.0)
    lam, w, z, b = P.lam, P.w, P.z, P.b
    _need(z < lam and w + z < lam, "needs z < lambda and w + z < lambda")
    pref = gamma_prefactor(P.alpha, [(lam - z, -(P.alpha - b)), (lam - z - w, -b)])
    xk = z / (z - lam)
    arg = w / (w + z - lam)
    terms = []
    coef = 1.0
    for k in range(P.j - P.q + 1):
        if k:
            coef *= (P.q - P.j + k - 1) * (P.alpha + k - 1) / ((P.cq + k - 1) * k) * xk
        terms.append((pref * coef, hyp2f1(b, -P.j - k, P.c, arg, ctrl)))
    return _finite(terms, "SPECIAL-9")


def _sp5(P, ctrl):
    _need(P.b == P.alpha and P.q == P.j and P.j >= 0 and P.w != 0.0)
    lam, w, z, bp = P.lam, P.w, P.z, P.b_prime
    _need(w < lam and w + z < lam, "needs w < lambda and w + z < lambda")
    pref = gamma_prefactor(P.alpha, [(lam - w, bp - P.alpha), (lam - z - w, -bp)])
    f1 = AppellF1Params(-P.j, P.alpha - bp, bp, P.c, w / (w - lam), w / (w + z - lam))
    return appell_f1(f1, ctrl).scaled(pref, "SPECIAL-5")


def _sp34(P, ctrl):
    _need(P.sign == -1 and P.p > 0 and P.b_prime == P.c and P.j >= 0)
    lam, w, z, b = P.lam, P.w, P.z, P.b
    _need(z < lam and w + z < lam and z != 0.0, "needs z < lambda and w + z < lambda")
    pref = gamma_prefactor(P.alpha, [(lam - z, b - P.alpha), (lam - w - z, -b)])
    xk = z / (z - lam)
    arg = w / (w + z - lam)
    terms = []
    coef = 1.0
    for k in range(P.p + 1):
        if k:
            coef *= (-P.p + k - 1) * (P.alpha + k - 1) / ((P.cq + k - 1) * k) * xk
        terms.append((pref * coef, hyp2f1(-k - P.j, b, P.c, arg, ctrl)))
    return _finite(terms, "SPECIAL-34")


def _sp11(P, ctrl):
    _need(P.b == P.alpha and P.j >= 0 and P.w != 0.0)
    lam, w, z = P.lam, P.w, P.z
    _need(w < lam and abs(z) < lam - w, "needs |z| < lambda - w")
    pref = gamma_prefactor(P.alpha, [(lam - w, -P.alpha)])
    xk = w / (w - lam)
    terms = []
    coef = 1.0
    for k in range(P.j + 1):
        if k:
            coef *= (-P.j + k - 1) * (P.alpha + k - 1) / ((P.c + k - 1) * k) * xk
        terms.append((pref * coef, hyp2f1(P.b_prime, P.alpha + k, P.cq, z / (lam - w), ctrl)))
    return _finite(terms, "SPECIAL-11")


def _opposite(P):
    return P.b_prime == P.b and P.z == -P.w and P.q == 0 and P.w != 0.0


def _equal(P):
    return P.b_prime == P.c - P.b and P.z == P.w and P.q == 0 and P.w != 0.0


def _sp25(P, ctrl):
    _need(_opposite(P) and P.j == 1 and P.b == P.c / 2)
    _need(abs(P.w) < P.lam, "needs |w| < lambda")
    r = hyp2f1(P.c / 2, P.c / 2 + 1, P.c, (P.w / P.lam) ** 2, ctrl)
    return r.scaled(gamma_prefactor(P.c + 1, [(P.lam, -(P.c + 1))]), "SPECIAL-25")


def _sp24(P, ctrl):
    _need(_opposite(P) and P.j == 1)
    _need(abs(P.w) < P.lam, "needs |w| < lambda")
    r = hyp_pfq((P.b, P.c - P.b, P.c / 2 + 1), (P.c, P.c / 2), (P.w / P.lam) ** 2, ctrl)
    return r.scaled(gamma_prefactor(P.c + 1, [(P.lam, -(P.c + 1))]), "SPECIAL-24")


def _sp23(P, ctrl):
    _need(_opposite(P))
    _need(abs(P.w) < P.lam / 2, "needs |w| < lambda/2")
    a = P.alpha
    r = hyp_pfq((P.b, P.c - P.b, a / 2, (a + 1) / 2), (P.c, P.c / 2, (P.c + 1) / 2),
                (P.w / P.lam) ** 2, ctrl)
    return r.scaled(gamma_prefactor(a, [(P.lam, -a)]), "SPECIAL-23")


def _equal_arg(P):
    return (P.z / (P.lam - P.z)) ** 2


def _sp29(P, ctrl):
    _need(_equal(P) and P.j == 1 and P.b == P.c / 2)
    _need(P.z < P.lam / 2 and abs(P.z) < P.lam - P.z, "needs |z| < lambda - z")
    r = hyp2f1(P.c / 2, P.c / 2 + 1, P.c, _equal_arg(P), ctrl)
    return r.scaled(gamma_prefactor(P.c + 1, [(P.lam - P.z, -(P.c + 1))]), "SPECIAL-29")


def _sp28(P, ctrl):
    _need(_equal(P) and P.j == 1)
    _need(P.z < P.lam / 2 and abs(P.z) < P.lam - P.z, "needs |z| < lambda - z")
    r = hyp_pfq((P.b, P.c - P.b, P.c / 2 + 1), (P.c, P.c / 2), _equal_arg(P), ctrl)
    return r.scaled(gamma_prefactor(P.c + 1, [(P.lam - P.z, -(P.c + 1))]), "SPECIAL-28")


def _sp27(P, ctrl):
    _need(_equal(P))
    _need(abs(P.z) < P.lam / 2, "needs |z| < lambda/2")
    a = P.alpha
    r = hyp_pfq((P.b, P.c - P.b, a / 2, (a + 1) / 2), (P.c, P.c / 2, (P.c + 1) / 2),
                _equal_arg(P), ctrl)
    return r.scaled(gamma_prefactor(a, [(P.lam - P.z, -a)]), "SPECIAL-27")


def _f2(P, a, b, bp, c, cp, ctrl):
    return appell_f2_double(AppellF2Params(a, b, bp, c, cp, P.w / P.lam, P.z / P.lam), ctrl)


def _sp13(P, ctrl):
    _need(P.b == P.c - P.j and P.j >= 0 and P.w != 0.0)
    _need(P.strictly_convergent, "needs |w| + |z| < lambda")
    pref = gamma_prefactor(P.alpha, [(P.lam, -P.alpha)])
    x = P.w / P.lam
    terms = []
    coef = 1.0
    for k in range(P.j + 1):
        if k:
            coef *= (-P.j + k - 1) * (P.alpha + k - 1) / ((P.c + k - 1) * k) * x
        terms.append((pref * coef, _f2(P, P.alpha + k, P.c, P.b_prime, P.c + k, P.cq, ctrl)))
    return _finite(terms, "SPECIAL-13")


# explicit-only alternates: each rewrites the requested integral through
# integrals whose first 1F1 has parameters shifted by n

def _sp15(P, ctrl, n=1):
    _need(P.strictly_convergent, "needs |w| + |z| < lambda")
    c0, b0 = P.c - n, P.b - n
    den = pochhammer(b0, n)
    _need(den != 0.0, "(b-n)_n vanishes")
    pref = gamma_prefactor(P.alpha, [(P.lam, -P.alpha)]) * pochhammer(c0, n) / den
    terms = []
    for k in range(n + 1):
        coef = pochhammer(-n, k) * pochhammer(c0 - b0, k) / (pochhammer(c0, k) * math.factorial(k))
        terms.append((pref * coef, _f2(P, P.alpha, b0, P.b_prime, c0 + k, P.cq, ctrl)))
    return _finite(terms, "SPECIAL-15")


def _sp17(P, ctrl, n=1):
    _need(P.strictly_convergent and P.w != 0.0, "needs w != 0 and |w| + |z| < lambda")
    _need(P.alpha - n > 0, "needs c + j > n")
    c0, b0 = P.c - n, P.b - n
    den = (-P.w) ** n * pochhammer(b0, n)
    _need(den != 0.0, "(b-n)_n vanishes")
    _den_ok(2 - c0 - n, n, "2-c")
    pref = (gamma_prefactor(P.alpha - n, [(P.lam, -(P.alpha - n))])
            * pochhammer(c0 - 1, n) * pochhammer(c0, n) / den)
    terms = []
    for k in range(n + 1):
        coef = pochhammer(-n, k) * pochhammer(1 - c0, k) / (pochhammer(2 - c0 - n, k) * math.factorial(k))
        terms.append((pref * coef, _f2(P, P.alpha - n, b0, P.b_prime, c0 - k, P.cq, ctrl)))
    return _finite(terms, "SPECIAL-17")


def _sp19(P, ctrl, n=1):
    _need(P.strictly_convergent, "needs |w| + |z| < lambda")
    b0 = P.b - n
    den = pochhammer(b0, n)
    _need(den != 0.0, "(b-n)_n vanishes")
    _den_ok(b0 - P.c + 1, n, "b-c+1")
    pref = gamma_prefactor(P.alpha, [(P.lam, -P.alpha)]) * pochhammer(b0 - P.c + 1, n) / den
    terms = []
    for k in range(n + 1):
        coef = pochhammer(-n, k) * pochhammer(1 - P.c, k) / (pochhammer(b0 - P.c + 1, k) * math.factorial(k))
        terms.append((pref * coef, _f2(P, P.alpha, b0, P.b_prime, P.c - k, P.cq, ctrl)))
    return _finite(terms, "SPECIAL-19")


def _sp21(P, ctrl, n=1):
    _need(P.strictly_convergent and P.w != 0.0, "needs w != 0 and |w| + |z| < lambda")
    c0, b0 = P.c + n, P.b + n
    den = pochhammer(1 - c0, n)
    _need(den != 0.0, "(1-c-n)_n vanishes")
    _den_ok(1 - P.alpha - n, n, "1-c-j")
    pref = P.w ** n * gamma_prefactor(P.alpha + n, [(P.lam, -(P.alpha + n))]) / den
    terms = []
    for k in range(n + 1):
        coef = (pochhammer(-n, k) * pochhammer(1 - c0, k)
                / (math.factorial(k) * pochhammer(1 - P.alpha - n, k)) * (P.lam / P.w) ** k)
        terms.append((pref * coef, _f2(P, P.alpha - k + n, b0, P.b_prime, c0 - k, P.cq, ctrl)))
    return _finite(terms, "SPECIAL-21")


def _sp31(P, ctrl, n=None):
    _need(P.sign == 1 and P.p > 0)
    _need(P.strictly_convergent, "needs |w| + |z| < lambda")
    c, bp, p = P.c, P.b_prime, P.p
    if not c > bp:
        raise PreconditionError("needs c > b'")
    pref = gamma_prefactor(P.alpha, [(P.lam, -P.alpha)]) * pochhammer(c, p) / pochhammer(c - bp, p)
    terms = []
    for k in range(p + 1):
        coef = pochhammer(-p, k) * pochhammer(bp, k) / (math.factorial(k) * pochhammer(c, k))
        terms.append((pref * coef, _f2(P, P.alpha, P.b, bp + k, c, c + k, ctrl)))
    return _finite(terms, "SPECIAL-31")


def _sp33(P, ctrl, n=None):
    _need(P.sign == -1 and P.p > 0)
    _need(P.strictly_convergent, "needs |w| + |z| < lambda")
    c, bp, p, a = P.c, P.b_prime, P.p, P.alpha
    if any(c - i == 0 for i in range(p + 1)):
        raise PreconditionError("needs c not in {0, ..., p}")
    pref = gamma_prefactor(a, [(P.lam, -a)])
    x = -P.z / P.lam
    terms = []
    for k in range(p + 1):
        coef = (pochhammer(-p, k) * pochhammer(bp, k) * pochhammer(a, k)
                / (pochhammer(c, k) * pochhammer(c - p, k) * math.factorial(k)) * x ** k)
        terms.append((pref * coef, _f2(P, a + k, P.b, bp + k, c, c + k, ctrl)))
    return _finite(terms, "SPECIAL-33")


def _sp_poly(P, ctrl):
    # a degree-0 factor is just 1; those cases belong to the forms above
    _need((P.b_terminates and P.b != 0.0) or (P.bp_terminates and P.b_prime != 0.0),
          "no polynomial factor of positive degree")
    from .polynomial import PolyGordonParams, poly_gordon
    return poly_gordon(PolyGordonParams.from_gordon(P), ctrl)


# (id, evaluator, exact) in dispatch order
_EXACT: list[tuple[str, Callable, bool]] = [
    ("GAMMA", _sp_gamma, True),
    ("poly", _sp_poly, True),
    ("39", _sp39, True),
    ("37", _sp37, True),
    ("38", _sp38, True),
    ("36-euler", _sp36_euler, True),
    ("35", lambda P, c: (_need(P.j >= 0), _sp35(P, c))[1], True),
    ("36-mirror-euler", _sp36_mirror_euler, True),
    ("9", _sp9, True),
    ("5", _sp5, True),
    ("34", _sp34, True),
]
_SERIES: list[tuple[str, Callable, bool]] = [
    ("36", _sp36, False),
    ("36-mirror", _sp36_mirror, False),
    ("35-series", lambda P, c: (_need(P.j < 0), _sp35(P, c))[1], False),
    ("11", _sp11, False),
    ("25", _sp25, False),
    ("24", _sp24, False),
    ("23", _sp23, False),
    ("29", _sp29, False),
    ("28", _sp28, False),
    ("27", _sp27, False),
    ("13", _sp13, False),
]
_EXPLICIT = {"15": _sp15, "17": _sp17, "19": _sp19, "21": _sp21, "31": _sp31, "33": _sp33}
_BY_ID = {
    "GAMMA": [_sp_gamma], "39": [_sp39], "37": [_sp37], "38": [_sp38],
    "36": [_sp36_euler, _sp36, _sp36_mirror_euler, _sp36_mirror], "35": [_sp35],
    "9": [_sp9], "5": [_sp5], "34": [_sp34], "11": [_sp11], "13": [_sp13],
    "23": [_sp23], "24": [_sp24], "25": [_sp25], "27": [_sp27], "28": [_sp28],
    "29": [_sp29], "poly": [_sp_poly],
}
SPECIAL_IDS = tuple(_BY_ID)
EXPLICIT_IDS = tuple(_EXPLICIT)


def eval_special(P: GordonParams, ctrl: SeriesControl = DEFAULT_CONTROL,
                 which: str | None = None, n: int = 1) -> EvalResult:
    """Closed form for a recognised parameter pattern.

    With ``which=None`` the first matching catalog entry (in dispatch order)
    is used. ``which`` may name any catalog id, including the alternates
    "15", "17", "19", "21" (which take the shift ``n``), "31" and "33".
    Raises NotApplicable when nothing matches.
    """
    _domain(P)
    if which is not None:
        which = str(which).upper() if str(which).lower() == "gamma" else str(which)
        if which in _EXPLICIT:
            return _EXPLICIT[which](P, ctrl, n)
        if which not in _BY_ID:
            raise NotApplicable(f"unknown special id {which!r}")
        reasons = []
        for fn in _BY_ID[which]:
            try:
                return fn(P, ctrl)
            except NotApplicable as exc:
                reasons.append(str(exc))
        raise NotApplicable("; ".join(reasons))
    for _, fn, _ in _EXACT + _SERIES:
        try:
            return fn(P, ctrl)
        except NotApplicable:
            continue
    raise NotApplicable("no special pattern matches")


_GENERAL = [("F2-SERIES", eval_f2_series), ("F1-SUM", eval_f1_sum),
            ("2F1-DOUBLE-SUM", eval_2f1_double_sum)]


def eval_auto(P: GordonParams, ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """First successful strategy in the order: exact specials, series
    specials, F2 series, F1 sum, 2F1 double sum."""
    _domain(P)
    reasons: dict[str, str] = {}
    fallback = []
    chain = [(k, f) for k, f, _ in _EXACT + _SERIES] + _GENERAL
    for key, fn in chain:
        try:
            r = fn(P, ctrl)
        except NotApplicable as exc:
            reasons[key] = f"NOT-APPLICABLE: {exc}"
            continue
        except GordonError as exc:
            reasons[key] = f"{exc.code}: {exc}"
            fallback.append(f"FALLBACK:{key}:{exc.code}")
            continue
        if fallback:
            r = EvalResult(r.value, r.err_est, r.strategy, r.terms_used,
                           tuple(fallback) + r.warnings, r.cancellation, r.exact)
        return r
    raise AllStrategiesFailed(reasons)


def _reason(exc: Exception) -> str:
    return getattr(exc, "code", type(exc).__name__)


def validate(P: GordonParams) -> list[StrategyApplicability]:
    """Applicability of every strategy at P; never raises.

    General strategies are checked against their stated conditions only.
    Catalog entries are checked by pattern and domain without evaluating.
    """
    out = []
    try:
        _domain(P)
        base = None
    except GordonError as exc:
        base = exc.code
    names = [k for k, _ in _GENERAL] + [f"SPECIAL-{k}" for k in SPECIAL_IDS] + \
        [f"SPECIAL-{k}" for k in EXPLICIT_IDS]
    if base is not None:
        return [StrategyApplicability(k, False, base) for k in names]
    conv = P.strictly_convergent
    both = P.b_terminates and P.bp_terminates
    one_term = ((P.b_terminates or P.w == 0) and abs(P.z) < P.lam) or \
        ((P.bp_terminates or P.z == 0) and abs(P.w) < P.lam)
    gen = {
        "F2-SERIES": "OK" if conv or both or one_term else "BOUNDARY" if abs(P.w) + abs(P.z) == P.lam else "DIVERGENCE",
        "F1-SUM": ("PRECONDITION" if P.j - P.q < 0 or P.z in (0.0, P.lam)
                   else "OK" if conv else "DIVERGENCE"),
        "2F1-DOUBLE-SUM": ("PRECONDITION" if P.j < 0 or P.j - P.q < 0 or P.w in (0.0, P.lam)
                           or P.z in (0.0, P.lam) else "OK" if conv else "DIVERGENCE"),
    }
    for k in names[:3]:
        out.append(StrategyApplicability(k, gen[k] == "OK", gen[k]))
    for k in SPECIAL_IDS:
        out.append(_probe(f"SPECIAL-{k}", lambda: eval_special(P, DEFAULT_CONTROL, k)))
    for k in EXPLICIT_IDS:
        out.append(_probe(f"SPECIAL-{k}", lambda: eval_special(P, DEFAULT_CONTROL, k)))
    return out


def _probe(name, thunk):
    try:
        thunk()
    except NotApplicable:
        return StrategyApplicability(name, False, "NOT-APPLICABLE")
    except GordonError as exc:
        return StrategyApplicability(name, False, exc.code)
    except (ZeroDivisionError, OverflowError, ValueError):
        return StrategyApplicability(name, False, "DOMAIN")
    return StrategyApplicability(name, True, "OK")


def all_strategies(P: GordonParams, ctrl: SeriesControl = DEFAULT_CONTROL,
                   n: int = 1) -> dict[str, EvalResult | GordonError]:
    """Every strategy that can be attempted at P, keyed by strategy label.

    Failures are returned as exception objects instead of raised.
    """
    out: dict[str, EvalResult | GordonError] = {}
    for key, fn in _GENERAL:
        try:
            out[key] = fn(P, ctrl)
        except GordonError as exc:
            out[key] = exc
    for key, fns in _BY_ID.items():
        for i, fn in enumerate(fns):
            label = f"SPECIAL-{key}" + (f"#{i + 1}" if len(fns) > 1 else "")
            try:
                r = fn(P, ctrl)
            except NotApplicable:
                continue
            except GordonError as exc:
                out[label] = exc
                continue
            if key == "poly":
                label = r.strategy
            out[label] = r
    if P.b_terminates or P.bp_terminates:
        from .polynomial import PolyGordonParams, poly_gordon_all_forms
        try:
            for label, r in poly_gordon_all_forms(PolyGordonParams.from_gordon(P), ctrl).items():
                out.setdefault(label, r)
        except GordonError:
            pass
    for key, fn in _EXPLICIT.items():
        try:
            out[f"SPECIAL-{key}"] = fn(P, ctrl, n)
        except NotApplicable:
            continue
        except GordonError as exc:
            out[f"SPECIAL-{key}"] = exc
    return out


def whittaker_m(kappa: float, mu: float, z: float, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """M_{κ,μ}(z) = e^{-z/2} z^{μ+1/2} 1F1(μ-κ+1/2; 1+2μ; z) for z > 0."""
    if not z > 0:
        raise DomainError("whittaker_m needs z > 0")
    if is_nonpositive_integer(1 + 2 * mu):
        raise DomainError("1 + 2mu is a nonpositive integer")
    r = hyp1f1(mu - kappa + 0.5, 1 + 2 * mu, z, ctrl)
    return math.exp(-z / 2 + (mu + 0.5) * math.log(z)) * r.value
