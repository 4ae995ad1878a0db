"""Appell double series F1 and F2, their single-sum reductions, the Pfaff
transformation of F1, the 4F3 reductions of F2 at (z, -z) and (z, z), and
the contiguous relations that move the second denominator parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

import numpy as np
from scipy.special import gammaln

from .errors import DivergenceError, DomainError, NonConvergenceError, PoleError, PreconditionError
from .special import (
    CANCELLATION_LIMIT, DEFAULT_CONTROL, EPS, W_CANCELLATION, W_SLOW,
    Accumulator, EvalResult, SeriesControl, hyp2f1, hyp_pfq,
    is_nonpositive_integer, pochhammer,
)

NEAR_BOUNDARY = 1e-3


def _degree(x):
    return int(-x) if is_nonpositive_integer(x) else None


def _min_degree(*xs):
    ds = [d for d in (_degree(x) for x in xs) if d is not None]
    return min(ds) if ds else None


@dataclass(frozen=True)
class AppellF2Params:
    a: float
    b: float
    b_prime: float
    c: float
    c_prime: float
    w: float
    z: float

    @property
    def both_terminate(self) -> bool:
        return _degree(self.b) is not None and _degree(self.b_prime) is not None

    @property
    def convergent(self) -> bool:
        return (abs(self.w) + abs(self.z) < 1.0 or self.both_terminate
                or _degree(self.a) is not None)


@dataclass(frozen=True)
class AppellF1Params:
    a: float
    b: float
    b_prime: float
    c: float
    w: float
    z: float

    @property
    def convergent(self) -> bool:
        if max(abs(self.w), abs(self.z)) < 1.0 or _degree(self.a) is not None:
            return True
        db, dbp = _degree(self.b), _degree(self.b_prime)
        return (db is not None and (dbp is not None or abs(self.z) < 1.0)) or (
            dbp is not None and abs(self.w) < 1.0)


def _pole_check(den, limit, label):
    # (den)_k is needed for k < limit (limit None means unbounded)
    if is_nonpositive_integer(den) and (limit is None or limit > -den):
        raise PoleError(f"{label}: denominator parameter {den} is a pole")


def _finish(acc: Accumulator, total_abs: float, tail: float, terms: int,
            label: str, exact: bool, warnings=()) -> EvalResult:
    value = acc.value
    err = tail + 2 * EPS * total_abs + EPS * abs(value)
    if value != 0.0:
        canc = max(acc.cancellation(), total_abs / abs(value))
    else:
        canc = math.inf if total_abs > 0 else 1.0
    warns = tuple(warnings)
    if canc > CANCELLATION_LIMIT:
        warns += (W_CANCELLATION,)
    return EvalResult(value, err, label, terms, warns, canc, exact)


class _Grow:
    """Coefficient list u_k = (num)_k / (den)_k built on demand."""

    def __init__(self, num, den, limit):
        self.num, self.den, self.limit = num, den, limit
        self.buf = np.empty(64)
        self.buf[0] = 1.0
        self.n = 1

    def upto(self, k):
        k = k if self.limit is None else min(k, self.limit)
        while self.n <= k:
            if self.n == self.buf.size:
                self.buf = np.concatenate([self.buf, np.empty(self.buf.size)])
            i = self.n - 1
            self.buf[self.n] = self.buf[i] * (self.num + i) / (self.den + i)
            self.n += 1
        return self.buf


def appell_f2_double(params: AppellF2Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """F2 by anti-diagonals m + p = s, stopping on whole-diagonal magnitudes."""
    a, b, bp, c, cp, w, z = (params.a, params.b, params.b_prime, params.c,
                             params.c_prime, params.w, params.z)
    da = _degree(a)
    mmax = _min_degree(a, b)
    pmax = _min_degree(a, bp)
    _pole_check(c, None if mmax is None else mmax, "F2")
    _pole_check(cp, None if pmax is None else pmax, "F2")
    if w == 0.0:
        mmax = 0
    if z == 0.0:
        pmax = 0
    if not params.convergent and not (mmax is not None and pmax is not None):
        raise DivergenceError(f"F2: |w|+|z| = {abs(w) + abs(z)} >= 1 without termination")
    finite = mmax is not None and pmax is not None
    smax = None
    if finite:
        smax = mmax + pmax
    if da is not None:
        smax = da if smax is None else min(smax, da)
    warns = []
    if smax is None and 1.0 - (abs(w) + abs(z)) < NEAR_BOUNDARY:
        warns.append(W_SLOW)
        ctrl = ctrl.scaled_terms(10)

    # term = [(a)_s / s!] * C(s, m) w^m z^p * (b)_m/(c)_m * (b')_p/(c')_p;
    # the binomial weight is formed in logs so that nothing overflows
    A = _Grow(b, c, mmax)
    B = _Grow(bp, cp, pmax)
    lw = math.log(abs(w)) if w else 0.0
    lz = math.log(abs(z)) if z else 0.0
    sw = -1.0 if w < 0 else 1.0
    sz = -1.0 if z < 0 else 1.0
    acc = Accumulator()
    total_abs = 0.0
    poch_a = 1.0
    terms = 0
    run = 0
    block_abs = 0.0
    s = 0
    while True:
        lo = 0 if pmax is None else max(0, s - pmax)
        hi = s if mmax is None else min(s, mmax)
        if lo > hi:
            break
        av = A.upto(hi)[lo:hi + 1]
        bv = B.upto(s - lo)[s - hi:s - lo + 1][::-1]
        ms = np.arange(lo, hi + 1)
        ps = s - ms
        if s <= 150:
            weight = np.array([comb(s, m) * w ** m * z ** (s - m) for m in range(lo, hi + 1)])
        else:
            logc = gammaln(s + 1) - gammaln(ms + 1) - gammaln(ps + 1) + ms * lw + ps * lz
            sign = np.where(ms % 2 == 1, sw, 1.0) * np.where(ps % 2 == 1, sz, 1.0)
            weight = sign * np.exp(logc)
        prod = av * bv * weight
        block = poch_a * float(prod.sum())
        block_abs = abs(poch_a) * float(np.abs(prod).sum())
        acc.add(block)
        total_abs += block_abs
        terms += hi - lo + 1
        if smax is not None and s >= smax:
            break
        if smax is None:
            if block_abs <= ctrl.rel_tol * abs(acc.value) + ctrl.abs_floor:
                run += 1
                if run >= ctrl.consecutive_small:
                    break
            else:
                run = 0
        if terms >= ctrl.max_terms:
            raise NonConvergenceError(f"F2: no convergence in {ctrl.max_terms} terms")
        if not math.isfinite(acc.value):
            raise NonConvergenceError("F2: overflow")
        poch_a *= (a + s) / (s + 1)
        s += 1
    if smax is None:
        rho = min(abs(w) + abs(z), 0.999)
        tail = block_abs * (1.0 + rho / (1.0 - rho))
    else:
        tail = 0.0
    return _finish(acc, total_abs, tail, terms, "F2-DOUBLE", smax is not None, warns)


def appell_f2_single_sum(params: AppellF2Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """F2 = sum_m (a)_m (b)_m / ((c)_m m!) w^m 2F1(a+m, b'; c'; z)."""
    a, b, bp, c, cp, w, z = (params.a, params.b, params.b_prime, params.c,
                             params.c_prime, params.w, params.z)
    mmax = _min_degree(a, b)
    if w == 0.0:
        mmax = 0
    _pole_check(c, mmax, "F2")
    outer_ok = mmax is not None or params.convergent
    inner_ok = abs(z) < 1.0 or _degree(bp) is not None or _degree(a) is not None
    if not (outer_ok and inner_ok):
        raise DivergenceError("F2 single sum: outer or inner series diverges")
    warns = []
    if mmax is None and 1.0 - (abs(w) + abs(z)) < NEAR_BOUNDARY:
        warns.append(W_SLOW)
        ctrl = ctrl.scaled_terms(10)
    acc = Accumulator()
    coef = 1.0
    err = 0.0
    terms = 0
    run = 0
    m = 0
    last = 0.0
    exact = True
    while True:
        inner = hyp2f1(a + m, bp, cp, z, ctrl)
        t = coef * inner.value
        acc.add(t)
        err += abs(coef) * inner.err_est
        terms += inner.terms_used
        exact = exact and inner.exact
        last = abs(t)
        if mmax is not None and m >= mmax:
            break
        if mmax is None:
            if last <= ctrl.rel_tol * abs(acc.value) + ctrl.abs_floor:
                run += 1
                if run >= ctrl.consecutive_small:
                    break
            else:
                run = 0
            if m + 1 >= ctrl.max_terms:
                raise NonConvergenceError("F2 single sum: outer series did not converge")
        coef *= (a + m) * (b + m) / ((c + m) * (m + 1)) * w
        m += 1
    tail = 0.0
    if mmax is None:
        exact = False
        rho = min(abs(w) / max(1.0 - abs(z), 1e-3), 0.999)
        tail = last * (1.0 + rho / (1.0 - rho))
    return _finish(acc, acc.abs_sum, tail + err, terms, "F2-SINGLE", exact, warns)


def appell_f1(params: AppellF1Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """F1 = sum_m (a)_m (b)_m / ((c)_m m!) w^m 2F1(a+m, b'; c+m; z).

    When only b' terminates the roles of (b, w) and (b', z) are swapped so
    that the outer sum is the finite one.
    """
    a, b, bp, c, x, y = (params.a, params.b, params.b_prime, params.c,
                         params.w, params.z)
    if _degree(b) is None and _degree(bp) is not None:
        b, bp, x, y = bp, b, y, x
    if not params.convergent:
        raise DivergenceError("F1: arguments outside the convergence region")
    mmax = _min_degree(a, b)
    if x == 0.0:
        mmax = 0
    _pole_check(c, None, "F1") if mmax is None else _pole_check(c, mmax + 1, "F1")
    acc = Accumulator()
    coef = 1.0
    err = 0.0
    terms = 0
    run = 0
    m = 0
    last = 0.0
    exact = True
    while True:
        inner = hyp2f1(a + m, bp, c + m, y, ctrl)
        t = coef * inner.value
        acc.add(t)
        err += abs(coef) * inner.err_est
        terms += inner.terms_used
        exact = exact and inner.exact
        last = abs(t)
        if mmax is not None and m >= mmax:
            break
        if mmax is None:
            if last <= ctrl.rel_tol * abs(acc.value) + ctrl.abs_floor:
                run += 1
                if run >= ctrl.consecutive_small:
                    break
            else:
                run = 0
            if m + 1 >= ctrl.max_terms:
                raise NonConvergenceError("F1: outer series did not converge")
        coef *= (a + m) * (b + m) / ((c + m) * (m + 1)) * x
        m += 1
    tail = 0.0
    if mmax is None:
        exact = False
        rho = min(abs(x), 0.999)
        tail = last * (1.0 + rho / (1.0 - rho))
    return _finish(acc, acc.abs_sum, tail + err, terms, "F1", exact)


def appell_f1_pfaff(params: AppellF1Params, ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """(1-w)^{-a} F1(a; c-b-b', b'; c; w/(w-1), (z-w)/(1-w))."""
    a, b, bp, c, w, z = (params.a, params.b, params.b_prime, params.c,
                         params.w, params.z)
    if not w < 1.0:
        raise DomainError("Pfaff transform of F1 needs w < 1")
    moved = AppellF1Params(a, c - b - bp, bp, c, w / (w - 1.0), (z - w) / (1.0 - w))
    if not moved.convergent:
        raise DivergenceError("Pfaff transform: transformed arguments diverge")
    inner = appell_f1(moved, ctrl)
    return inner.scaled((1.0 - w) ** (-a), "F1-PFAFF")


def f2_reduce_opposite_args(a: float, b: float, c: float, z: float,
                            ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """F2(a; b, b; c, c; z, -z) as a 4F3 in z^2."""
    num = (a / 2, (a + 1) / 2, b, c - b)
    if abs(z) >= 0.5 and _min_degree(*num) is None:
        raise DivergenceError("F2(z, -z) reduction needs |z| < 1/2")
    r = hyp_pfq(num, (c / 2, (c + 1) / 2, c), z * z, ctrl)
    return r.with_strategy("F2-4F3")


def f2_reduce_equal_args(a: float, b: float, c: float, z: float,
                         ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """F2(a; b, c-b; c, c; z, z) = (1-z)^{-a} 4F3(...; z^2/(1-z)^2)."""
    if z == 1.0:
        raise DomainError("F2(z, z) reduction needs z != 1")
    num = (a / 2, (a + 1) / 2, b, c - b)
    if abs(z) >= 0.5 and _min_degree(*num) is None:
        raise DivergenceError("F2(z, z) reduction needs |z| < 1/2")
    x = (z / (1.0 - z)) ** 2
    r = hyp_pfq(num, (c / 2, (c + 1) / 2, c), x, ctrl)
    return r.scaled((1.0 - z) ** (-a), "F2-4F3")


def f2_contiguous_shift(direction: str, n: int, params: AppellF2Params,
                        ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """F2 with c' moved by +n ("raise-c'") or -n ("lower-c'"), written as a
    finite combination of F2 values at the unshifted c'."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    s, a1, a2, b1, b2, w, z = (params.a, params.b, params.b_prime, params.c,
                               params.c_prime, params.w, params.z)
    terms = []
    if direction == "raise-c'":
        gap = b2 - a2
        escape = is_nonpositive_integer(gap) and -gap >= n
        if not (gap > 0 or escape):
            raise PreconditionError("raising c' needs c' > b' (or c'-b' a negative integer <= -n)")
        pre = pochhammer(b2, n) / pochhammer(gap, n)
        for k in range(n + 1):
            coef = pre * (-1) ** k * comb(n, k) * pochhammer(a2, k) / pochhammer(b2, k)
            terms.append((coef, AppellF2Params(s, a1, a2 + k, b1, b2 + k, w, z)))
    elif direction == "lower-c'":
        if any(b2 == i for i in range(n + 1)):
            raise PreconditionError("lowering c' by n needs c' != 0, 1, ..., n")

        def falling(m):
            return math.prod(b2 - i for i in range(m + 1))

        for k in range(n + 1):
            coef = (comb(n, k) * falling(n - k) * pochhammer(s, k) * pochhammer(a2, k)
                    / pochhammer(b2, k) * z ** k / falling(n))
            terms.append((coef, AppellF2Params(s + k, a1, a2 + k, b1, b2 + k, w, z)))
    else:
        raise PreconditionError(f"unknown direction {direction!r}")
    return combine([(coef, appell_f2_double(p, ctrl)) for coef, p in terms], "F2-CONTIGUOUS")


def combine(weighted, strategy: str) -> EvalResult:
    """sum coef_i * r_i for EvalResults r_i, merging diagnostics."""
    acc = Accumulator()
    err = 0.0
    terms = 0
    warns = []
    exact = True
    for coef, r in weighted:
        acc.add(coef * r.value)
        err += abs(coef) * r.err_est
        terms += r.terms_used
        exact = exact and r.exact
        for wcode in r.warnings:
            if wcode not in warns:
                warns.append(wcode)
    value = acc.value
    err += 2 * EPS * acc.abs_sum + EPS * abs(value)
    canc = acc.cancellation()
    if canc > CANCELLATION_LIMIT and W_CANCELLATION not in warns:
        warns.append(W_CANCELLATION)
    return EvalResult(value, err, strategy, terms, tuple(warns), canc, exact)
