"""Quadrature oracle: the defining integral evaluated numerically on (0, U].

The rule is a 21-point Gauss-Kronrod pair (QUADPACK nodes and weights)
driven by a global priority queue of panels. Nodes never touch the
endpoints, and for c+j < 1 the substitution x = t^k removes the
x^{c+j-1} singularity before any panel is evaluated.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .params import GordonParams
from .special import DEFAULT_CONTROL, EPS, SeriesControl, hyp1f1_scaled, is_nonpositive_integer

W_TOLERANCE = "TOLERANCE-NOT-MET"
W_CANCELLATION = "CANCELLATION"

_XK = np.array([
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0,
])
_XK = np.concatenate([_XK, -_XK[-2::-1]])
_WG = np.array([
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])
_WG = np.concatenate([_WG, _WG[::-1]])
_WK = np.array([
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WK = np.concatenate([_WK, _WK[-2::-1]])
_GAUSS_IDX = np.arange(1, 21, 2)
_NODES = _XK.size
_BATCH = 16


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    err_est: float
    upper_cutoff: float
    subdivisions: int
    integrand_evals: int
    converged: bool = True
    warnings: tuple = ()
    cancellation: float = 1.0
    strategy: str = "ORACLE"

    @property
    def rel_err(self) -> float:
        return self.err_est / abs(self.value) if self.value else math.inf


def _gk_panels(g, a, b):
    """GK21 on many panels at once; returns (integral, error, abs integral)."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    x = c[:, None] + h[:, None] * _XK[None, :]
    fx = g(x.ravel()).reshape(x.shape)
    kron = h * (fx @ _WK)
    gauss = h * (fx[:, _GAUSS_IDX] @ _WG)
    resabs = np.abs(h) * (np.abs(fx) @ _WK)
    mean = kron / np.where(h == 0, 1.0, 2 * h)
    resasc = np.abs(h) * (np.abs(fx - mean[:, None]) @ _WK)
    err = np.abs(kron - gauss)
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc != 0) & (err != 0), scaled, err)
    err = np.maximum(err, 50 * EPS * resabs)
    return kron, err, resabs


def _adaptive(g, a, b, rel_tol, max_subdivisions):
    """Global adaptive bisection; stops on rel_tol or at the rounding floor."""
    lo = np.linspace(a, b, 9)[:-1]
    hi = np.linspace(a, b, 9)[1:]
    vals, errs, absv = _gk_panels(g, lo, hi)
    heap = [(-e, l, r, v, s) for l, r, v, e, s in zip(lo, hi, vals, errs, absv)]
    heapq.heapify(heap)
    evals = _NODES * len(lo)
    splits = 0
    while True:
        total = math.fsum(item[3] for item in heap)
        err = math.fsum(-item[0] for item in heap)
        l1 = math.fsum(item[4] for item in heap)
        if err <= 0.5 * rel_tol * abs(total) or err <= 100 * EPS * l1:
            return total, err, l1, splits, evals, err <= rel_tol * abs(total)
        if splits >= max_subdivisions:
            return total, err, l1, splits, evals, False
        worst = [heapq.heappop(heap) for _ in range(min(_BATCH, len(heap)))]
        keep = [item for item in worst if -item[0] < 0.01 * err / _BATCH]
        for item in keep:
            heapq.heappush(heap, item)
        worst = [item for item in worst if item not in keep] or [worst[0]]
        l = np.array([item[1] for item in worst])
        r = np.array([item[2] for item in worst])
        m = 0.5 * (l + r)
        lo = np.concatenate([l, m])
        hi = np.concatenate([m, r])
        vals, errs, absv = _gk_panels(g, lo, hi)
        evals += _NODES * len(lo)
        splits += len(worst)
        for item in zip(-errs, lo, hi, vals, absv):
            heapq.heappush(heap, item)


def _cutoff(kappa, power, log_target):
    # smallest U past the envelope peak with P ln U - κU below peak + log_target
    power = max(power, 0.0)
    peak = power / kappa
    env = (lambda x: power * math.log(x) - kappa * x) if power > 0 else (lambda x: -kappa * x)
    top = env(peak) if peak > 0 else 0.0
    lo = max(peak, 1e-300)
    hi = max(2 * lo, 1.0 / kappa)
    while env(hi) - top > log_target:
        hi *= 2
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if env(mid) - top > log_target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * hi:
            break
    return hi


def integrate_half_line(f, alpha: float, kappa: float, power: float,
                        target_rel_tol: float = 1e-10,
                        max_subdivisions: int = 4000) -> QuadratureResult:
    """Integrate a vectorised f over (0, ∞).

    f(x) must behave like x^{alpha-1} at the origin and be bounded by
    K x^power e^{-kappa x} for large x; K is estimated from samples.
    """
    if not target_rel_tol >= 1e-12:
        raise DomainError("target_rel_tol must be >= 1e-12")
    if not kappa > 0:
        raise DomainError("integrand does not decay (kappa <= 0)")
    if not alpha > 0:
        raise DomainError("integrand is not integrable at the origin")
    k = 1 if alpha >= 1 else math.ceil(1.0 / alpha)

    def g(t):
        if k == 1:
            return f(t)
        return f(t ** k) * (k * t ** (k - 1))

    power = max(power, 0.0)
    upper = _cutoff(kappa, power, math.log(target_rel_tol) - 7.0)
    total, err, l1, splits, evals, ok = _adaptive(g, 0.0, upper ** (1.0 / k), target_rel_tol, max_subdivisions)
    tail = math.inf
    for _ in range(40):
        xs = np.linspace(0.5 * upper, upper, 16)
        fx = np.abs(f(xs))
        evals += xs.size
        with np.errstate(divide="ignore"):
            logc = np.max(np.log(fx) - power * np.log(xs) + kappa * xs)
        rate = kappa - power / upper
        if rate > 0.5 * kappa:
            tail = math.exp(logc + power * math.log(upper) - kappa * upper) / rate if np.isfinite(logc) else 0.0
            if tail <= 0.25 * target_rel_tol * abs(total) or tail <= 100 * EPS * l1 and tail < err:
                break
        new_upper = 1.5 * upper
        t2, e2, a2, s2, n2, ok2 = _adaptive(g, upper ** (1.0 / k), new_upper ** (1.0 / k),
                                            target_rel_tol, max_subdivisions)
        total, err, l1 = total + t2, err + e2, l1 + a2
        splits, evals, ok = splits + s2, evals + n2, ok and ok2
        upper = new_upper
    err_total = err + tail
    converged = ok and err_total <= target_rel_tol * abs(total)
    warns = ()
    if not converged:
        warns += (W_TOLERANCE,)
    canc = l1 / abs(total) if total else math.inf
    if canc > 1e6:
        warns += (W_CANCELLATION,)
    return QuadratureResult(total, err_total, upper, splits, evals, converged, warns, max(canc, 1.0))


def _side(b, c, w):
    if w == 0.0:
        return 0.0
    if is_nonpositive_integer(b):
        return -b
    return max(b - c, 0.0) if w > 0 else max(-b, 0.0)


def _check(params: GordonParams):
    if not params.lam > 0:
        raise DomainError("lambda must be positive")
    if not params.alpha > 0:
        raise DomainError("c + j must be positive")
    for num, den in ((params.b, params.c), (params.b_prime, params.cq)):
        if is_nonpositive_integer(den) and not (is_nonpositive_integer(num) and -num <= -den):
            raise PoleError(f"1F1 denominator {den} is a pole")


def integrand(params: GordonParams, x, ctrl: SeriesControl = DEFAULT_CONTROL):
    """x^{c+j-1} e^{-λx} 1F1(b; c; wx) 1F1(b'; c±p; zx), scalar or array x."""
    _check(params)
    scalar = np.ndim(x) == 0
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if np.any(x < 0):
        raise DomainError("x must be nonnegative")
    if params.alpha < 1 and np.any(x == 0):
        raise DomainError("x = 0 needs c + j >= 1")
    m1, l1 = hyp1f1_scaled(params.b, params.c, params.w * x, ctrl)
    m2, l2 = hyp1f1_scaled(params.b_prime, params.cq, params.z * x, ctrl)
    with np.errstate(divide="ignore"):
        logx = np.where(x > 0, np.log(np.where(x > 0, x, 1.0)), -np.inf)
    power = np.where(x > 0, (params.alpha - 1.0) * logx, 0.0) if params.alpha != 1 else 0.0
    out = m1 * m2 * np.exp(power - params.lam * x + l1 + l2)
    return float(out[0]) if scalar else out


def integrate_gordon(params: GordonParams, target_rel_tol: float = 1e-10,
                     ctrl: SeriesControl = DEFAULT_CONTROL,
                     max_subdivisions: int = 4000) -> QuadratureResult:
    """Oracle value of the integral with quadrature error plus tail bound."""
    _check(params)
    kappa = params.lam
    if not params.b_terminates:
        kappa -= max(params.w, 0.0)
    if not params.bp_terminates:
        kappa -= max(params.z, 0.0)
    if not kappa > 0:
        raise DomainError("exponential growth of the 1F1 factors beats e^{-λx}")
    power = (params.alpha - 1.0 + _side(params.b, params.c, params.w)
             + _side(params.b_prime, params.cq, params.z))

    def f(x):
        return integrand(params, x, ctrl)

    return integrate_half_line(f, params.alpha, kappa, power, target_rel_tol, max_subdivisions)
