"""Scalar special functions: log-gamma, Pochhammer symbols and the
generalized hypergeometric series 1F1, 2F1, 3F2, 4F3.

All series are summed forward with a Neumaier-compensated accumulator.
Pochhammer ratios are updated term to term, never rebuilt from gamma
functions, so a nonpositive-integer numerator gives an exact polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import zeta

from .errors import DivergenceError, DomainError, NonConvergenceError, PoleError

EPS = 2.220446049250313e-16
CANCELLATION_LIMIT = 1e6

# codes attached to EvalResult.warnings
W_CANCELLATION = "CANCELLATION"
W_SLOW = "SLOW-CONVERGENCE"


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy shared by every infinite series."""

    rel_tol: float = 1e-15
    abs_floor: float = 1e-300
    max_terms: int = 100_000
    consecutive_small: int = 3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1 or self.consecutive_small < 1:
            raise ValueError("max_terms and consecutive_small must be >= 1")

    def scaled_terms(self, factor: int) -> "SeriesControl":
        return replace(self, max_terms=self.max_terms * factor)


DEFAULT_CONTROL = SeriesControl()


@dataclass(frozen=True)
class EvalResult:
    """One evaluated quantity with its error budget and diagnostics.

    ``cancellation`` is max |partial sum| / |final sum| of the outermost
    summation; ``exact`` marks finite sums with no truncation error.
    """

    value: float
    err_est: float
    strategy: str
    terms_used: int = 1
    warnings: tuple = ()
    cancellation: float = 1.0
    exact: bool = False

    def with_strategy(self, strategy: str) -> "EvalResult":
        return replace(self, strategy=strategy)

    def scaled(self, factor: float, strategy: str | None = None) -> "EvalResult":
        """Multiply by a prefactor carrying a few ulps of its own error."""
        value = self.value * factor
        err = abs(factor) * self.err_est + 4 * EPS * abs(value)
        return replace(self, value=value, err_est=err,
                       strategy=strategy or self.strategy)

    @property
    def rel_err(self) -> float:
        return self.err_est / abs(self.value) if self.value else math.inf


@dataclass(frozen=True)
class HypSeriesTerm:
    """Snapshot of one step of a hypergeometric summation."""

    k: int
    term: float
    running_sum: float


class Accumulator:
    """Neumaier compensated running sum that also tracks the largest
    partial sum and the sum of magnitudes."""

    __slots__ = ("_s", "_c", "abs_sum", "max_partial")

    def __init__(self):
        self._s = 0.0
        self._c = 0.0
        self.abs_sum = 0.0
        self.max_partial = 0.0

    def add(self, x: float) -> None:
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t
        self.abs_sum += abs(x)
        v = abs(t + self._c)
        if v > self.max_partial:
            self.max_partial = v

    @property
    def value(self) -> float:
        return self._s + self._c

    def cancellation(self) -> float:
        v = abs(self.value)
        if v == 0.0:
            return math.inf if self.max_partial > 0 else 1.0
        return max(1.0, self.max_partial / v)


def is_nonpositive_integer(x: float) -> bool:
    """Exact integrality test; -2.0000001 is *not* a nonpositive integer."""
    return float(x).is_integer() and x <= 0


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k by direct product; exact 0 when it should be."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1.0
    for i in range(k):
        out *= a + i
        if out == 0.0:
            return 0.0
    return out


_ZETA = [float(zeta(k)) for k in range(2, 40)]
_EULER_GAMMA = 0.5772156649015329


def _lgamma_one_plus(e: float) -> float:
    # Taylor series of ln Gamma(1+e) about 0, good for |e| <= 0.3
    acc = Accumulator()
    acc.add(-_EULER_GAMMA * e)
    p = -e
    for k, zk in enumerate(_ZETA, start=2):
        p *= -e
        t = zk * p / k
        acc.add(t)
        if abs(t) < 1e-18 * abs(acc.value):
            break
    return acc.value


def ln_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0.

    math.lgamma loses relative accuracy next to its zeros at 1 and 2, so
    those neighbourhoods use the zeta-coefficient Taylor series instead.
    """
    if not x > 0:
        raise DomainError(f"ln_gamma needs x > 0, got {x}")
    if abs(x - 1.0) <= 0.3:
        return _lgamma_one_plus(x - 1.0)
    if abs(x - 2.0) <= 0.3:
        e = x - 2.0
        return math.log1p(e) + _lgamma_one_plus(e)
    return math.lgamma(x)


def power_product(pairs):
    """(sign, log|prod base^expo|); negative bases need integer exponents."""
    sign, log = 1.0, 0.0
    for base, expo in pairs:
        if expo == 0:
            continue
        if base == 0.0:
            if expo > 0:
                return 0.0, 0.0
            raise PoleError("zero base raised to a negative power")
        if base < 0:
            if not float(expo).is_integer():
                raise DomainError(f"negative base {base} with non-integer power {expo}")
            if int(expo) % 2:
                sign = -sign
        log += expo * math.log(abs(base))
    return sign, log


def gamma_prefactor(gamma_arg, pairs):
    """Γ(gamma_arg) * prod base^expo, assembled in logs."""
    sign, log = power_product(pairs)
    if sign == 0.0:
        return 0.0
    return sign * math.exp(ln_gamma(gamma_arg) + log)


def _terminating_degree(params) -> int | None:
    degrees = [int(-a) for a in params if is_nonpositive_integer(a)]
    return min(degrees) if degrees else None


def _check_poles(den, degree, label):
    for b in den:
        if is_nonpositive_integer(b) and (degree is None or degree > -b):
            raise PoleError(f"{label}: denominator parameter {b} is a pole")


def hyp_series(num, den, z: float, ctrl: SeriesControl = DEFAULT_CONTROL,
               label: str = "pFq", trace: list | None = None) -> EvalResult:
    """Generic forward summation of sum_k prod (a)_k / prod (b)_k z^k / k!.

    If ``trace`` is a list, a HypSeriesTerm is appended for every index.
    """
    num = tuple(float(a) for a in num)
    den = tuple(float(b) for b in den)
    z = float(z)
    degree = _terminating_degree(num)
    _check_poles(den, degree, label)
    if degree is None:
        if len(num) > len(den) + 1 and z != 0.0:
            raise DivergenceError(f"{label}: series diverges for z != 0")
        if len(num) == len(den) + 1 and abs(z) >= 1.0:
            raise DivergenceError(f"{label}: |z| = {abs(z)} >= 1 without termination")
    if degree == 0 or (z == 0.0 and degree is None):
        if trace is not None:
            trace.append(HypSeriesTerm(0, 1.0, 1.0))
        return EvalResult(1.0, 0.0, label, 1, (), 1.0, True)

    acc = Accumulator()
    acc.add(1.0)
    if trace is not None:
        trace.append(HypSeriesTerm(0, 1.0, 1.0))
    term = 1.0
    k = 0
    run = 0
    ratio = 0.0
    limit = ctrl.max_terms
    while True:
        if degree is not None and k >= degree:
            break
        ratio = z / (k + 1)
        for a in num:
            ratio *= a + k
        for b in den:
            ratio /= b + k
        term *= ratio
        k += 1
        acc.add(term)
        if trace is not None:
            trace.append(HypSeriesTerm(k, term, acc.value))
        if not math.isfinite(acc.value):
            raise NonConvergenceError(f"{label}: overflow after {k} terms")
        if degree is None:
            if abs(term) <= ctrl.rel_tol * abs(acc.value) + ctrl.abs_floor:
                run += 1
                if run >= ctrl.consecutive_small:
                    break
            else:
                run = 0
            if k + 1 >= limit:
                raise NonConvergenceError(f"{label}: no convergence in {limit} terms")

    value = acc.value
    rounding = 2 * EPS * acc.abs_sum + EPS * abs(value)
    if degree is None:
        # next term estimate and geometric tail with the current ratio
        nxt = z / (k + 1)
        for a in num:
            nxt *= a + k
        for b in den:
            nxt /= b + k
        r = min(abs(nxt), 0.999)
        tail = abs(term * nxt) / (1.0 - r) + abs(term)
        err = tail + rounding
    else:
        err = rounding
    canc = acc.cancellation()
    warns = (W_CANCELLATION,) if canc > CANCELLATION_LIMIT else ()
    return EvalResult(value, err, label, k + 1, warns, canc, degree is not None)


def hyp1f1(a: float, c: float, z: float, ctrl: SeriesControl = DEFAULT_CONTROL,
           kummer: bool = True) -> EvalResult:
    """Kummer's function 1F1(a; c; z).

    For z < 0 and non-terminating ``a`` the value is computed as
    e^z 1F1(c-a; c; -z), whose terms share one sign. ``kummer=False`` forces
    the raw alternating series.
    """
    a, c, z = float(a), float(c), float(z)
    if is_nonpositive_integer(a) or not kummer or z >= 0:
        return hyp_series((a,), (c,), z, ctrl, "1F1")
    if is_nonpositive_integer(c):
        raise PoleError(f"1F1: denominator parameter {c} is a pole")
    inner = hyp_series((c - a,), (c,), -z, ctrl, "1F1")
    scale = math.exp(z)
    value = scale * inner.value
    err = scale * inner.err_est + 2 * EPS * abs(value)
    return replace(inner, value=value, err_est=err, strategy="1F1-KUMMER")


def hyp2f1(a: float, b: float, c: float, z: float,
           ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Gauss series 2F1(a, b; c; z); any z when a or b terminates."""
    return hyp_series((a, b), (c,), z, ctrl, "2F1")


def hyp_pfq(numerator, denominator, z: float,
            ctrl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """Generalized series pFq; used here for 3F2 and 4F3."""
    p, q = len(numerator), len(denominator)
    return hyp_series(numerator, denominator, z, ctrl, f"{p}F{q}")


def hyp1f1_scaled(a: float, c: float, t, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Vectorised 1F1(a; c; t) over an array, returned as (mantissa, log_scale)
    with value = mantissa * exp(log_scale).

    Used by the quadrature integrand, where e^{wx} growth and e^{-lambda x}
    decay have to be combined without overflow.
    """
    t = np.asarray(t, dtype=float)
    a, c = float(a), float(c)
    degree = _terminating_degree((a,))
    _check_poles((c,), degree, "1F1")
    mant = np.empty_like(t)
    logs = np.zeros_like(t)
    if degree is not None:
        groups = [(a, t, np.zeros_like(t), np.ones(t.shape, bool))]
    else:
        neg = t < 0
        groups = [(a, t, np.zeros_like(t), ~neg), (c - a, -t, t, neg)]
    for num, arg, shift, mask in groups:
        if not mask.any():
            continue
        m, ls = _vector_series(num, c, arg[mask], ctrl)
        mant[mask] = m
        logs[mask] = ls + shift[mask]
    return mant, logs


_RESCALE = 1e200
_LOG_RESCALE = math.log(_RESCALE)


def _vector_series(a, c, x, ctrl):
    degree = _terminating_degree((a,))
    s = np.ones_like(x)
    term = np.ones_like(x)
    logs = np.zeros_like(x)
    run = np.zeros(x.shape, dtype=int)
    k = 0
    while True:
        if degree is not None and k >= degree:
            break
        term = term * ((a + k) / ((c + k) * (k + 1))) * x
        s = s + term
        k += 1
        big = np.abs(s) > _RESCALE
        if big.any():
            s[big] /= _RESCALE
            term[big] /= _RESCALE
            logs[big] += _LOG_RESCALE
        if degree is None:
            small = np.abs(term) <= ctrl.rel_tol * np.abs(s)
            run = np.where(small, run + 1, 0)
            if np.all(run >= ctrl.consecutive_small):
                break
            if k >= ctrl.max_terms:
                raise NonConvergenceError("1F1: vector series did not converge")
    return s, logs
