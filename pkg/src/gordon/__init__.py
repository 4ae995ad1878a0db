"""Gordon integral evaluation toolkit.

J_c^{j(±p)}(b, b'; λ, w, z) = ∫_0^∞ x^{c+j-1} e^{-λx} 1F1(b; c; wx) 1F1(b'; c±p; zx) dx

evaluated by general series strategies, a catalog of closed forms, finite
sums for polynomial factors, and an independent quadrature oracle.
"""

from .appell import (
    AppellF1Params, AppellF2Params, appell_f1, appell_f1_pfaff, appell_f2_double,
    appell_f2_single_sum, f2_contiguous_shift, f2_reduce_equal_args, f2_reduce_opposite_args,
)
from .errors import (
    AllStrategiesFailed, DivergenceError, DomainError, GordonError, NonConvergenceError,
    NotApplicable, PoleError, PreconditionError, ShiftedDomainError,
)
from .evaluate import (
    StrategyApplicability, all_strategies, eval_2f1_double_sum, eval_auto, eval_f1_sum,
    eval_f2_series, eval_special, validate, whittaker_m,
)
from .identities import check_identity, orthogonality_suite, run_identity_suite
from .params import GordonParams
from .polynomial import (
    PolyGordonParams, check_limit_identities, hermite_gordon, laguerre_gordon, poly_gordon,
    poly_gordon_all_forms, poly_gordon_derivative_ladder,
)
from .quadrature import QuadratureResult, integrand, integrate_gordon
from .relations import RecurrenceId, check_recurrence, default_lattice, sweep_recurrences
from .reports import IdentityReport
from .special import (
    EvalResult, SeriesControl, hyp1f1, hyp2f1, hyp_pfq, ln_gamma, pochhammer,
)

__version__ = "0.1.0"

__all__ = [
    "AllStrategiesFailed", "AppellF1Params", "AppellF2Params", "DivergenceError", "DomainError",
    "EvalResult", "GordonError", "GordonParams", "IdentityReport", "NonConvergenceError",
    "NotApplicable", "PoleError", "PolyGordonParams", "PreconditionError", "QuadratureResult",
    "RecurrenceId", "SeriesControl", "ShiftedDomainError", "StrategyApplicability",
    "all_strategies", "appell_f1", "appell_f1_pfaff", "appell_f2_double", "appell_f2_single_sum",
    "check_identity", "check_limit_identities", "check_recurrence", "default_lattice",
    "eval_2f1_double_sum", "eval_auto", "eval_f1_sum", "eval_f2_series", "eval_special",
    "f2_contiguous_shift", "f2_reduce_equal_args", "f2_reduce_opposite_args", "hermite_gordon",
    "hyp1f1", "hyp2f1", "hyp_pfq", "integrand", "integrate_gordon", "laguerre_gordon", "ln_gamma",
    "orthogonality_suite", "pochhammer", "poly_gordon", "poly_gordon_all_forms",
    "poly_gordon_derivative_ladder", "run_identity_suite", "sweep_recurrences", "validate",
    "whittaker_m",
]
