"""Exception hierarchy shared by every evaluator.

Each class carries a short ``code`` so that front ends can emit structured
error records without string matching on messages.
"""


class GordonError(Exception):
    code = "ERROR"


class DomainError(GordonError, ValueError):
    code = "DOMAIN"


class PoleError(GordonError):
    code = "POLE"


class DivergenceError(GordonError):
    code = "DIVERGENCE"


class NonConvergenceError(GordonError):
    code = "NON-CONVERGENCE"


class PreconditionError(GordonError):
    code = "PRECONDITION"


class NotApplicable(GordonError):
    """Raised by pattern-matched formulas; a dispatcher should fall through."""

    code = "NOT-APPLICABLE"


class ShiftedDomainError(GordonError):
    code = "SHIFTED-DOMAIN"


class AllStrategiesFailed(GordonError):
    code = "ALL-STRATEGIES-FAILED"

    def __init__(self, reasons):
        self.reasons = dict(reasons)
        detail = "; ".join(f"{k}: {v}" for k, v in self.reasons.items())
        super().__init__(f"no strategy succeeded ({detail})")
