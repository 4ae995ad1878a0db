"""Parameter tuple for J_c^{j(±p)}(b, b'; λ, w, z)."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .special import is_nonpositive_integer


@dataclass(frozen=True)
class GordonParams:
    """Integral of x^{c+j-1} e^{-λx} 1F1(b; c; wx) 1F1(b'; c+q; zx) over (0, ∞),
    with q = sign * p.

    Construction never raises on domain problems; ``validate`` reports them.
    """

    b: float
    b_prime: float
    c: float
    j: int = 0
    p: int = 0
    sign: int = 1
    lam: float = 1.0
    w: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        if int(self.j) != self.j or int(self.p) != self.p:
            raise TypeError("j and p must be integers")
        if self.p < 0:
            raise ValueError("p must be nonnegative")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "j", int(self.j))
        object.__setattr__(self, "p", int(self.p))
        for name in ("b", "b_prime", "c", "lam", "w", "z"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_signed(cls, b, b_prime, c, j, q, lam, w, z) -> "GordonParams":
        q = int(q)
        return cls(b, b_prime, c, j, abs(q), 1 if q >= 0 else -1, lam, w, z)

    @property
    def q(self) -> int:
        return self.sign * self.p

    @property
    def alpha(self) -> float:
        return self.c + self.j

    @property
    def cq(self) -> float:
        return self.c + self.q

    @property
    def b_terminates(self) -> bool:
        return is_nonpositive_integer(self.b)

    @property
    def bp_terminates(self) -> bool:
        return is_nonpositive_integer(self.b_prime)

    @property
    def strictly_convergent(self) -> bool:
        return abs(self.w) + abs(self.z) < self.lam

    def shifted(self, db=0.0, dbp=0.0, dc=0.0, dj=0, dq=0) -> "GordonParams":
        """Shift the parameters; dq moves the signed offset q."""
        return GordonParams.from_signed(self.b + db, self.b_prime + dbp, self.c + dc,
                                        self.j + dj, self.q + dq, self.lam, self.w, self.z)

    def replace(self, **kw) -> "GordonParams":
        return replace(self, **kw)

    def as_dict(self) -> dict:
        return {"b": self.b, "b_prime": self.b_prime, "c": self.c, "j": self.j,
                "p": self.p, "sign": self.sign, "lambda": self.lam,
                "w": self.w, "z": self.z}
