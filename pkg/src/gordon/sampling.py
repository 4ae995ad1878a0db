"""Seeded random parameter points for sweeps and property checks."""

from __future__ import annotations

import numpy as np

from .params import GordonParams


def _r(rng, lo, hi):
    # six decimals keep points printable and exactly reproducible from JSON
    return round(float(rng.uniform(lo, hi)), 6)


def _noninteger(rng, lo, hi):
    while True:
        x = _r(rng, lo, hi)
        if x != int(x):
            return x


def random_point(rng: np.random.Generator, ratio: float = 0.8, j_ge_p: bool = True,
                 sign: int | None = None) -> GordonParams:
    """A generic point with |w| + |z| <= ratio * λ.

    b, b' and c avoid integers so that no closed-form pattern applies by
    accident and every 1F1 is non-terminating. With ``j_ge_p`` the finite
    sums over j ∓ p are nonempty for both signs.
    """
    lam = _r(rng, 0.5, 4.0)
    while True:
        w, z = _r(rng, -ratio, ratio) * lam, _r(rng, -ratio, ratio) * lam
        if 0 < abs(w) + abs(z) <= ratio * lam and w != 0 and z != 0:
            break
    p = int(rng.integers(0, 3))
    j = p + int(rng.integers(0, 3)) if j_ge_p else int(rng.integers(-1, 3))
    s = sign if sign is not None else (1 if rng.random() < 0.5 else -1)
    c = _noninteger(rng, 0.6, 4.0)
    if c + j <= 0:
        c += 2.0
    if s < 0 and float(c - p).is_integer():
        c += 0.25
    b = _noninteger(rng, -1.5, 2.5)
    bp = _noninteger(rng, -1.5, 2.5)
    return GordonParams(b, bp, c, j, p, s, lam, w, z)


def random_points(seed: int, count: int, **kw) -> list[GordonParams]:
    rng = np.random.default_rng(seed)
    return [random_point(rng, **kw) for _ in range(count)]
