"""Reference values computed with mpmath at 30 significant digits."""

# (b, b', c, j, p, sign, λ, w, z) -> Gordon integral by mpmath.quad
GORDON = [
    ((0.3, 1.7, 2.5, 1, 0, 1, 1.5, 0.4, -0.3), 0.58826513314233585772),
    ((-0.6, 0.9, 1.3, 2, 1, 1, 2.0, -0.5, 0.7), 0.69180635108914163362),
    ((1.2, -0.4, 3.1, 0, 1, -1, 1.0, 0.3, 0.25), 2.7062490562290092907),
    ((0.7, 2.2, 0.8, 3, 2, 1, 3.0, 1.1, -0.9), 0.11395624848466217888),
]
