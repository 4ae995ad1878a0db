import dataclasses
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gordon.errors import GordonError, NotApplicable
from gordon.polynomial import (
    HERMITE_KINDS, LIMIT_IDS, PolyGordonParams, check_limit_identities, hermite_as_gordon,
    hermite_gordon, ladder_as_gordon, laguerre_as_gordon, laguerre_gordon, poly_gordon,
    poly_gordon_all_forms, poly_gordon_derivative_ladder,
)
from gordon.quadrature import integrate_gordon

PP = PolyGordonParams


def oracle(G):
    return integrate_gordon(G, 1e-12).value


def agree(v, ref, tol=1e-10):
    return abs(v - ref) <= max(tol * abs(ref), 1e-12)


# (n, m, c, j, p, sign, λ, w, z) with the form each point was chosen for
CATALOG = [
    (PP(3, 2, 1.5, 0, 0, 1, 1.0, 1.0, 1.0), "SPECIAL-64"),
    (PP(3, 0, 1.5, 3, 0, 1, 2.0, 0.0, 2.0), "SPECIAL-72"),
    (PP(3, 0, 1.5, 1, 2, 1, 2.0, 0.0, 2.0), "SPECIAL-70"),
    (PP(3, 0, 1.5, 2, 2, 1, 2.0, 0.0, 0.7), "SPECIAL-71"),
    (PP(3, None, 1.5, 1, 1, 1, 2.0, 0.3, 0.7, b=0.0), "SPECIAL-69"),
    (PP(4, 2, 1.5, 0, 2, 1, 1.0, 1.0, 1.0), "SPECIAL-49"),
    (PP(3, 3, 1.5, 1, 0, 1, 1.0, 1.0, 1.0), "SPECIAL-53"),
    (PP(3, 3, 3.5, -2, 0, 1, 1.0, 1.0, 1.0), "SPECIAL-56"),
    (PP(3, 3, 1.5, 2, 0, 1, 1.25, 1.25, 1.25), "SPECIAL-52"),
    (PP(2, 4, 1.5, 2, 1, 1, 1.25, 1.25, 0.625), "SPECIAL-68"),
    (PP(3, 3, 1.5, 3, 0, 1, 1.25, 1.25, 0.625), "SPECIAL-67"),
    (PP(2, 2, 1.5, 4, 0, 1, 1.25, 1.25, 0.625), "SPECIAL-66"),
    (PP(2, 3, 1.5, 4, 1, 1, 1.25, 1.25, 1.25), "SPECIAL-47"),
    (PP(2, 3, 1.5, 4, 1, 1, 1.25, 0.375, 1.25), "SPECIAL-45"),
    (PP(2, 3, 1.5, 4, 1, -1, 1.25, 1.25, 0.375), "SPECIAL-46"),
    (PP(2, 3, 1.5, 2, 1, 1, 1.0, 1.375, 0.625), "SPECIAL-59"),
    (PP(2, 2, 1.5, 1, 0, 1, 1.25, 0.375, 0.875), "SPECIAL-65"),
    (PP(2, 3, 1.5, 0, 0, 1, 1.25, 0.375, 0.875), "SPECIAL-63"),
    (PP(2, 3, 1.5, 1, 2, -1, 1.25, 0.375, 0.875), "SPECIAL-42"),
    (PP(3, None, 1.5, 1, 2, 1, 1.25, 0.375, 0.875, b=0.7), "SPECIAL-40"),
    (PP(3, None, 1.5, 1, 2, 1, 1.25, -2.5, 0.875, b=0.7), "SPECIAL-40"),
    (PP(None, 3, 1.5, 1, 2, 1, 1.25, 0.875, 0.375, b_prime=0.7), "SPECIAL-40-swap"),
]


@pytest.mark.parametrize("P, form", CATALOG, ids=[f for _, f in CATALOG])
def test_every_applicable_form_matches_oracle(P, form):
    ref = oracle(P.to_gordon())
    forms = poly_gordon_all_forms(P)
    assert form in forms
    for label, r in forms.items():
        assert agree(r.value, ref), (label, r.value, ref)
    assert agree(poly_gordon(P).value, ref)


def test_anchor_values():
    assert poly_gordon(PP(1, 1, 1.0, 1, 0, 1, 1.0, 1.0, 1.0), form="53").value == pytest.approx(3.0, abs=1e-12)
    assert poly_gordon(PP(1, 0, 1.0, 1, 0, 1, 1.0, 0.0, 1.0), form="72").value == pytest.approx(-1.0, abs=1e-12)
    assert hermite_gordon(PP(0, 0, 0.5, 0, 0, 1, 4.0, 4.0, 4.0)).value == pytest.approx(
        math.sqrt(math.pi) / 2, abs=1e-12)
    assert hermite_gordon(PP(1, 1, 0.5, 0, 0, 1, 1.0, 1.0, 1.0)).value == pytest.approx(
        -2 * math.sqrt(math.pi), rel=1e-13)
    assert laguerre_gordon(PP(1, 0, 1.0, 0, 0, 1, 2.0, 2.0, 0.5)).value == pytest.approx(0.375, rel=1e-14)
    assert poly_gordon(PP(2, 0, 1.0, 1, 1, 1, 2.0, 0.0, 1.0)).value == 0.0625


def test_orthogonality_is_exact_rational():
    # with c = 1, λ = 1 the finite sum is evaluated in rationals
    for n in range(6):
        for m in range(6):
            v = poly_gordon(PP(n, m, 1.0, 0, 0, 1, 1.0, 1.0, 1.0), form="64").value
            assert v == (1.0 if m == n else 0.0)


EQ70_VANISHING = [(n, j, p, sign) for n in range(1, 5) for p in range(3) for sign in (1, -1)
                  for j in range(sign * p, sign * p + n) if not (sign == -1 and p == 0)][:20]


@pytest.mark.parametrize("n, j, p, sign", EQ70_VANISHING)
def test_eq70_exact_zero_when_degree_exceeds_shift(n, j, p, sign):
    c = 2.5
    P = PP(n, 0, c, j, p, sign, 1.5, 0.0, 1.5)
    if c + j <= 0:
        pytest.fail("combination outside the convergence region")
    r = poly_gordon(P, form="70")
    assert r.value == 0.0 and r.exact


@pytest.mark.parametrize("n, j, p", [(2, 0, 1), (3, 1, 2), (3, 0, 2), (4, -1, 1)])
def test_eq70_negative_shift_is_not_zero(n, j, p):
    # j - q < 0: the finite value (q-j)_n (...) is nonzero and matches quadrature
    P = PP(n, 0, 2.5, j, p, 1, 1.5, 0.0, 1.5)
    r = poly_gordon(P, form="70")
    assert r.value != 0.0
    assert agree(r.value, oracle(P.to_gordon()))


def test_eq70_matches_rational_value():
    n, j, q, c = 3, 1, 2, 2.5
    expected = math.gamma(c + j) / 1.5 ** (c + j) * float(
        Fraction(math.prod(q - j + i for i in range(n)))
        / Fraction(math.prod(Fraction(9, 2) + i for i in range(n))))
    assert poly_gordon(PP(n, 0, c, j, q, 1, 1.5, 0.0, 1.5), form="70").value == pytest.approx(
        expected, rel=1e-14)


LADDERS = [
    PP(4, None, 1.5, 1, 1, 1, 1.25, 0.375, 0.875, b=0.7, s=2),
    PP(4, None, 1.5, 1, 1, -1, 1.25, -0.375, 0.875, b=0.7, s=1),
    PP(4, 3, 1.5, 1, 1, 1, 1.25, 0.375, 0.875, s=2, l=1),
    PP(4, 3, 1.5, 1, 1, 1, 1.25, 0.375, 0.875, s=0, l=2),
    PP(4, 3, 1.5, 1, 0, 1, 1.25, 0.375, 0.875, s=3, l=0),
    PP(4, None, 1.5, 1, 1, 1, 1.25, 0.375, 0.875, b=0.7, s=2, mu=2),
]


@pytest.mark.parametrize("P", LADDERS)
@pytest.mark.parametrize("family", ["gordon", "laguerre"])
def test_derivative_ladders_match_oracle(P, family):
    if family == "gordon" and P.mu:
        with pytest.raises(GordonError):
            poly_gordon_derivative_ladder(P, family=family)
        return
    r = poly_gordon_derivative_ladder(P, family=family)
    coef, G = ladder_as_gordon(P, family)
    assert agree(r.value, coef * oracle(G))


LAGUERRE = [
    PP(2, 2, 1.5, 0, 0, 1, 1.0, 1.0, 1.0), PP(3, 2, 1.5, 0, 0, 1, 1.0, 1.0, 0.375),
    PP(1, 3, 1.5, 0, 0, 1, 1.0, 1.0, 0.375), PP(3, 0, 1.5, 2, 1, 1, 1.25, 0.0, 1.25),
    PP(3, 0, 1.5, 4, 1, 1, 1.25, 0.0, 1.25), PP(3, 2, 1.5, 3, 1, 1, 1.25, 1.25, 0.5),
    PP(3, 2, 1.5, 3, 3, 1, 1.25, 1.25, 0.5), PP(3, 2, 1.5, 1, 1, 1, 1.25, 0.375, 0.5),
    PP(3, None, 1.5, 1, 1, 1, 1.25, 0.375, 0.5, b=0.3),
]


@pytest.mark.parametrize("P", LAGUERRE)
def test_laguerre_forms_match_oracle(P):
    coef, G = laguerre_as_gordon(P)
    ref = coef * oracle(G)
    used = 0
    for form in ("85", "84", "76", "75", "83", "82", "79", "74"):
        try:
            r = laguerre_gordon(P, form=form)
        except (NotApplicable, GordonError):
            continue
        used += 1
        assert agree(r.value, ref), (form, r.value, ref)
    assert used >= 1 and agree(laguerre_gordon(P).value, ref)


HERMITE = [
    (PP(2, 2, 0.5, 0, 1, 1, 1.5, 1.5, 1.5), "laguerre", "SPECIAL-89"),
    (PP(2, 1, 0.5, 1, 1, 1, 1.5, 1.5, 0.75), "laguerre", "SPECIAL-87"),
    (PP(2, 2, 0.5, 2, 1, 1, 1.5, 1.5, 0.75), "laguerre", "SPECIAL-87"),
    (PP(2, 3, 0.5, 0, 0, 1, 1.5, 1.5, 1.5), "laguerre", "SPECIAL-86"),
    (PP(2, 1, 0.5, 2, 1, -1, 1.5, 0.5, 0.75), "laguerre", "SPECIAL-86"),
    (PP(2, 2, 0.5, 3, 1, 1, 1.5, 0.5, 1.5), "even-odd", "SPECIAL-91"),
    (PP(2, 2, 0.5, 1, 1, 1, 1.5, 0.5, 0.75), "even-odd", "SPECIAL-90"),
    (PP(2, 2, 0.5, 1, 0, 1, 1.5, 0.5, 0.75), "even-even", "SPECIAL-92"),
]


@pytest.mark.parametrize("P, kind, tag", HERMITE)
def test_hermite_kinds_match_oracle(P, kind, tag):
    assert kind in HERMITE_KINDS
    r = hermite_gordon(P, kind=kind)
    coef, G = hermite_as_gordon(P, kind)
    assert r.strategy == tag
    assert agree(r.value, coef * oracle(G), 1e-9)


@pytest.mark.parametrize("which, sample", [
    ("Eq51", dict(n=3, j=5, c=1.5)), ("Eq57", dict(n=2, m=3, j=4, c=1.5, q=1, x=0.3)),
    ("Eq88", dict(n=3, q=1)), ("Eq88", dict(n=4, q=-1)),
    ("Eq64-limit", dict(n=3, m=3, c=1.5)), ("Eq64-limit", dict(n=3, m=2, c=1.5)),
])
def test_limit_identities(which, sample):
    assert which in LIMIT_IDS
    rep = check_limit_identities(which, sample)
    assert rep.status == "pass", rep


degree = st.integers(0, 5)


@given(degree, degree, st.floats(0.6, 3.0), st.integers(0, 3), st.integers(-2, 2),
       st.sampled_from([0.5, 1.0, 2.0]), st.floats(0.05, 0.9), st.floats(0.05, 0.9))
def test_swap_is_an_involution_of_the_value(n, m, c, j, q, lam, u, v):
    if c + q <= 0 or j - q < 0:
        return
    P = PP(n, m, c, j, abs(q), 1 if q >= 0 else -1, lam, u * lam, v * lam)
    a = poly_gordon(P, form="42").value
    b = poly_gordon(P.swap(), form="42").value
    assert abs(a - b) <= 1e-10 * max(abs(a), abs(b), 1e-12)
    back = P.swap().swap()
    assert dataclasses.replace(back, c=P.c) == P and back.c == pytest.approx(P.c, rel=1e-15)


@given(degree, st.floats(0.6, 3.0), st.integers(0, 2), st.floats(0.5, 2.0),
       st.floats(0.05, 0.9), st.floats(0.05, 0.9))
def test_equal_degree_f1_form_matches_42(n, c, j, lam, u, v):
    P = PP(n, n, c, j, 0, 1, lam, u * lam, v * lam)
    a, b = poly_gordon(P, form="65").value, poly_gordon(P, form="42").value
    assert abs(a - b) <= 1e-10 * max(abs(a), abs(b), 1e-12)
