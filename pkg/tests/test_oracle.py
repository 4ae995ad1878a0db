import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gordon.errors import DomainError
from gordon.params import GordonParams
from gordon.quadrature import integrand, integrate_gordon
from gordon.special import hyp1f1

from frozen_values import GORDON

FROZEN = GORDON


@pytest.mark.parametrize("args, expected", FROZEN)
def test_oracle_frozen(args, expected):
    r = integrate_gordon(GordonParams(*args))
    assert r.converged
    assert r.value == pytest.approx(expected, rel=1e-10)
    assert r.err_est <= 1e-9 * abs(expected)


def test_integrand_matches_definition():
    P = GordonParams(0.3, 1.7, 2.5, 1, 0, 1, 1.5, 0.4, -0.3)
    x = 2.25
    direct = (x ** 2.5 * math.exp(-1.5 * x) * hyp1f1(0.3, 2.5, 0.4 * x).value
              * hyp1f1(1.7, 2.5, -0.3 * x).value)
    assert integrand(P, x) == pytest.approx(direct, rel=1e-13)
    arr = integrand(P, np.array([0.5, x]))
    assert arr.shape == (2,) and arr[1] == pytest.approx(direct, rel=1e-13)


def test_integrand_rejects_negative_x():
    with pytest.raises(DomainError):
        integrand(GordonParams(0.3, 1.7, 2.5, 1, 0, 1, 1.5, 0.4, -0.3), -1.0)


def test_growth_beyond_decay_is_refused():
    with pytest.raises(DomainError):
        integrate_gordon(GordonParams(0.3, 1.7, 2.5, 1, 0, 1, 1.0, 0.6, 0.5))


def test_integrable_endpoint_singularity():
    # c + j = 0.3: the integrand is unbounded at 0 but integrable
    P = GordonParams(0.0, 0.0, 0.3, 0, 0, 1, 2.0, 0.0, 0.0)
    assert integrate_gordon(P).value == pytest.approx(math.gamma(0.3) / 2.0 ** 0.3, rel=1e-9)


@given(st.floats(0.5, 12.0), st.floats(0.1, 10.0))
def test_gamma_baseline(alpha, lam):
    P = GordonParams(0.0, 0.0, alpha, 0, 0, 1, lam, 0.0, 0.0)
    assert integrate_gordon(P).value == pytest.approx(
        math.exp(math.lgamma(alpha) - alpha * math.log(lam)), rel=1e-9)
