import logging
import math

import numpy as np
import pytest
from scipy import special

from umbralab.components import functions
from umbralab.errors import DomainError
from umbralab.utils.special_core import SeriesControl


@pytest.mark.parametrize("nu", [0.0, 1.0, 2.0, 0.5, 3.7])
@pytest.mark.parametrize("x", [0.1, 1.0, 4.5, 12.0])
def test_bessel_j_matches_scipy(nu, x):
    np.testing.assert_allclose(functions.bessel_j(nu, x).value, special.jv(nu, x), atol=1e-11)


def test_bessel_j_integer_order_parity():
    for n in range(4):
        np.testing.assert_allclose(functions.bessel_j(n, -2.5).value,
                                   (-1) ** n * functions.bessel_j(n, 2.5).value, rtol=1e-14)


def test_bessel_j_at_zero():
    assert functions.bessel_j(0, 0.0).value == 1.0
    assert functions.bessel_j(2.5, 0.0).value == 0.0
    # J_nu(0) is unbounded for -1 < nu < 0
    for nu in (-0.5, -0.9, -0.1):
        with pytest.raises(DomainError):
            functions.bessel_j(nu, 0.0)
    x = 0.8
    np.testing.assert_allclose(functions.bessel_j(-0.5, x).value, math.sqrt(2.0 / (math.pi * x)) * math.cos(x),
                               rtol=1e-13)


def _cancellation_atol(x):
    # alternating series lose accuracy in proportion to e^|x|
    return 1e-14 * math.exp(abs(x))


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5])
def test_wright_bessel_bridge(nu):
    rng = np.random.default_rng(5)
    for x in rng.uniform(0.0, 10.0, 50):
        x = float(x)
        half = x / 2.0
        bridged = half ** nu * functions.wright_w(1.0, nu + 1.0, -half * half).value
        np.testing.assert_allclose(functions.bessel_j(nu, x).value, bridged,
                                   rtol=1e-10, atol=_cancellation_atol(x), err_msg=str(x))


@pytest.mark.parametrize("n", range(0, 6))
def test_spherical_bridge(n):
    rng = np.random.default_rng(6)
    for x in rng.uniform(0.0, 20.0, 40):
        x = float(x)
        bridged = math.sqrt(math.pi / (2.0 * x)) * functions.bessel_j(n + 0.5, x).value
        np.testing.assert_allclose(functions.sph_bessel(n, x).value, bridged,
                                   rtol=1e-10, atol=_cancellation_atol(x), err_msg=str(x))


def test_bessel_j_scaled():
    for nu in (0.0, 1.5, 3.0):
        for u in (0.5, 2.0, 6.0):
            np.testing.assert_allclose(functions.bessel_j_scaled(nu, u).value,
                                       special.jv(nu, u) / u ** nu, rtol=1e-11, atol=1e-13)
    np.testing.assert_allclose(functions.bessel_j_scaled(1.0, 0.0).value, 0.5, rtol=1e-15)
    # even in u
    assert functions.bessel_j_scaled(2.0, -3.0).value == functions.bessel_j_scaled(2.0, 3.0).value


@pytest.mark.parametrize("n", range(0, 6))
def test_sph_bessel_matches_scipy(n):
    for x in (0.3, 2.0, 9.0):
        np.testing.assert_allclose(functions.sph_bessel(n, x).value, special.spherical_jn(n, x),
                                   rtol=1e-11, atol=1e-13)
    assert functions.sph_bessel(n, 0.0).value == (1.0 if n == 0 else 0.0)


def test_sph_bessel_closed_forms():
    x = 1.7
    np.testing.assert_allclose(functions.sph_bessel(0, x).value, math.sin(x) / x, rtol=1e-13)
    np.testing.assert_allclose(functions.sph_bessel(1, x).value,
                               math.sin(x) / x ** 2 - math.cos(x) / x, rtol=1e-13)


def test_f_n_combo():
    n, x, a, b = 3, 2.2, 1.5, -0.5
    expected = sum(math.comb(n, k) * a ** (n - k) * b ** k * special.jv(n - k, x) for k in range(n + 1))
    result = functions.f_n_combo(n, x, a, b)
    np.testing.assert_allclose(result.value, expected, rtol=1e-12)
    assert result.terms_used > 0
    assert not result.truncation_flag
    # a = 1, b = 0 leaves J_n
    np.testing.assert_allclose(functions.f_n_combo(2, x, 1.0, 0.0).value, special.jv(2, x), rtol=1e-13)


@pytest.mark.parametrize("nu", [0.0, 1.0, 0.5, -0.5, 2.3])
@pytest.mark.parametrize("x", [0.5, 3.0, 12.0])
def test_struve_matches_scipy(nu, x):
    np.testing.assert_allclose(functions.struve_h(nu, x).value, special.struve(nu, x), rtol=1e-10, atol=1e-11)


@pytest.mark.parametrize("x", [0.4, math.pi, 7.5])
def test_struve_half_integer_closed_forms(x):
    root = math.sqrt(2.0 / (math.pi * x))
    np.testing.assert_allclose(functions.struve_h(0.5, x).value, root * (1.0 - math.cos(x)), rtol=1e-12)
    np.testing.assert_allclose(functions.struve_h(-0.5, x).value, root * math.sin(x), rtol=1e-12, atol=1e-15)


@pytest.mark.parametrize("nu", [-1.2, -0.5, 0.0, 0.5, 1.0, 2.3])
def test_struve_leading_behaviour(nu):
    x = 1e-4
    limit = 1.0 / (2.0 ** (nu + 1.0) * special.gamma(1.5) * special.gamma(nu + 1.5))
    np.testing.assert_allclose(functions.struve_h(nu, x).value / x ** (nu + 1.0), limit, rtol=1e-6)


def test_struve_at_zero():
    assert functions.struve_h(0.0, 0.0).value == 0.0
    with pytest.raises(DomainError):
        functions.struve_h(-1.2, 0.0)


@pytest.mark.parametrize("x", [-3.0, 0.0, 0.7, 2.5])
def test_wright_with_zero_alpha_is_exponential(x):
    beta = 2.5
    np.testing.assert_allclose(functions.wright_w(0.0, beta, x).value, math.exp(x) / math.gamma(beta), rtol=1e-13)


@pytest.mark.parametrize("x", [0.5, 4.0, 10.0])
def test_wright_bessel_reduction(x):
    np.testing.assert_allclose(functions.wright_w(1.0, 1.0, -x).value, special.j0(2.0 * math.sqrt(x)),
                               rtol=1e-11, atol=1e-13)


@pytest.mark.parametrize("z", [0.5, 1.0, 2.0])
def test_wright_negative_order_gaussian(z):
    np.testing.assert_allclose(functions.wright_w(-0.5, 0.5, -z).value,
                               math.exp(-z * z / 4.0) / math.sqrt(math.pi), rtol=1e-12)


def test_mittag_leffler_reductions():
    for x in (-1.0, 0.3, 2.0):
        np.testing.assert_allclose(functions.mittag_leffler(1.0, 1.0, x).value, math.exp(x), rtol=1e-14)
        np.testing.assert_allclose(functions.mittag_leffler(2.0, 1.0, -x * x).value, math.cos(x), rtol=1e-13)
    np.testing.assert_allclose(functions.mittag_leffler(0.0, 1.0, 0.5).value, 2.0, rtol=1e-14)
    np.testing.assert_allclose(functions.mittag_leffler(0.5, 1.0, 0.5).value,
                               math.exp(0.25) * special.erfc(-0.5), rtol=1e-13)


@pytest.mark.parametrize("x", [-0.5, 0.5, 2.0])
def test_mittag_leffler_with_vanishing_leading_terms(x):
    # E_{1,-2}(x) = x^3 e^x: the k = 0, 1, 2 terms are 1/Gamma at its poles
    result = functions.mittag_leffler(1.0, -2.0, x)
    assert not result.truncation_flag
    assert result.terms_used > 3
    np.testing.assert_allclose(result.value, x ** 3 * math.exp(x), rtol=1e-13)
    # E_{2,0}(x) = sqrt(x) sinh(sqrt(x)) for x > 0
    if x > 0:
        root = math.sqrt(x)
        np.testing.assert_allclose(functions.mittag_leffler(2.0, 0.0, x).value, root * math.sinh(root), rtol=1e-13)


def test_wright_with_vanishing_leading_terms():
    # W_{1,-2}(x) = sum_{k>=3} x^k / (k! (k-3)!)
    for x in (1.0, -1.0, 3.0):
        expected = math.fsum(x ** k / (math.factorial(k) * math.factorial(k - 3)) for k in range(3, 60))
        np.testing.assert_allclose(functions.wright_w(1.0, -2.0, x).value, expected, rtol=1e-13)
    np.testing.assert_allclose(functions.wright_w(1.0, -2.0, 1.0).value, 0.21273995923985, rtol=1e-12)


def test_series_at_zero_with_a_pole_in_the_first_term():
    for result in (functions.wright_w(1.0, -2.0, 0.0), functions.mittag_leffler(0.5, 0.0, 0.0)):
        assert result.value == 0.0
        assert not result.truncation_flag
    assert functions.wright_w(0.5, 3.0, 0.0).value == 0.5


def test_truncation_is_flagged(caplog):
    with caplog.at_level(logging.WARNING, logger="umbralab.components.functions"):
        result = functions.bessel_j(0.0, 5.0, SeriesControl(max_terms=3))
    assert result.truncation_flag
    assert result.terms_used == 3
    assert "max_terms" in caplog.text


@pytest.mark.parametrize("call", [
    lambda: functions.bessel_j(-1.0, 1.0),
    lambda: functions.bessel_j(0.5, -1.0),
    lambda: functions.bessel_j(0.0, 31.0),
    lambda: functions.sph_bessel(-1, 1.0),
    lambda: functions.sph_bessel(1.5, 1.0),
    lambda: functions.f_n_combo(-2, 1.0, 1.0, 1.0),
    lambda: functions.struve_h(-1.5, 1.0),
    lambda: functions.struve_h(0.0, -1.0),
    lambda: functions.wright_w(-1.5, 0.5, 0.1),
    lambda: functions.wright_w(-1.0, 0.5, 1.0),
    lambda: functions.wright_w(-0.5, 1.0, 0.1),
    lambda: functions.mittag_leffler(-0.5, 1.0, 0.1),
    lambda: functions.mittag_leffler(0.0, 1.0, 1.0),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()
