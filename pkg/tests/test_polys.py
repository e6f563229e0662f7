import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbralab.components.polys import (
    PolyEvalRequest, bpoly, bpoly_dx, bpoly_gf_coeff, bpoly_operational, hermite2,
    hermite_gf_coeff, hermite_operational,
)
from umbralab.errors import DomainError
from umbralab.utils.special_core import SeriesControl, recip_gamma1p

degrees = st.integers(min_value=0, max_value=14)
reals = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
orders = st.floats(min_value=0.6, max_value=6.0, allow_nan=False)


def _close(a, b, scale=1.0):
    return math.isclose(a, b, rel_tol=1e-11, abs_tol=1e-11 * max(1.0, scale))


def test_hermite2_values():
    assert hermite2(2, 3.0, 1.0) == 11.0
    assert hermite2(0, 5.0, -2.0) == 1.0
    assert hermite2(1, 5.0, -2.0) == 5.0
    x, y = 1.7, -0.4
    np.testing.assert_allclose(hermite2(3, x, y), x ** 3 + 6 * x * y, rtol=1e-14)
    np.testing.assert_allclose(hermite2(4, x, y), x ** 4 + 12 * x * x * y + 12 * y * y, rtol=1e-14)


def test_hermite2_reduces_to_physicists_hermite():
    # H_n(2x, -1) is the physicists' Hermite polynomial
    np.testing.assert_allclose(hermite2(3, 2 * 0.7, -1.0), 8 * 0.7 ** 3 - 12 * 0.7, rtol=1e-13)


@settings(deadline=None)
@given(st.integers(min_value=1, max_value=14), reals, reals)
def test_hermite2_recurrence(n, x, y):
    lhs = hermite2(n + 1, x, y)
    rhs = x * hermite2(n, x, y) + 2 * n * y * hermite2(n - 1, x, y)
    assert _close(lhs, rhs, abs(x * hermite2(n, x, y)) + abs(2 * n * y * hermite2(n - 1, x, y)))


@settings(deadline=None)
@given(degrees, reals, reals)
def test_generating_function_matches_explicit_sum(n, x, y):
    explicit = hermite2(n, x, y)
    assert _close(hermite_gf_coeff(n, x, y), explicit, math.factorial(n) * 4 ** n)


@settings(deadline=None)
@given(degrees, reals, reals)
def test_heat_operator_matches_explicit_sum(n, x, y):
    assert _close(hermite_operational(n, x, y), hermite2(n, x, y), math.factorial(n) * 4 ** n)


@settings(deadline=None)
@given(degrees, reals, reals, orders)
def test_bpoly_forms_agree(n, x, y, nu):
    explicit = bpoly(n, x, y, nu)
    scale = math.factorial(n) * 4 ** n
    assert _close(bpoly_gf_coeff(n, x, y, nu), explicit, scale)
    assert _close(bpoly_operational(n, x, y, nu), explicit, scale)


def test_bpoly_low_degrees():
    nu = 2.3
    np.testing.assert_allclose(bpoly(0, 1.0, 1.0, nu), recip_gamma1p(nu - 0.5), rtol=1e-15)
    x, y = 0.8, 1.5
    expected = x * x * recip_gamma1p(nu - 0.5) + 2 * y * recip_gamma1p(nu - 1.5)
    np.testing.assert_allclose(bpoly(2, x, y, nu), expected, rtol=1e-14)


@pytest.mark.parametrize("n", range(0, 8))
def test_bpoly_at_half_order_is_a_monomial(n):
    # phi(-k) vanishes for k >= 1, only the leading term survives
    np.testing.assert_allclose(bpoly(n, 1.3, 2.0, 0.5), 1.3 ** n, rtol=1e-14)


@pytest.mark.parametrize("n", range(1, 9))
def test_bpoly_derivative(n):
    x, y, nu = 0.9, -1.2, 3.7
    np.testing.assert_allclose(bpoly_dx(n, x, y, nu), n * bpoly(n - 1, x, y, nu), rtol=1e-12, atol=1e-12)
    if n >= 2:
        np.testing.assert_allclose(bpoly_dx(n, x, y, nu, order=2), n * (n - 1) * bpoly(n - 2, x, y, nu),
                                   rtol=1e-12, atol=1e-12)
    assert bpoly_dx(n, x, y, nu, order=n + 1) == 0.0


def test_degree_validation():
    with pytest.raises(DomainError):
        hermite2(-1, 0.0, 0.0)
    with pytest.raises(DomainError):
        bpoly(2.5, 0.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        PolyEvalRequest(n=-3, x=0.0, y=1.0)
    with pytest.raises(DomainError):
        bpoly_dx(3, 0.0, 0.0, 1.0, order=-1)


def test_generating_function_respects_max_terms():
    with pytest.raises(DomainError):
        hermite_gf_coeff(20, 1.0, 1.0, SeriesControl(max_terms=10))


def _bpoly_term_sum(n, x, y, nu):
    """Sum of |terms| of the explicit B_n sum; rounding error scales with it."""
    return math.fsum(
        abs(math.comb(n, 2 * k) * math.factorial(2 * k) // math.factorial(k)
            * x ** (n - 2 * k) * y ** k * recip_gamma1p(nu - k - 0.5))
        for k in range(n // 2 + 1)
    )


@pytest.mark.parametrize("n", range(0, 17))
def test_generating_functions_on_random_points(n):
    rng = np.random.default_rng(100 + n)
    points = zip(rng.uniform(-3.0, 3.0, 100), rng.uniform(-3.0, 3.0, 100), rng.uniform(-2.0, 5.0, 100))
    for x, y, nu in points:
        x, y, nu = float(x), float(y), float(nu)
        hermite = hermite2(n, x, y)
        # all terms of H_n(|x|, |y|) are positive
        assert abs(hermite_gf_coeff(n, x, y) - hermite) <= 1e-11 * max(1.0, hermite2(n, abs(x), abs(y)))
        explicit = bpoly(n, x, y, nu)
        assert abs(bpoly_gf_coeff(n, x, y, nu) - explicit) <= 1e-11 * max(1.0, _bpoly_term_sum(n, x, y, nu))


@pytest.mark.parametrize("n", range(2, 9))
def test_bpoly_second_derivative_by_finite_differences(n):
    rng = np.random.default_rng(200 + n)
    h = 1e-4
    for _ in range(10):
        x, y = float(rng.uniform(0.5, 1.5)), float(rng.uniform(0.2, 1.0))
        nu = n + float(rng.uniform(0.6, 3.0))
        second = math.fsum([bpoly(n, x + h, y, nu), -2.0 * bpoly(n, x, y, nu), bpoly(n, x - h, y, nu)]) / (h * h)
        np.testing.assert_allclose(second, n * (n - 1) * bpoly(n - 2, x, y, nu), rtol=1e-5)


@pytest.mark.parametrize("nu", [-1.5, -0.5, 0.3, 2.0, 4.7])
def test_bpoly_boundary_at_zero_y(nu):
    for n in range(0, 9):
        x = 1.3
        assert bpoly(n, x, 0.0, nu) == pytest.approx(x ** n * recip_gamma1p(nu - 0.5), rel=1e-15, abs=0.0)
