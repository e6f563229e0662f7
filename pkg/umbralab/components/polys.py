"""
Two-variable Hermite polynomials H_n(x, y) and the Hermite-like B_n(x, y; nu).

    H_n(x, y)     = n! sum_k x^(n-2k) y^k / ((n-2k)! k!)
    B_n(x, y; nu) = n! sum_k x^(n-2k) y^k / ((n-2k)! k! Gamma(nu - k + 1/2))

Sums run in increasing k and are accumulated with math.fsum.
"""

import math
from dataclasses import dataclass
from typing import Callable, List

from umbralab.errors import DomainError
from umbralab.utils.special_core import DEFAULT_CONTROL, SeriesControl, recip_gamma1p


@dataclass(frozen=True)
class PolyEvalRequest:
    n: int
    x: float
    y: float
    nu: float = 0.5

    def __post_init__(self):
        _check_degree(self.n)


def _check_degree(n: int) -> None:
    if n < 0 or n != int(n):
        raise DomainError(f"degree must be a non-negative integer, got {n}")


def _hermite_weight(n: int, k: int) -> int:
    """n! / ((n-2k)! k!), exact."""
    return math.factorial(n) // (math.factorial(n - 2 * k) * math.factorial(k))


def _falling(n: int, m: int) -> int:
    """n (n-1) ... (n-m+1)"""
    return math.perm(n, m) if m <= n else 0


def hermite2(n: int, x: float, y: float) -> float:
    _check_degree(n)
    return math.fsum(
        _hermite_weight(n, k) * x ** (n - 2 * k) * y ** k
        for k in range(n // 2 + 1)
    )


def bpoly(n: int, x: float, y: float, nu: float) -> float:
    _check_degree(n)
    return math.fsum(
        _hermite_weight(n, k) * x ** (n - 2 * k) * y ** k * recip_gamma1p(nu - k - 0.5)
        for k in range(n // 2 + 1)
    )


# Generating-function coefficient extraction

def _exp_coefficients(x: float, count: int) -> List[float]:
    """Taylor coefficients x^j / j! of e^(x t), j < count."""
    coeffs = [1.0]
    for j in range(1, count):
        coeffs.append(coeffs[-1] * x / j)
    return coeffs


def _even_coefficients(y: float, count: int, weight: Callable[[int], float]) -> List[float]:
    """Coefficients of sum_k weight(k) y^k t^(2k) / k!, as a dense list of length count."""
    coeffs = [0.0] * count
    power = 1.0
    for k in range((count - 1) // 2 + 1):
        if k > 0:
            power = power * y / k
        coeffs[2 * k] = power * weight(k)
    return coeffs


def _gf_coefficient(n: int, x: float, y: float, weight: Callable[[int], float], trunc: SeriesControl) -> float:
    """n! [t^n] of e^(x t) * sum_k weight(k) (y t^2)^k / k!  (Cauchy product)."""
    _check_degree(n)
    if n + 1 > trunc.max_terms:
        raise DomainError(f"degree {n} needs {n + 1} series terms, max_terms is {trunc.max_terms}")
    left = _exp_coefficients(x, n + 1)
    right = _even_coefficients(y, n + 1, weight)
    coefficient = math.fsum(left[j] * right[n - j] for j in range(n + 1))
    return math.factorial(n) * coefficient


def hermite_gf_coeff(n: int, x: float, y: float, trunc: SeriesControl = DEFAULT_CONTROL) -> float:
    """n! [t^n] e^(x t + y t^2)"""
    return _gf_coefficient(n, x, y, lambda k: 1.0, trunc)


def bpoly_gf_coeff(n: int, x: float, y: float, nu: float, trunc: SeriesControl = DEFAULT_CONTROL) -> float:
    """n! [t^n] e^(x t) W_{-1, nu+1/2}(y t^2)"""
    return _gf_coefficient(n, x, y, lambda k: recip_gamma1p(nu - 0.5 - k), trunc)


# Heat-operator forms

def hermite_operational(n: int, x: float, y: float) -> float:
    """exp(y d^2/dx^2) x^n, expanded: sum_k y^k/k! * d^(2k)/dx^(2k) x^n."""
    _check_degree(n)
    return math.fsum(
        y ** k / math.factorial(k) * _falling(n, 2 * k) * x ** (n - 2 * k)
        for k in range(n // 2 + 1)
    )


def bpoly_operational(n: int, x: float, y: float, nu: float) -> float:
    """exp(c^-1 y d^2/dx^2) x^n phi(nu - 1/2), expanded termwise."""
    _check_degree(n)
    return math.fsum(
        y ** k / math.factorial(k) * _falling(n, 2 * k) * x ** (n - 2 * k) * recip_gamma1p(nu - 0.5 - k)
        for k in range(n // 2 + 1)
    )


def bpoly_dx(n: int, x: float, y: float, nu: float, order: int = 1) -> float:
    """d^order/dx^order of B_n(x, y; nu), differentiating the explicit sum term by term."""
    _check_degree(n)
    if order < 0:
        raise DomainError(f"derivative order must be >= 0, got {order}")
    terms = []
    for k in range(n // 2 + 1):
        power = n - 2 * k
        if power < order:
            continue
        terms.append(
            _hermite_weight(n, k) * _falling(power, order) * x ** (power - order) * y ** k
            * recip_gamma1p(nu - k - 0.5)
        )
    return math.fsum(terms)
