"""
Series evaluators for the Bessel-type functions used by the identities.

All of them sum their defining power series under a SeriesControl. Arguments
are capped at |x| <= 30 for the Bessel/Struve families; larger arguments
belong to umbralab.oracle.integrands.
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterator

from umbralab.errors import DomainError
from umbralab.utils.special_core import DEFAULT_CONTROL, SeriesControl, recip_gamma1p, sum_series

logger = logging.getLogger(__name__)

MAX_SERIES_ARGUMENT = 30.0


@dataclass(frozen=True)
class FnEvalResult:
    value: float
    terms_used: int
    truncation_flag: bool = False

    def __float__(self) -> float:
        return self.value


def _result(value: float, used: int, truncated: bool, name: str) -> FnEvalResult:
    if truncated:
        logger.warning(f"{name}: series hit max_terms after {used} terms; value is suspect")
    return FnEvalResult(value=value, terms_used=used, truncation_flag=truncated)


def _is_integer(v: float) -> bool:
    return v == math.floor(v)


def _check_argument(x: float, name: str) -> None:
    if abs(x) > MAX_SERIES_ARGUMENT:
        raise DomainError(f"{name}: series evaluation is limited to |x| <= {MAX_SERIES_ARGUMENT}, got {x}")


# Bessel family

def _bessel_terms(nu: float, x: float) -> Iterator[float]:
    half = x / 2.0
    ratio = -half * half
    term = half ** nu * recip_gamma1p(nu)
    k = 0
    while True:
        yield term
        k += 1
        term = term * ratio / (k * (nu + k))


def bessel_j(nu: float, x: float, trunc: SeriesControl = DEFAULT_CONTROL) -> FnEvalResult:
    """J_nu(x) = sum_k (-1)^k (x/2)^(nu+2k) / (k! Gamma(nu+k+1))"""
    if not nu > -1.0:
        raise DomainError(f"bessel_j requires nu > -1, got {nu}")
    if x < 0.0 and not _is_integer(nu):
        raise DomainError(f"bessel_j of non-integer order {nu} requires x >= 0, got {x}")
    _check_argument(x, "bessel_j")
    if x == 0.0:
        if nu < 0.0:
            raise DomainError(f"bessel_j is unbounded at x=0 for nu={nu}")
        return FnEvalResult(1.0 if nu == 0.0 else 0.0, 1)
    value, used, truncated = sum_series(_bessel_terms(nu, x), trunc)
    return _result(value, used, truncated, "bessel_j")


def bessel_j_scaled(nu: float, u: float, trunc: SeriesControl = DEFAULT_CONTROL) -> FnEvalResult:
    """J_nu(u) / u^nu as the even series sum_k (-1)^k u^(2k) / (2^(nu+2k) k! Gamma(nu+k+1))."""
    if not nu > -1.0:
        raise DomainError(f"bessel_j_scaled requires nu > -1, got {nu}")
    _check_argument(u, "bessel_j_scaled")
    ratio = -(u * u) / 4.0

    def terms():
        term = 2.0 ** (-nu) * recip_gamma1p(nu)
        k = 0
        while True:
            yield term
            k += 1
            term = term * ratio / (k * (nu + k))

    value, used, truncated = sum_series(terms(), trunc)
    return _result(value, used, truncated, "bessel_j_scaled")


def sph_bessel(n: int, x: float, trunc: SeriesControl = DEFAULT_CONTROL) -> FnEvalResult:
    """j_n(x) = sqrt(pi)/2^(n+1) x^n sum_k (-x^2/4)^k / (k! Gamma(n+k+3/2)); parity (-1)^n."""
    if n < 0 or not _is_integer(n):
        raise DomainError(f"sph_bessel requires a non-negative integer order, got {n}")
    _check_argument(x, "sph_bessel")
    n = int(n)
    ratio = -(x * x) / 4.0

    def terms():
        term = math.sqrt(math.pi) / 2.0 ** (n + 1) * x ** n * recip_gamma1p(n + 0.5)
        k = 0
        while True:
            yield term
            k += 1
            term = term * ratio / (k * (n + k + 0.5))

    if x == 0.0:
        return FnEvalResult(1.0 if n == 0 else 0.0, 1)
    value, used, truncated = sum_series(terms(), trunc)
    return _result(value, used, truncated, "sph_bessel")


def f_n_combo(n: int, x: float, a: float, b: float, trunc: SeriesControl = DEFAULT_CONTROL) -> FnEvalResult:
    """F_n(x; a, b) = sum_k C(n,k) a^(n-k) b^k J_(n-k)(x)"""
    if n < 0 or not _is_integer(n):
        raise DomainError(f"f_n_combo requires a non-negative integer n, got {n}")
    n = int(n)
    parts = []
    used = 0
    truncated = False
    for k in range(n + 1):
        bessel = bessel_j(n - k, x, trunc)
        used += bessel.terms_used
        truncated = truncated or bessel.truncation_flag
        parts.append(math.comb(n, k) * a ** (n - k) * b ** k * bessel.value)
    return FnEvalResult(math.fsum(parts), used, truncated)


# Struve

def struve_h(nu: float, x: float, trunc: SeriesControl = DEFAULT_CONTROL) -> FnEvalResult:
    """H_nu(x) = sum_k (-1)^k (x/2)^(2k+nu+1) / (Gamma(k+3/2) Gamma(k+nu+3/2))"""
    if not nu > -1.5:
        raise DomainError(f"struve_h requires nu > -3/2, got {nu}")
    if x < 0.0:
        raise DomainError(f"struve_h requires x >= 0, got {x}")
    _check_argument(x, "struve_h")
    if x == 0.0:
        if nu + 1.0 > 0.0:
            return FnEvalResult(0.0, 1)
        if nu + 1.0 == 0.0:
            return FnEvalResult(recip_gamma1p(0.5) * recip_gamma1p(nu + 0.5), 1)
        raise DomainError(f"struve_h is unbounded at x=0 for nu={nu}")
    half = x / 2.0
    ratio = -half * half

    def terms():
        term = half ** (nu + 1.0) * recip_gamma1p(0.5) * recip_gamma1p(nu + 0.5)
        k = 0
        while True:
            yield term
            k += 1
            term = term * ratio / ((k + 0.5) * (k + nu + 0.5))

    value, used, truncated = sum_series(terms(), trunc)
    return _result(value, used, truncated, "struve_h")


# Wright / Mittag-Leffler

def wright_w(alpha: float, beta: float, x: float, trunc: SeriesControl = DEFAULT_CONTROL) -> FnEvalResult:
    """W_{alpha,beta}(x) = sum_k x^k / (k! Gamma(k alpha + beta))"""
    if alpha < -1.0:
        raise DomainError(f"wright_w requires alpha >= -1, got {alpha}")
    if alpha == -1.0 and not abs(x) < 1.0:
        raise DomainError(f"wright_w with alpha = -1 requires |x| < 1, got {x}")
    if alpha < 0.0 and _is_integer(beta):
        raise DomainError(f"wright_w with alpha < 0 requires non-integer beta, got {beta}")
    if x == 0.0:
        return FnEvalResult(recip_gamma1p(beta - 1.0), 1)

    def terms():
        power = 1.0
        k = 0
        while True:
            yield power * recip_gamma1p(k * alpha + beta - 1.0)
            k += 1
            power = power * x / k

    value, used, truncated = sum_series(terms(), trunc)
    return _result(value, used, truncated, "wright_w")


def mittag_leffler(alpha: float, beta: float, x: float, trunc: SeriesControl = DEFAULT_CONTROL) -> FnEvalResult:
    """E_{alpha,beta}(x) = sum_k x^k / Gamma(alpha k + beta)"""
    if alpha < 0.0:
        raise DomainError(f"mittag_leffler requires alpha >= 0, got {alpha}")
    if alpha == 0.0 and not abs(x) < 1.0:
        raise DomainError(f"mittag_leffler with alpha = 0 requires |x| < 1, got {x}")
    if x == 0.0:
        return FnEvalResult(recip_gamma1p(beta - 1.0), 1)

    def terms():
        power = 1.0
        k = 0
        while True:
            yield power * recip_gamma1p(alpha * k + beta - 1.0)
            k += 1
            power = power * x

    value, used, truncated = sum_series(terms(), trunc)
    return _result(value, used, truncated, "mittag_leffler")
