"""
Integrand evaluators for the quadrature checks.

Small arguments go through the series in umbralab.components.functions; large
arguments switch to scipy.special (or mpmath for the Wright function on the
negative axis, where the series cancels catastrophically in double precision).
"""

import math
import threading

import mpmath
from scipy import special

from umbralab.components import functions
from umbralab.errors import DomainError
from umbralab.utils.special_core import gamma, recip_gamma1p

SERIES_CUTOFF = 8.0
STRUVE_SERIES_CUTOFF = 10.0
STRUVE_ASYMPTOTIC_CUTOFF = 40.0
STRUVE_ASYMPTOTIC_TERMS = 30
WRIGHT_SERIES_CUTOFF = 10.0     # in terms of the envelope exponent Z
WRIGHT_NEGLIGIBLE_EXPONENT = 60.0
WRIGHT_TERM_FLOOR = 1e-40

_local = threading.local()


def _is_integer(v: float) -> bool:
    return v == math.floor(v)


def bessel_j_ref(nu: float, x: float) -> float:
    if abs(x) <= SERIES_CUTOFF:
        return functions.bessel_j(nu, x).value
    if x > 0:
        return float(special.jv(nu, x))
    if not _is_integer(nu):
        raise DomainError(f"J_{nu} at negative argument {x} is not real")
    sign = -1.0 if int(nu) % 2 else 1.0
    return sign * float(special.jv(nu, -x))


def bessel_scaled_ref(nu: float, u: float) -> float:
    """J_nu(u) / u^nu, even in u."""
    u = abs(u)
    if u <= SERIES_CUTOFF:
        return functions.bessel_j_scaled(nu, u).value
    return float(special.jv(nu, u)) / u ** nu


def sph_bessel_ref(n: int, x: float) -> float:
    if abs(x) <= SERIES_CUTOFF:
        return functions.sph_bessel(n, x).value
    value = float(special.spherical_jn(n, abs(x)))
    return -value if x < 0 and n % 2 else value


def fn_combo_ref(n: int, x: float, a: float, b: float) -> float:
    if abs(x) <= SERIES_CUTOFF:
        return functions.f_n_combo(n, x, a, b).value
    return math.fsum(
        math.comb(n, k) * a ** (n - k) * b ** k * bessel_j_ref(n - k, x)
        for k in range(n + 1)
    )


def struve_h_ref(nu: float, x: float) -> float:
    if x <= STRUVE_SERIES_CUTOFF:
        return functions.struve_h(nu, x).value
    return float(special.struve(nu, x))


def _struve_smooth_asymptotic(nu: float, x: float) -> float:
    """(1/pi) sum_k Gamma(k+1/2) (x/2)^(nu-2k-1) / Gamma(nu+1/2-k), summed while the terms shrink."""
    half = x / 2.0
    total = 0.0
    previous = math.inf
    for k in range(STRUVE_ASYMPTOTIC_TERMS):
        term = gamma(k + 0.5) * half ** (nu - 2 * k - 1.0) * recip_gamma1p(nu - 0.5 - k)
        if abs(term) > abs(previous):
            break
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
        if term != 0.0:
            previous = term
    return total / math.pi


def struve_smooth_ref(nu: float, x: float) -> float:
    """H_nu(x) - Y_nu(x), the non-oscillating part of the Struve function for x > 0."""
    if x > STRUVE_ASYMPTOTIC_CUTOFF:
        return _struve_smooth_asymptotic(nu, x)
    return struve_h_ref(nu, x) - float(special.yv(nu, x))


def _wright_envelope(alpha: float, z: float) -> float:
    """Location k* of the largest series term, (|z| alpha^-alpha)^(1/(1+alpha))."""
    return (abs(z) * alpha ** (-alpha)) ** (1.0 / (1.0 + alpha))


def _mp_context() -> mpmath.MPContext:
    """One context per thread; mpmath.mp is process-wide and sweeps run on a pool."""
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = _local.ctx = mpmath.MPContext()
    return ctx


def _wright_mpmath(alpha: float, beta: float, z: float, peak: float, exponent: float) -> float:
    ctx = _mp_context()
    ctx.dps = int(45 + exponent / 2.3026)
    zz = ctx.mpf(z)
    a = ctx.mpf(alpha)
    b = ctx.mpf(beta)
    floor = ctx.mpf(WRIGHT_TERM_FLOOR)
    total = ctx.mpf(0)
    power = ctx.mpf(1)
    k = 0
    while True:
        term = power * ctx.rgamma(a * k + b)
        total += term
        if k > peak and abs(term) < floor:
            break
        k += 1
        power = power * zz / k
    return float(total)


def _wright_series(alpha: float, beta: float, z: float) -> float:
    result = functions.wright_w(alpha, beta, z)
    if result.truncation_flag:
        raise DomainError(f"W_{{alpha,beta}}({z}) series did not converge (alpha={alpha}, beta={beta})")
    return result.value


def wright_w_ref(alpha: float, beta: float, z: float) -> float:
    """W_{alpha,beta}(z) for alpha >= 0, accurate on the negative axis."""
    if alpha < 0:
        raise DomainError(f"wright_w_ref covers alpha >= 0, got {alpha}")
    if alpha == 0:
        return math.exp(z) * recip_gamma1p(beta - 1.0)
    if z >= 0:
        return _wright_series(alpha, beta, z)
    peak = _wright_envelope(alpha, z)
    exponent = (1.0 + alpha) * peak
    if alpha < 1 and exponent * abs(math.cos(math.pi / (1.0 + alpha))) > WRIGHT_NEGLIGIBLE_EXPONENT:
        return 0.0
    if exponent < WRIGHT_SERIES_CUTOFF:
        return _wright_series(alpha, beta, z)
    return _wright_mpmath(alpha, beta, z, peak, exponent)


def wright_bessel_gaussian_ref(beta: float, x: float) -> float:
    """W_{1,beta}(-x^2) = |x|^(1-beta) J_{beta-1}(2|x|)."""
    r = abs(x)
    if r <= 3.0:
        return functions.wright_w(1.0, beta, -x * x).value
    return r ** (1.0 - beta) * float(special.jv(beta - 1.0, 2.0 * r))
