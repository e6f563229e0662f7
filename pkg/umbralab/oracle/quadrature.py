"""
Numerical integration used to check closed forms independently of the series code.

    integrate_finite                  adaptive Gauss-Kronrod (G10/K21) on [lo, hi]
    integrate_real_line_decay         x = t / (1 - t^2), t in (-1, 1)
    integrate_semi_decay              x = -log(1 - t) / rate, t in (0, 1)
    integrate_algebraic_tail          x = lo * t^-q, t in (0, 1)
    integrate_semi_oscillatory        partition at asymptotic zeros + epsilon extrapolation
    integrate_real_line_oscillatory   even fold onto [0, inf)
"""

import heapq
import logging
import math
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, NamedTuple, Optional

from umbralab import config
from umbralab.errors import DomainError, QuadratureError

logger = logging.getLogger(__name__)

Integrand = Callable[[float], float]

EPS = sys.float_info.epsilon
MAX_PANELS = 10_000
MIN_OSCILLATION_INTERVALS = 6
EPSILON_WINDOW = 21

# Gauss-Kronrod 21-point abscissae and weights (Kronrod nodes; every odd index is a Gauss node)
XGK = (
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
)
WGK = (
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208616235693,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
)
WG = (
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
)


class QuadratureStatus(Enum):
    CONVERGED = "converged"
    MAX_SUBDIVISIONS = "max_subdivisions"
    ACCELERATED = "accelerated"
    FAILED = "failed"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IntegralResult:
    value: float
    abs_err_est: float
    status: QuadratureStatus
    evaluations: int

    @property
    def ok(self) -> bool:
        return self.status in (QuadratureStatus.CONVERGED, QuadratureStatus.ACCELERATED)


@dataclass(frozen=True)
class OscillationHint:
    """
    Where to start partitioning an oscillating tail and how far apart its zeros are.

    `smooth_part`, when given, is a non-oscillating component of the integrand on
    [first_partition_point, inf) that decays like x^-smooth_decay. It is integrated
    on its own and only the remainder is partitioned.
    """
    asymptotic_zero_spacing: float
    first_partition_point: float
    smooth_part: Optional[Integrand] = None
    smooth_decay: float = 0.0

    def __post_init__(self):
        for name in ("asymptotic_zero_spacing", "first_partition_point"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be positive and finite, got {v}")
        if self.smooth_part is not None and not self.smooth_decay > 1.0:
            raise DomainError(f"smooth_decay must exceed 1 when a smooth part is given, got {self.smooth_decay}")


class _CountingIntegrand:
    def __init__(self, f: Integrand):
        self.f = f
        self.calls = 0

    def __call__(self, x: float) -> float:
        self.calls += 1
        value = self.f(x)
        if not math.isfinite(value):
            raise QuadratureError(f"integrand returned {value} at x={x!r}")
        return value


class _Panel(NamedTuple):
    neg_err: float
    seq: int
    lo: float
    hi: float
    value: float
    err: float


def _check_tol(tol: float) -> None:
    if not (math.isfinite(tol) and tol > 0):
        raise DomainError(f"tolerance must be positive and finite, got {tol}")


def _gauss_kronrod(f: Integrand, lo: float, hi: float):
    """Returns (kronrod value, error estimate) on one panel."""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    f_center = f(center)
    kronrod = WGK[10] * f_center
    gauss = 0.0
    abs_sum = abs(kronrod)
    for j in range(10):
        dx = half * XGK[j]
        f_pair = f(center - dx), f(center + dx)
        kronrod += WGK[j] * (f_pair[0] + f_pair[1])
        abs_sum += WGK[j] * (abs(f_pair[0]) + abs(f_pair[1]))
        if j % 2 == 1:
            gauss += WG[j // 2] * (f_pair[0] + f_pair[1])
    kronrod *= half
    gauss *= half
    abs_sum *= abs(half)
    err = max(abs(kronrod - gauss), 50.0 * EPS * abs_sum)
    return kronrod, err


def integrate_finite(f: Integrand, lo: float, hi: float, tol: float, *, max_panels: int = MAX_PANELS) -> IntegralResult:
    """
    Globally adaptive bisection: always split the panel with the largest error
    estimate until the summed estimate is below tol.
    """
    _check_tol(tol)
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"integrate_finite needs finite lo < hi, got [{lo}, {hi}]")

    counted = _CountingIntegrand(f)
    seq = 0
    value, err = _gauss_kronrod(counted, lo, hi)
    heap: List[_Panel] = [_Panel(-err, seq, lo, hi, value, err)]
    total_err = err
    status = QuadratureStatus.CONVERGED

    while total_err > tol:
        if len(heap) >= max_panels:
            status = QuadratureStatus.MAX_SUBDIVISIONS
            break
        worst = heapq.heappop(heap)
        mid = 0.5 * (worst.lo + worst.hi)
        if not worst.lo < mid < worst.hi:
            heapq.heappush(heap, worst)
            status = QuadratureStatus.MAX_SUBDIVISIONS
            break
        total_err -= worst.err
        for a, b in ((worst.lo, mid), (mid, worst.hi)):
            seq += 1
            v, e = _gauss_kronrod(counted, a, b)
            heapq.heappush(heap, _Panel(-e, seq, a, b, v, e))
            total_err += e

    ordered = sorted(heap, key=lambda p: p.lo)
    value = math.fsum(p.value for p in ordered)
    err = math.fsum(p.err for p in ordered)
    if err > tol:
        status = QuadratureStatus.MAX_SUBDIVISIONS
        logger.warning(f"integrate_finite on [{lo}, {hi}] stopped at {len(heap)} panels, error estimate {err:.3g} > {tol:.3g}")
    return IntegralResult(value, err, status, counted.calls)


# Infinite ranges by substitution

def integrate_real_line_decay(f: Integrand, tol: float) -> IntegralResult:
    """Integral of f over the real line; f must decay faster than |x|^-2."""
    def transformed(t: float) -> float:
        denom = 1.0 - t * t
        x = t / denom
        if not math.isfinite(x):
            return 0.0
        fx = f(x)
        if fx == 0.0:
            return 0.0
        return fx * (1.0 + t * t) / (denom * denom)

    return integrate_finite(transformed, -1.0, 1.0, tol)


def integrate_semi_decay(f: Integrand, tol: float, rate: float = 1.0) -> IntegralResult:
    """Integral of f over [0, inf) for f bounded by C e^(-rate x) eventually."""
    if not (math.isfinite(rate) and rate > 0):
        raise DomainError(f"rate must be positive and finite, got {rate}")

    def transformed(t: float) -> float:
        x = -math.log1p(-t) / rate
        if not math.isfinite(x):
            return 0.0
        fx = f(x)
        if fx == 0.0:
            return 0.0
        return fx / (rate * (1.0 - t))

    return integrate_finite(transformed, 0.0, 1.0, tol)


def integrate_algebraic_tail(f: Integrand, lo: float, decay: float, tol: float) -> IntegralResult:
    """Integral of f over [lo, inf) for f ~ x^-decay with decay > 1."""
    if not (math.isfinite(lo) and lo > 0):
        raise DomainError(f"integrate_algebraic_tail needs lo > 0, got {lo}")
    if not decay > 1.0:
        raise DomainError(f"integrate_algebraic_tail needs decay > 1, got {decay}")
    q = min(1.0 / (decay - 1.0), 4.0)

    def transformed(t: float) -> float:
        x = lo * t ** (-q)
        if not math.isfinite(x):
            return 0.0
        fx = f(x)
        if fx == 0.0:
            return 0.0
        return fx * lo * q * t ** (-q - 1.0)

    return integrate_finite(transformed, 0.0, 1.0, tol)


# Oscillating tails

def _wynn_epsilon(partial_sums: List[float]) -> float:
    """Deepest even column of the epsilon table built from partial_sums."""
    best = partial_sums[-1]
    previous = [0.0] * (len(partial_sums) + 1)
    current = list(partial_sums)
    column = 0
    while len(current) > 1:
        following = []
        for i in range(len(current) - 1):
            diff = current[i + 1] - current[i]
            if diff == 0.0:
                return best
            entry = previous[i + 1] + 1.0 / diff
            if not math.isfinite(entry):
                return best
            following.append(entry)
        previous, current = current, following
        column += 1
        if column % 2 == 0:
            best = current[-1]
    return best


def integrate_semi_oscillatory(f: Integrand, hint: OscillationHint, tol: float,
                               *, max_intervals: Optional[int] = None) -> IntegralResult:
    """
    Integral of a conditionally convergent oscillating f over [0, inf).

    [0, z0] is integrated directly. Beyond z0 the integrand is cut at
    z0 + k * spacing; the partial sums are extrapolated with the epsilon
    algorithm until three successive estimates agree within tol.
    """
    _check_tol(tol)
    if max_intervals is None:
        max_intervals = config.MAX_INTERVALS
    z0 = hint.first_partition_point
    spacing = hint.asymptotic_zero_spacing

    head = integrate_finite(f, 0.0, z0, tol / 10.0)
    fixed = [head]
    oscillating = f
    if hint.smooth_part is not None:
        smooth = hint.smooth_part
        fixed.append(integrate_algebraic_tail(smooth, z0, hint.smooth_decay, tol / 10.0))

        def oscillating(x: float) -> float:
            return f(x) - smooth(x)

    base = math.fsum(r.value for r in fixed)
    evaluations = sum(r.evaluations for r in fixed)
    error_parts = [r.abs_err_est for r in fixed]

    pieces: List[float] = []
    partial_sums: List[float] = []
    estimates: List[float] = []
    for k in range(max_intervals):
        a = z0 + k * spacing
        piece = integrate_finite(oscillating, a, a + spacing, tol / 20.0)
        evaluations += piece.evaluations
        error_parts.append(piece.abs_err_est)
        pieces.append(piece.value)
        partial_sums.append(base + math.fsum(pieces))
        if len(partial_sums) < MIN_OSCILLATION_INTERVALS:
            continue

        window = partial_sums[-EPSILON_WINDOW:]
        if len(window) % 2 == 0:
            window = window[1:]
        estimates.append(_wynn_epsilon(window))
        if len(estimates) < 3:
            continue
        delta = max(abs(estimates[-1] - estimates[-2]), abs(estimates[-1] - estimates[-3]))
        logger.debug(f"oscillatory step {k + 1}: estimate {estimates[-1]!r}, delta {delta:.3g}")
        if delta < tol:
            value = estimates[-1]
            err = delta + math.fsum(error_parts) + 64.0 * EPS * abs(value)
            return IntegralResult(value, err, QuadratureStatus.ACCELERATED, evaluations)

    value = estimates[-1] if estimates else (partial_sums[-1] if partial_sums else base)
    spread = abs(estimates[-1] - estimates[-2]) if len(estimates) >= 2 else math.inf
    logger.warning(f"oscillatory extrapolation stagnated after {max_intervals} intervals (last change {spread:.3g})")
    return IntegralResult(value, spread + math.fsum(error_parts), QuadratureStatus.FAILED, evaluations)


def integrate_real_line_oscillatory(f: Integrand, hint: OscillationHint, tol: float,
                                    *, max_intervals: Optional[int] = None) -> IntegralResult:
    """Integral over the real line as the [0, inf) integral of f(x) + f(-x)."""
    def folded(x: float) -> float:
        return f(x) + f(-x)

    return integrate_semi_oscillatory(folded, hint, tol, max_intervals=max_intervals)
