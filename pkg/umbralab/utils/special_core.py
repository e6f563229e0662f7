import math
from dataclasses import dataclass
from typing import Iterable, Tuple

from umbralab.errors import DomainError, PoleError

# Lanczos approximation, g = 7, n = 9
LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
SQRT_TWO_PI = math.sqrt(2.0 * math.pi)
LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)

GAMMA_OVERFLOW_X = 171.6243769563027  # Gamma(x) > max double above this
EXACT_FACTORIAL_MAX = 171.0


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy shared by every series evaluator."""
    rel_tol: float = 1e-15
    small_terms_required: int = 3
    max_terms: int = 500

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.small_terms_required < 1:
            raise ValueError(f"small_terms_required must be >= 1, got {self.small_terms_required}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_CONTROL = SeriesControl()


def sum_series(terms: Iterable[float], control: SeriesControl = DEFAULT_CONTROL) -> Tuple[float, int, bool]:
    """
    Sums a stream of terms with Neumaier compensation.

    Stops once `small_terms_required` consecutive terms satisfy
    |t| <= rel_tol * |sum|, or after `max_terms` terms (then truncated=True).
    Exact zeros ahead of the first nonzero term (e.g. 1/Gamma at its poles)
    do not count as small.
    Returns (value, terms_used, truncated).
    """
    total = 0.0
    compensation = 0.0
    small_run = 0
    used = 0
    started = False
    for term in terms:
        used += 1
        t = total + term
        if abs(total) >= abs(term):
            compensation += (total - t) + term
        else:
            compensation += (term - t) + total
        total = t

        value = total + compensation
        started = started or term != 0.0
        if started and abs(term) <= control.rel_tol * abs(value):
            small_run += 1
            if small_run >= control.small_terms_required:
                return value, used, False
        else:
            small_run = 0

        if used >= control.max_terms:
            return value, used, True
    return total + compensation, used, False


def sinpi(x: float) -> float:
    """sin(pi*x) with exact reduction of the argument; exactly 0 at integers."""
    r = math.fmod(x, 2.0)
    if r > 1.0:
        r -= 2.0
    elif r < -1.0:
        r += 2.0
    if r > 0.5:
        return math.sin(math.pi * (1.0 - r))
    if r < -0.5:
        return -math.sin(math.pi * (1.0 + r))
    return math.sin(math.pi * r)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


def _is_small_positive_integer(x: float) -> bool:
    return 1.0 <= x <= EXACT_FACTORIAL_MAX and x == math.floor(x)


def _lanczos_sum(z: float) -> float:
    acc = LANCZOS_COEFFS[0]
    for i in range(1, len(LANCZOS_COEFFS)):
        acc += LANCZOS_COEFFS[i] / (z + i)
    return acc


def _gamma_right(x: float) -> float:
    """Gamma(x) for 0.5 <= x <= GAMMA_OVERFLOW_X."""
    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    # split the power so t**(z+0.5) cannot overflow before e^-t scales it
    half = t ** ((z + 0.5) / 2.0)
    return SQRT_TWO_PI * _lanczos_sum(z) * half * (half * math.exp(-t))


def gamma(x: float) -> float:
    """Gamma(x) for real x off the poles {0, -1, -2, ...}."""
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at x={x}")
    if x > GAMMA_OVERFLOW_X:
        raise OverflowError(f"gamma({x}) exceeds the double range")
    if _is_small_positive_integer(x):
        return float(math.factorial(int(x) - 1))
    if x >= 0.5:
        return _gamma_right(x)
    # reflection
    return math.pi * _recip_gamma(1.0 - x) / sinpi(x)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    if x == 1.0 or x == 2.0:
        return 0.0
    if x < 0.5:
        return log_gamma(x + 1.0) - math.log(x)
    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    return LOG_SQRT_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


def _recip_gamma(x: float) -> float:
    """1/Gamma(x), entire; exactly 0 at the poles of Gamma."""
    if _is_nonpositive_integer(x):
        return 0.0
    if _is_small_positive_integer(x):
        return 1.0 / math.factorial(int(x) - 1)
    if x >= 0.5:
        if x <= GAMMA_OVERFLOW_X:
            return 1.0 / _gamma_right(x)
        return math.exp(-log_gamma(x))
    s = sinpi(x)
    y = 1.0 - x
    if y <= GAMMA_OVERFLOW_X:
        return s * _gamma_right(y) / math.pi
    try:
        return s * math.exp(log_gamma(y)) / math.pi
    except OverflowError:
        return math.copysign(math.inf, s)


def recip_gamma1p(mu: float) -> float:
    """phi(mu) = 1/Gamma(mu + 1), the value the umbral operator produces."""
    return _recip_gamma(mu + 1.0)
