"""
Registry of closed-form integral identities and the numerical check behind them.

Every entry knows how to compute its right-hand side, how to build the
left-hand-side integrand for the quadrature routines, which integration route
that integrand needs, and (where one exists) the umbral reduction that
produces the closed form.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

from umbralab import config
from umbralab.components import functions, polys
from umbralab.components.umbral import UmbralExpr, UmbralMonomial, evaluate, gaussian_reduce
from umbralab.errors import ConstraintViolation, DomainError, QuadratureError, UnknownIdentityError
from umbralab.oracle import integrands, quadrature
from umbralab.oracle.quadrature import IntegralResult, OscillationHint
from umbralab.utils.special_core import recip_gamma1p, sinpi

logger = logging.getLogger(__name__)

SQRT_PI = math.sqrt(math.pi)
EVEN_INTEGER_TOL = 1e-12


class Route(Enum):
    """
    Integration routes, each with the default tolerance it can honour.
    """
    def __new__(cls, label: str, default_tol: float):
        obj = object.__new__(cls)
        obj._value_ = label
        obj.default_tol = default_tol
        return obj

    FINITE = "finite", 1e-10
    REAL_LINE_DECAY = "real_line_decay", 1e-10
    REAL_LINE_OSCILLATORY = "real_line_oscillatory", 1e-6
    SEMI_INFINITE_OSCILLATORY = "semi_infinite_oscillatory", 1e-6
    SEMI_INFINITE_DECAY = "semi_infinite_decay", 1e-10

    def __str__(self):
        return self.value

    def integrate(self, integrand: "Integrand", tol: float) -> IntegralResult:
        if self is Route.FINITE:
            lo, hi = integrand.bounds
            return quadrature.integrate_finite(integrand.f, lo, hi, tol)
        if self is Route.REAL_LINE_DECAY:
            return quadrature.integrate_real_line_decay(integrand.f, tol)
        if self is Route.REAL_LINE_OSCILLATORY:
            return quadrature.integrate_real_line_oscillatory(integrand.f, integrand.hint, tol)
        if self is Route.SEMI_INFINITE_OSCILLATORY:
            return quadrature.integrate_semi_oscillatory(integrand.f, integrand.hint, tol)
        return quadrature.integrate_semi_decay(integrand.f, tol, rate=integrand.rate)


def _coerce_real(name: str, value: Any) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"parameter {name} must be a real number, got {value!r}")
    if not math.isfinite(v):
        raise DomainError(f"parameter {name} must be finite, got {value!r}")
    return v


def _coerce_count(name: str, value: Any) -> int:
    v = _coerce_real(name, value)
    if v < 0 or v != math.floor(v):
        raise DomainError(f"parameter {name} must be a non-negative integer, got {value!r}")
    return int(v)


def _coerce_reals(name: str, value: Any) -> Tuple[float, ...]:
    if isinstance(value, (int, float)):
        value = [value]
    values = tuple(_coerce_real(name, v) for v in value)
    if not values:
        raise DomainError(f"parameter {name} needs at least one value")
    return values


class ParamKind(Enum):
    def __new__(cls, label: str, coerce: Callable[[str, Any], Any]):
        obj = object.__new__(cls)
        obj._value_ = label
        obj.coerce = coerce
        return obj

    REAL = "real", _coerce_real
    COUNT = "count", _coerce_count
    REAL_LIST = "reals", _coerce_reals


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: ParamKind = ParamKind.REAL
    default: Any = None

    def describe(self) -> str:
        text = f"{self.name}:{self.kind.value}"
        return text if self.default is None else f"{text}={self.default}"


class Constraint(NamedTuple):
    check: Callable[..., bool]
    message: str


@dataclass(frozen=True)
class Integrand:
    f: quadrature.Integrand
    hint: Optional[OscillationHint] = None
    rate: float = 1.0
    bounds: Optional[Tuple[float, float]] = None


RouteChoice = Union[Route, Callable[..., Optional[Route]]]


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    description: str
    params: Tuple[ParamSpec, ...]
    closed_form: Callable[..., float]
    integrand: Callable[..., Integrand]
    route: RouteChoice
    constraints: Tuple[Constraint, ...] = ()
    oracle_range: Optional[Callable[..., Optional[str]]] = None
    umbral_form: Optional[Callable[..., UmbralExpr]] = None

    def bind(self, params: Mapping[str, Any]) -> Dict[str, Any]:
        """Coerces params to their declared kinds, filling defaults."""
        known = {p.name for p in self.params}
        unknown = sorted(set(params) - known)
        if unknown:
            raise DomainError(f"{self.id}: unknown parameter(s) {', '.join(unknown)}")
        bound = {}
        for p in self.params:
            if p.name in params:
                bound[p.name] = p.kind.coerce(p.name, params[p.name])
            elif p.default is not None:
                bound[p.name] = p.kind.coerce(p.name, p.default)
            else:
                raise DomainError(f"{self.id}: missing parameter {p.name}")
        return bound

    def violated(self, bound: Mapping[str, Any]) -> Optional[str]:
        for constraint in self.constraints:
            if not constraint.check(**bound):
                return constraint.message
        return None

    def select_route(self, bound: Mapping[str, Any]) -> Optional[Route]:
        if isinstance(self.route, Route):
            return self.route
        return self.route(**bound)

    def unavailable_reason(self, bound: Mapping[str, Any]) -> Optional[str]:
        if self.oracle_range is not None:
            reason = self.oracle_range(**bound)
            if reason:
                return reason
        if self.select_route(bound) is None:
            return "no integration route for these parameters"
        return None


class ReportStatus(Enum):
    def __new__(cls, label: str, exit_code: int):
        obj = object.__new__(cls)
        obj._value_ = label
        obj.exit_code = exit_code
        return obj

    PASSED = "passed", 0
    FAILED = "failed", 1
    CONSTRAINT_VIOLATION = "constraint_violation", 2
    UNVERIFIED = "unverified", 0

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IdentityReport:
    id: str
    params: Dict[str, Any]
    closed_value: float
    oracle: Optional[IntegralResult]
    abs_err: float
    rel_err: float
    passed: bool
    tolerance_used: float
    status: ReportStatus
    message: str = ""
    route: Optional[Route] = None

    def to_record(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {"id": self.id}
        for name, value in self.params.items():
            record[name] = ";".join(repr(v) for v in value) if isinstance(value, tuple) else value
        record.update(
            closed_value=self.closed_value,
            oracle_value=self.oracle.value if self.oracle else math.nan,
            abs_err=self.abs_err,
            rel_err=self.rel_err,
            tolerance_used=self.tolerance_used,
            status=self.status.value,
            route=self.route.value if self.route else "",
            evaluations=self.oracle.evaluations if self.oracle else 0,
            message=self.message,
        )
        return record


# Closed forms

def _require_positive(name: str, value: float) -> None:
    if not value > 0:
        raise DomainError(f"{name} must be positive, got {value}")


def gaussian_moment(n: int, a: float, b: float, alpha: float) -> float:
    """Integral over the real line of (a x + b)^n exp(-alpha x^2) = sqrt(pi/alpha) H_n(b, a^2/(4 alpha))."""
    _require_positive("alpha", alpha)
    return math.sqrt(math.pi / alpha) * polys.hermite2(n, b, a * a / (4.0 * alpha))


def gaussian_moment_gf(t: float, a: float, b: float, alpha: float) -> float:
    """sum_n t^n/n! gaussian_moment(n, a, b, alpha)"""
    _require_positive("alpha", alpha)
    return math.sqrt(math.pi / alpha) * math.exp(t * t * a * a / (4.0 * alpha) + b * t)


def bessel_j0_integral(alpha: float) -> float:
    _require_positive("alpha", alpha)
    return 2.0 / math.sqrt(alpha)


def weighted_bessel_moment(n: int, a: float, b: float, alpha: float, nu: float) -> float:
    """
    Integral over the real line of J_nu(sqrt(alpha) x) (a x + b)^n / (sqrt(alpha) x)^nu
        = 2^(1-nu) sqrt(pi/alpha) B_n(b, a^2/alpha; nu)
    """
    _require_positive("alpha", alpha)
    if not nu > n:
        raise ConstraintViolation(f"nu must exceed n (nu={nu}, n={n})")
    return 2.0 ** (1.0 - nu) * math.sqrt(math.pi / alpha) * polys.bpoly(n, b, a * a / alpha, nu)


def weighted_bessel_poly(coeffs: Sequence[float], a: float, b: float, alpha: float, nu: float) -> float:
    """Same integral with the polynomial sum_k coeffs[k] (a x + b)^k."""
    _require_positive("alpha", alpha)
    m = len(coeffs) - 1
    if not nu > m:
        raise ConstraintViolation(f"nu must exceed the polynomial degree (nu={nu}, degree={m})")
    y = a * a / alpha
    total = math.fsum(f * polys.bpoly(k, b, y, nu) for k, f in enumerate(coeffs))
    return 2.0 ** (1.0 - nu) * math.sqrt(math.pi / alpha) * total


def fn_combo_integral(n: int, a: float, b: float) -> float:
    """Integral over the real line of F_n(x; a, b) = sum_k C(n,k) a^(n-k) b^k J_(n-k)(x)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    y = a * a / 4.0
    total = math.fsum(
        math.factorial(n) // (math.factorial(n - 2 * k) * math.factorial(k))
        * b ** (n - 2 * k) * y ** k * recip_gamma1p(k - 0.5)
        for k in range(n // 2 + 1)
    )
    return 2.0 * SQRT_PI * total


def sph_bessel_integral(n: int) -> float:
    """Integral over the real line of j_n(x): pi C(2m, m) / 4^m for n = 2m, zero for odd n."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n % 2:
        return 0.0
    m = n // 2
    return math.pi * math.comb(2 * m, m) / 4 ** m


def _is_even_integer(v: float) -> bool:
    half = v / 2.0
    return abs(half - round(half)) <= EVEN_INTEGER_TOL


def struve_mellin(mu: float, nu: float) -> float:
    """
    Integral over [0, inf) of x^mu H_nu(x)
        = -2^mu pi / (sin((mu+nu) pi/2) Gamma((1-mu-nu)/2) Gamma((1-mu+nu)/2))
    """
    if _is_even_integer(mu + nu):
        raise ConstraintViolation(f"mu+nu must not be an even integer (mu+nu={mu + nu})")
    return (-(2.0 ** mu) * math.pi * recip_gamma1p((1.0 - mu - nu) / 2.0 - 1.0)
            * recip_gamma1p((1.0 - mu + nu) / 2.0 - 1.0) / sinpi((mu + nu) / 2.0))


def wright_gaussian_integral(alpha: float, beta: float) -> float:
    """Integral over the real line of W_{alpha,beta}(-x^2) = sqrt(pi) / Gamma(beta - alpha/2)."""
    return SQRT_PI * recip_gamma1p(beta - alpha / 2.0 - 1.0)


def wright_laplace(alpha: float, beta: float, d: float) -> float:
    """Integral over [0, inf) of W_{alpha,beta}(-x) e^(-d x) = E_{alpha,beta}(-1/d) / d."""
    _require_positive("d", d)
    if alpha < 0:
        raise DomainError(f"alpha must be >= 0, got {alpha}")
    if alpha == 0 and not d > 1:
        raise DomainError(f"alpha = 0 requires d > 1, got {d}")
    if alpha == 0:
        # geometric series summed exactly
        return recip_gamma1p(beta - 1.0) / (d + 1.0)
    series = functions.mittag_leffler(alpha, beta, -1.0 / d)
    if series.truncation_flag:
        raise DomainError(f"E_{{alpha,beta}}(-1/d) did not converge in {series.terms_used} terms (alpha={alpha}, d={d})")
    return series.value / d


# Integrands

def _bessel_partition_point(order: float, scale: float) -> float:
    """A point near an asymptotic zero of J_order(scale x), a couple of zeros in."""
    return (order / 2.0 + 0.75 + 1.0) * math.pi / scale


def _gaussian_moment_integrand(n, a, b, alpha) -> Integrand:
    return Integrand(lambda x: (a * x + b) ** n * math.exp(-alpha * x * x))


def _j0_integrand(alpha) -> Integrand:
    scale = math.sqrt(alpha)
    hint = OscillationHint(math.pi / scale, _bessel_partition_point(0.0, scale))
    return Integrand(lambda x: integrands.bessel_j_ref(0, scale * x), hint=hint)


def _weighted_bessel_integrand(poly: Callable[[float], float], alpha: float, nu: float) -> Integrand:
    scale = math.sqrt(alpha)
    hint = OscillationHint(math.pi / scale, _bessel_partition_point(nu, scale))
    return Integrand(lambda x: integrands.bessel_scaled_ref(nu, scale * x) * poly(x), hint=hint)


def _weighted_moment_integrand(n, a, b, alpha, nu) -> Integrand:
    return _weighted_bessel_integrand(lambda x: (a * x + b) ** n, alpha, nu)


def _weighted_poly_integrand(coeffs, a, b, alpha, nu) -> Integrand:
    def poly(x: float) -> float:
        u = a * x + b
        return math.fsum(f * u ** k for k, f in enumerate(coeffs))

    return _weighted_bessel_integrand(poly, alpha, nu)


def _fn_combo_integrand(n, a, b) -> Integrand:
    # even-order terms survive the fold and share their asymptotic zeros
    hint = OscillationHint(math.pi, _bessel_partition_point(2 * (n // 2), 1.0))
    return Integrand(lambda x: integrands.fn_combo_ref(n, x, a, b), hint=hint)


def _sph_bessel_integrand(n) -> Integrand:
    hint = OscillationHint(math.pi, (n / 2.0 + 2.0) * math.pi)
    return Integrand(lambda x: integrands.sph_bessel_ref(n, x), hint=hint)


def _struve_integrand(mu, nu) -> Integrand:
    hint = OscillationHint(
        asymptotic_zero_spacing=math.pi,
        first_partition_point=nu * math.pi / 2.0 + math.pi / 4.0 + 2.0 * math.pi,
        smooth_part=lambda x: x ** mu * integrands.struve_smooth_ref(nu, x),
        smooth_decay=1.0 - mu - nu,
    )
    return Integrand(lambda x: x ** mu * integrands.struve_h_ref(nu, x), hint=hint)


def _wright_gaussian_integrand(alpha, beta) -> Integrand:
    if alpha == 1.0:
        hint = OscillationHint(math.pi / 2.0, _bessel_partition_point(beta - 1.0, 2.0))
        return Integrand(lambda x: integrands.wright_bessel_gaussian_ref(beta, x), hint=hint)
    return Integrand(lambda x: integrands.wright_w_ref(alpha, beta, -x * x))


def _wright_laplace_integrand(alpha, beta, d) -> Integrand:
    def f(x: float) -> float:
        if d * x > 700.0:
            return 0.0
        return math.exp(-d * x) * integrands.wright_w_ref(alpha, beta, -x)

    return Integrand(f, rate=d)


# Routes and oracle ranges

WRIGHT_DECAY_ALPHA_MAX = 0.75


def _wright_gaussian_route(alpha, beta) -> Optional[Route]:
    if 0.0 <= alpha <= WRIGHT_DECAY_ALPHA_MAX:
        return Route.REAL_LINE_DECAY
    if alpha == 1.0:
        return Route.REAL_LINE_OSCILLATORY
    return None


def _wright_gaussian_range(alpha, beta) -> Optional[str]:
    if not beta - alpha / 2.0 > 0:
        return "beta - alpha/2 must be positive for the integral to converge"
    if _wright_gaussian_route(alpha, beta) is None:
        return f"quadrature covers 0 <= alpha <= {WRIGHT_DECAY_ALPHA_MAX} and alpha = 1"
    return None


def _struve_range(mu, nu) -> Optional[str]:
    if not -2.0 < mu + nu < 0.0:
        return "closed form only: quadrature needs -2 < mu+nu < 0"
    if not mu < 0.5:
        return "closed form only: quadrature needs mu < 1/2"
    return None


def _wright_laplace_range(alpha, beta, d) -> Optional[str]:
    if alpha > 1.0:
        return "quadrature covers 0 <= alpha <= 1"
    return None


# Umbral reductions

def _constant(value: float) -> UmbralMonomial:
    return UmbralMonomial.constant(value)


def _weighted_moment_umbral(n, a, b, alpha, nu) -> UmbralExpr:
    # J_nu(u)/u^nu = 2^-nu c^nu exp(-c u^2/4)
    prefactor = UmbralExpr.lift(UmbralMonomial.of(2.0 ** (-nu), nu))
    return prefactor * gaussian_reduce(n, b, _constant(a), UmbralMonomial.of(alpha / 4.0, 1.0))


def _weighted_poly_umbral(coeffs, a, b, alpha, nu) -> UmbralExpr:
    total = UmbralExpr()
    for k, f in enumerate(coeffs):
        total = total + _weighted_moment_umbral(k, a, b, alpha, nu) * f
    return total


def _sph_bessel_umbral(n) -> UmbralExpr:
    # j_n(x) = sqrt(pi)/2^(n+1) x^n c^(n+1/2) exp(-c x^2/4)
    prefactor = UmbralExpr.lift(UmbralMonomial.of(SQRT_PI / 2.0 ** (n + 1), n + 0.5))
    return prefactor * gaussian_reduce(n, 0.0, _constant(1.0), UmbralMonomial.of(0.25, 1.0))


def _wright_gaussian_umbral(alpha, beta) -> UmbralExpr:
    # W_{alpha,beta}(-x^2) = c^(beta-1) exp(-c^alpha x^2)
    prefactor = UmbralExpr.lift(UmbralMonomial.of(1.0, beta - 1.0))
    return prefactor * gaussian_reduce(0, 0.0, _constant(0.0), UmbralMonomial.of(1.0, alpha))


def _positive(name: str) -> Constraint:
    return Constraint(lambda **p: p[name] > 0, f"{name} must be positive")


REGISTRY: Dict[str, IdentitySpec] = {spec.id: spec for spec in (
    IdentitySpec(
        id="gaussian-moment",
        description="Gaussian moments of (a x + b)^n as two-variable Hermite polynomials",
        params=(ParamSpec("n", ParamKind.COUNT), ParamSpec("a"), ParamSpec("b"), ParamSpec("alpha")),
        closed_form=gaussian_moment,
        integrand=_gaussian_moment_integrand,
        route=Route.REAL_LINE_DECAY,
        constraints=(_positive("alpha"),),
        umbral_form=lambda n, a, b, alpha: gaussian_reduce(n, b, _constant(a), _constant(alpha)),
    ),
    IdentitySpec(
        id="bessel-j0-integral",
        description="integral of J_0(sqrt(alpha) x) over the real line",
        params=(ParamSpec("alpha"),),
        closed_form=bessel_j0_integral,
        integrand=_j0_integrand,
        route=Route.REAL_LINE_OSCILLATORY,
        constraints=(_positive("alpha"),),
        umbral_form=lambda alpha: gaussian_reduce(0, 0.0, _constant(0.0), UmbralMonomial.of(alpha / 4.0, 1.0)),
    ),
    IdentitySpec(
        id="weighted-bessel-moment",
        description="J_nu(sqrt(alpha) x) (a x + b)^n / (sqrt(alpha) x)^nu over the real line",
        params=(ParamSpec("n", ParamKind.COUNT), ParamSpec("a"), ParamSpec("b"), ParamSpec("alpha"), ParamSpec("nu")),
        closed_form=weighted_bessel_moment,
        integrand=_weighted_moment_integrand,
        route=Route.REAL_LINE_OSCILLATORY,
        constraints=(
            _positive("alpha"),
            Constraint(lambda n, nu, **_: nu > n, "nu must exceed n"),
        ),
        umbral_form=_weighted_moment_umbral,
    ),
    IdentitySpec(
        id="weighted-bessel-poly",
        description="J_nu(sqrt(alpha) x) sum_k f_k (a x + b)^k / (sqrt(alpha) x)^nu over the real line",
        params=(ParamSpec("coeffs", ParamKind.REAL_LIST), ParamSpec("a"), ParamSpec("b"), ParamSpec("alpha"), ParamSpec("nu")),
        closed_form=weighted_bessel_poly,
        integrand=_weighted_poly_integrand,
        route=Route.REAL_LINE_OSCILLATORY,
        constraints=(
            _positive("alpha"),
            Constraint(lambda coeffs, nu, **_: nu > len(coeffs) - 1, "nu must exceed the polynomial degree"),
        ),
        umbral_form=_weighted_poly_umbral,
    ),
    IdentitySpec(
        id="fn-combo-integral",
        description="integral of F_n(x; a, b) = sum_k C(n,k) a^(n-k) b^k J_(n-k)(x) over the real line",
        params=(ParamSpec("n", ParamKind.COUNT), ParamSpec("a"), ParamSpec("b")),
        closed_form=fn_combo_integral,
        integrand=_fn_combo_integrand,
        route=Route.REAL_LINE_OSCILLATORY,
        umbral_form=lambda n, a, b: gaussian_reduce(
            n, b, UmbralMonomial.of(a / 2.0, 1.0), UmbralMonomial.of(0.25, 1.0)),
    ),
    IdentitySpec(
        id="sph-bessel-integral",
        description="integral of the spherical Bessel function j_n over the real line",
        params=(ParamSpec("n", ParamKind.COUNT),),
        closed_form=sph_bessel_integral,
        integrand=_sph_bessel_integrand,
        route=Route.REAL_LINE_OSCILLATORY,
        umbral_form=_sph_bessel_umbral,
    ),
    IdentitySpec(
        id="struve-mellin",
        description="integral of x^mu H_nu(x) over [0, inf)",
        params=(ParamSpec("mu"), ParamSpec("nu")),
        closed_form=struve_mellin,
        integrand=_struve_integrand,
        route=Route.SEMI_INFINITE_OSCILLATORY,
        constraints=(
            Constraint(lambda mu, nu: nu > -1.5, "nu must exceed -3/2"),
            Constraint(lambda mu, nu: not _is_even_integer(mu + nu), "mu+nu is an even integer (the closed form is singular)"),
        ),
        oracle_range=_struve_range,
    ),
    IdentitySpec(
        id="wright-gaussian",
        description="integral of W_{alpha,beta}(-x^2) over the real line",
        params=(ParamSpec("alpha"), ParamSpec("beta")),
        closed_form=wright_gaussian_integral,
        integrand=_wright_gaussian_integrand,
        route=_wright_gaussian_route,
        oracle_range=_wright_gaussian_range,
        umbral_form=_wright_gaussian_umbral,
    ),
    IdentitySpec(
        id="wright-laplace",
        description="Laplace transform of W_{alpha,beta}(-x) at d",
        params=(ParamSpec("alpha"), ParamSpec("beta"), ParamSpec("d")),
        closed_form=wright_laplace,
        integrand=_wright_laplace_integrand,
        route=Route.SEMI_INFINITE_DECAY,
        constraints=(
            _positive("d"),
            Constraint(lambda alpha, beta, d: alpha >= 0, "alpha must be >= 0"),
            Constraint(lambda alpha, beta, d: alpha > 0 or d > 1, "alpha = 0 requires d > 1"),
        ),
        oracle_range=_wright_laplace_range,
    ),
)}


def get_spec(spec_id: str) -> IdentitySpec:
    try:
        return REGISTRY[spec_id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity {spec_id!r}; known: {', '.join(REGISTRY)}")


def list_identities() -> List[Dict[str, str]]:
    rows = []
    for spec in REGISTRY.values():
        route = spec.route.value if isinstance(spec.route, Route) else "depends on parameters"
        rows.append({
            "id": spec.id,
            "params": ", ".join(p.describe() for p in spec.params),
            "route": route,
            "umbral": "yes" if spec.umbral_form else "no",
            "description": spec.description,
        })
    return rows


def closed_value(spec_id: str, params: Mapping[str, Any]) -> float:
    spec = get_spec(spec_id)
    bound = spec.bind(params)
    message = spec.violated(bound)
    if message:
        raise ConstraintViolation(f"{spec_id}: {message}")
    return spec.closed_form(**bound)


def umbral_value(spec_id: str, params: Mapping[str, Any]) -> float:
    """Evaluates the umbral reduction that yields the identity's closed form."""
    spec = get_spec(spec_id)
    if spec.umbral_form is None:
        raise DomainError(f"{spec_id} has no umbral reduction")
    bound = spec.bind(params)
    message = spec.violated(bound)
    if message:
        raise ConstraintViolation(f"{spec_id}: {message}")
    return evaluate(spec.umbral_form(**bound))


def _relative(abs_err: float, reference: float) -> float:
    return abs_err / abs(reference) if reference != 0 else abs_err


def verify(spec_id: str, params: Mapping[str, Any],
           tol_abs: Optional[float] = None, tol_rel: Optional[float] = None) -> IdentityReport:
    """
    Computes the closed form and checks it against quadrature of the integrand.

    Tolerances default to UMBRALAB_TOL_ABS / UMBRALAB_TOL_REL, then to the
    route's own default. Constraint violations come back as a report rather
    than an exception.
    """
    spec = get_spec(spec_id)
    bound = spec.bind(params)

    message = spec.violated(bound)
    if message:
        logger.info(f"{spec_id} {bound}: constraint violation: {message}")
        return IdentityReport(
            id=spec_id, params=bound, closed_value=math.nan, oracle=None,
            abs_err=math.nan, rel_err=math.nan, passed=False, tolerance_used=math.nan,
            status=ReportStatus.CONSTRAINT_VIOLATION, message=message,
        )

    closed = spec.closed_form(**bound)
    route = spec.select_route(bound)
    default_tol = route.default_tol if route else Route.REAL_LINE_OSCILLATORY.default_tol
    tol_abs = tol_abs if tol_abs is not None else (config.TOL_ABS or default_tol)
    tol_rel = tol_rel if tol_rel is not None else (config.TOL_REL or default_tol)
    tolerance = max(tol_abs, tol_rel * abs(closed))

    reason = spec.unavailable_reason(bound)
    if reason:
        return IdentityReport(
            id=spec_id, params=bound, closed_value=closed, oracle=None,
            abs_err=math.nan, rel_err=math.nan, passed=False, tolerance_used=tolerance,
            status=ReportStatus.UNVERIFIED, message=reason, route=route,
        )

    try:
        oracle = route.integrate(spec.integrand(**bound), 0.1 * tolerance)
    except (DomainError, QuadratureError) as e:
        logger.warning(f"{spec_id} {bound}: quadrature aborted: {e}")
        return IdentityReport(
            id=spec_id, params=bound, closed_value=closed, oracle=None,
            abs_err=math.nan, rel_err=math.nan, passed=False, tolerance_used=tolerance,
            status=ReportStatus.UNVERIFIED, message=f"quadrature aborted: {e}", route=route,
        )

    abs_err = abs(closed - oracle.value)
    logger.info(f"{spec_id} {bound}: closed={closed!r} oracle={oracle.value!r} abs_err={abs_err:.3g}")
    if not oracle.ok:
        status, message = ReportStatus.UNVERIFIED, f"quadrature status {oracle.status}"
    elif abs_err <= tolerance:
        status, message = ReportStatus.PASSED, ""
    else:
        status, message = ReportStatus.FAILED, ""
    return IdentityReport(
        id=spec_id, params=bound, closed_value=closed, oracle=oracle,
        abs_err=abs_err, rel_err=_relative(abs_err, closed), passed=status is ReportStatus.PASSED,
        tolerance_used=tolerance, status=status, message=message, route=route,
    )
