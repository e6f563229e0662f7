"""
Finite umbral algebra.

An expression is a sum of monomials coeff * c1^e1 * c2^e2 in at most two
umbral symbols. Evaluation applies c^mu phi(0) = phi(mu) = 1/Gamma(mu+1)
independently to each symbol, so a symbol with exponent 0 contributes 1.
"""

import math
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from umbralab.errors import DomainError
from umbralab.utils.special_core import recip_gamma1p

MERGE_TOL = 1e-12

Exponents = Tuple[float, float]


@dataclass(frozen=True)
class UmbralMonomial:
    coeff: float
    powers: Exponents = (0.0, 0.0)

    @classmethod
    def constant(cls, coeff: float) -> "UmbralMonomial":
        return cls(float(coeff), (0.0, 0.0))

    @classmethod
    def of(cls, coeff: float, c1: float = 0.0, c2: float = 0.0) -> "UmbralMonomial":
        return cls(float(coeff), (float(c1), float(c2)))

    def __mul__(self, other):
        if isinstance(other, UmbralMonomial):
            return UmbralMonomial(
                self.coeff * other.coeff,
                (self.powers[0] + other.powers[0], self.powers[1] + other.powers[1]),
            )
        if isinstance(other, (int, float)):
            return UmbralMonomial(self.coeff * other, self.powers)
        return NotImplemented

    __rmul__ = __mul__

    def power(self, p: float) -> "UmbralMonomial":
        """Real power; the coefficient must be positive unless p is an integer."""
        if p != math.floor(p) and self.coeff < 0:
            raise DomainError(f"non-integer power {p} of a negative coefficient")
        return UmbralMonomial(self.coeff ** p, (self.powers[0] * p, self.powers[1] * p))

    def evaluate(self) -> float:
        return self.coeff * recip_gamma1p(self.powers[0]) * recip_gamma1p(self.powers[1])


def _same_powers(p: Exponents, q: Exponents) -> bool:
    return abs(p[0] - q[0]) <= MERGE_TOL and abs(p[1] - q[1]) <= MERGE_TOL


@dataclass(frozen=True)
class UmbralExpr:
    """Normalized sum of monomials (distinct exponent vectors, no zero coefficients)."""
    terms: Tuple[UmbralMonomial, ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[UmbralMonomial]) -> "UmbralExpr":
        merged: List[List] = []  # [powers, [coefficients]] in first-seen order
        for term in terms:
            for entry in merged:
                if _same_powers(entry[0], term.powers):
                    entry[1].append(term.coeff)
                    break
            else:
                merged.append([term.powers, [term.coeff]])
        normalized = []
        for powers, coeffs in merged:
            coeff = math.fsum(coeffs)
            if coeff != 0.0:
                normalized.append(UmbralMonomial(coeff, powers))
        return cls(tuple(normalized))

    @classmethod
    def constant(cls, value: float) -> "UmbralExpr":
        return cls.from_terms([UmbralMonomial.constant(value)])

    @classmethod
    def lift(cls, value) -> "UmbralExpr":
        if isinstance(value, UmbralExpr):
            return value
        if isinstance(value, UmbralMonomial):
            return cls.from_terms([value])
        if isinstance(value, (int, float)):
            return cls.constant(value)
        raise TypeError(f"cannot lift {type(value).__name__} into an umbral expression")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        return add(self, UmbralExpr.lift(other))

    __radd__ = __add__

    def __neg__(self):
        return UmbralExpr(tuple(UmbralMonomial(-t.coeff, t.powers) for t in self.terms))

    def __sub__(self, other):
        return add(self, -UmbralExpr.lift(other))

    def __mul__(self, other):
        return mul(self, UmbralExpr.lift(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return pow_int(self, n)

    def evaluate(self) -> float:
        return evaluate(self)


def add(e1: UmbralExpr, e2: UmbralExpr) -> UmbralExpr:
    return UmbralExpr.from_terms(e1.terms + e2.terms)


def mul(e1: UmbralExpr, e2: UmbralExpr) -> UmbralExpr:
    return UmbralExpr.from_terms(a * b for a in e1.terms for b in e2.terms)


def pow_int(e: UmbralExpr, n: int) -> UmbralExpr:
    if n < 0 or n != int(n):
        raise DomainError(f"pow_int needs a non-negative integer exponent, got {n}")
    result = UmbralExpr.constant(1.0)
    for _ in range(int(n)):
        result = mul(result, e)
    return result


def evaluate(e: UmbralExpr) -> float:
    """sum coeff * phi(e1) * phi(e2), accumulated in term order."""
    return math.fsum(term.evaluate() for term in e.terms)


# Series in a single monomial

def exp_truncated(m: UmbralMonomial, K: int) -> UmbralExpr:
    """sum_{k<K} m^k / k!"""
    terms = []
    current = UmbralMonomial.constant(1.0)
    for k in range(K):
        if k > 0:
            current = current * m * (1.0 / k)
        terms.append(current)
    return UmbralExpr.from_terms(terms)


def geometric_truncated(m: UmbralMonomial, K: int) -> UmbralExpr:
    """sum_{k<K} (-m)^k, the expansion of 1/(1 + m)."""
    terms = []
    current = UmbralMonomial.constant(1.0)
    for k in range(K):
        if k > 0:
            current = current * m * -1.0
        terms.append(current)
    return UmbralExpr.from_terms(terms)


def hermite_umbral(n: int, x: float, y: UmbralMonomial) -> UmbralExpr:
    """H_n(x, y) = n! sum_k x^(n-2k) y^k / ((n-2k)! k!) with an umbral y."""
    if n < 0:
        raise DomainError(f"Hermite degree must be >= 0, got {n}")
    terms = []
    for k in range(n // 2 + 1):
        weight = math.factorial(n) // (math.factorial(n - 2 * k) * math.factorial(k))
        terms.append(y.power(k) * (weight * x ** (n - 2 * k)))
    return UmbralExpr.from_terms(terms)


def gaussian_reduce(n: int, b: float, A: UmbralMonomial, C: UmbralMonomial) -> UmbralExpr:
    """
    Formal value of the integral over the real line of (A x + b)^n exp(-C x^2),
    treating the umbral symbols as constants:
        sqrt(pi) * C^(-1/2) * H_n(b, A^2 / (4 C))
    """
    if not C.coeff > 0:
        raise DomainError(f"Gaussian coefficient must be positive, got {C.coeff}")
    if n < 0:
        raise DomainError(f"moment order must be >= 0, got {n}")
    prefactor = C.power(-0.5) * math.sqrt(math.pi)
    y = A.power(2) * C.power(-1) * 0.25
    return mul(UmbralExpr.lift(prefactor), hermite_umbral(n, b, y))


# Umbral images of the special functions

def struve_umbral_eval(nu: float, x: float, K: int) -> float:
    """
    H_nu(x) = c1^(1/2) c2^(nu+1/2) (x/2)^(nu+1) / (1 + c1 c2 (x/2)^2),
    the geometric factor truncated after K terms.
    """
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    if x < 0.0:
        raise DomainError(f"struve representation needs x >= 0, got {x}")
    half = x / 2.0
    if half == 0.0:
        if nu + 1.0 > 0.0:
            return 0.0
        raise DomainError(f"struve representation is singular at x=0 for nu={nu}")
    prefactor = UmbralMonomial.of(half ** (nu + 1.0), 0.5, nu + 0.5)
    series = geometric_truncated(UmbralMonomial.of(half * half, 1.0, 1.0), K)
    return evaluate(mul(UmbralExpr.lift(prefactor), series))


def bessel_umbral_eval(nu: float, x: float, K: int) -> float:
    """J_nu(x) = (x c / 2)^nu exp(-c (x/2)^2), the exponential truncated after K terms."""
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    if x < 0.0 and nu != math.floor(nu):
        raise DomainError(f"non-integer order {nu} needs x >= 0, got {x}")
    half = x / 2.0
    prefactor = UmbralMonomial.of(half ** nu, nu)
    series = exp_truncated(UmbralMonomial.of(-half * half, 1.0), K)
    return evaluate(mul(UmbralExpr.lift(prefactor), series))


def wright_umbral_eval(alpha: float, beta: float, x: float, K: int) -> float:
    """W_{alpha,beta}(x) = c^(beta-1) exp(c^alpha x), K exponential terms."""
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    prefactor = UmbralMonomial.of(1.0, beta - 1.0)
    series = exp_truncated(UmbralMonomial.of(x, alpha), K)
    return evaluate(mul(UmbralExpr.lift(prefactor), series))


def fn_combo_umbral_eval(n: int, x: float, a: float, b: float, K: int) -> float:
    """F_n(x; a, b) = (a x c / 2 + b)^n exp(-c (x/2)^2), K exponential terms."""
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    half = x / 2.0
    binomial = pow_int(UmbralExpr.from_terms([UmbralMonomial.of(a * half, 1.0), UmbralMonomial.constant(b)]), n)
    series = exp_truncated(UmbralMonomial.of(-half * half, 1.0), K)
    return evaluate(mul(binomial, series))
