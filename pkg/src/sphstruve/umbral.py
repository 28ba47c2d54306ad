"""Operational (umbral) expression machinery.

The function families in this package all admit a formal image in which
a symbol raised to a real power stands for a reciprocal gamma value:
reducing `symbol**a` yields 1/Gamma(1+a).  A finite weighted sum of such
monomials in up to three symbols is an `UmbralExpr`; the truncated
exponential of a symbol monomial is an `UmbralExpSeries`.  Two rewrite
rules close the calculus over everything needed here:

* a Gaussian integral over the real line maps an exponential image to
  another exponential image with the symbol power shifted by -1/2,
* a Laplace-type integral over [0, inf) maps it to a binomial image
  whose reduction is a 1F2 hypergeometric value.

Reduction is linear and exact in the coefficients; certification of a
truncated exponential is a tail-bound check on the reduced terms.
"""

from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .gammakit import gamma, rgamma

__all__ = [
    "UmbralTerm",
    "UmbralExpr",
    "UmbralExpSeries",
    "reduce_expr",
    "expand",
    "gaussian_reduce",
    "laplace_reduce",
]

_MAX_ORDER = 500


@dataclass(frozen=True)
class UmbralTerm:
    """coeff * symbol_1**e_1 * ... * symbol_m**e_m."""

    coeff: float
    exponents: tuple


@dataclass(frozen=True)
class UmbralExpr:
    """Finite sum of umbral monomials over `symbol_count` symbols."""

    symbol_count: int
    terms: tuple

    def __post_init__(self):
        if self.symbol_count not in (1, 2, 3):
            raise DomainError("UmbralExpr: symbol_count must be 1, 2 or 3")
        for t in self.terms:
            if len(t.exponents) != self.symbol_count:
                raise DomainError(
                    "UmbralExpr: term exponent vector length "
                    f"{len(t.exponents)} != symbol_count {self.symbol_count}"
                )

    def scaled(self, factor):
        return UmbralExpr(
            self.symbol_count,
            tuple(UmbralTerm(factor * t.coeff, t.exponents) for t in self.terms),
        )

    def plus(self, other):
        if other.symbol_count != self.symbol_count:
            raise DomainError("UmbralExpr: symbol counts differ")
        return UmbralExpr(self.symbol_count, self.terms + other.terms)


@dataclass(frozen=True)
class UmbralExpSeries:
    """Truncated exponential image.

    Expanding to order N produces N+1 terms; term k carries coefficient
    (sign*scale)**k / k! and exponent vector
    prefactor_exponents + k*step_degrees.
    """

    prefactor_exponents: tuple
    step_degrees: tuple
    scale: float
    sign: int
    order: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("UmbralExpSeries: sign must be +1 or -1")
        if len(self.prefactor_exponents) != len(self.step_degrees):
            raise DomainError("UmbralExpSeries: exponent/step length mismatch")
        if any(d < 0 or d != int(d) for d in self.step_degrees):
            raise DomainError("UmbralExpSeries: step degrees must be nonnegative integers")
        if self.order < 0:
            raise DomainError("UmbralExpSeries: order must be nonnegative")


def expand(series):
    """Expand a truncated umbral exponential into an explicit UmbralExpr."""
    if series.order > _MAX_ORDER:
        raise DomainError(f"expand: order {series.order} exceeds limit {_MAX_ORDER}")
    m = len(series.prefactor_exponents)
    z = series.sign * series.scale
    coeff = 1.0
    terms = []
    for k in range(series.order + 1):
        if k > 0:
            coeff *= z / k
        exps = tuple(
            series.prefactor_exponents[i] + k * series.step_degrees[i] for i in range(m)
        )
        terms.append(UmbralTerm(coeff, exps))
    return UmbralExpr(symbol_count=m, terms=tuple(terms))


def reduce_expr(expr, check_tail_rel=None):
    """Apply symbol**a -> 1/Gamma(1+a) to every term and sum.

    The sum is Kahan-compensated.  With `check_tail_rel` set, the last
    two reduced terms must each be below check_tail_rel * |partial sum|,
    certifying the truncation of an expanded exponential; otherwise a
    ConvergenceError is raised.
    """
    total = 0.0
    comp = 0.0
    reduced_last = []
    for t in expr.terms:
        r = t.coeff
        for e in t.exponents:
            r *= rgamma(1.0 + e)
        reduced_last.append(r)
        if len(reduced_last) > 2:
            reduced_last.pop(0)
        y = r - comp
        s = total + y
        comp = (s - total) - y
        total = s
    if check_tail_rel is not None and expr.terms:
        bound = check_tail_rel * max(abs(total), 1e-300)
        if any(abs(r) > bound for r in reduced_last):
            raise ConvergenceError(
                "reduce_expr: truncation not certified, last terms "
                f"{reduced_last} exceed {bound}"
            )
    return total


def gaussian_reduce(a, q, p, order=60):
    """Rewrite the real-line Gaussian image as an exponential image.

    integral over R of c**a exp(-c q x**2 + c p x) dx equals
    sqrt(pi/q) * c**(a-1/2) * exp(+c p**2/(4q)); this returns the
    exponential image (the caller owns the scalar sqrt(pi/q) factor).
    """
    if not q > 0:
        raise DomainError("gaussian_reduce: q must be positive")
    return UmbralExpSeries(
        prefactor_exponents=(a - 0.5,),
        step_degrees=(1,),
        scale=p * p / (4.0 * q),
        sign=1,
        order=order,
    )


def laplace_reduce(gamma_exp, w, alpha, beta, order=60):
    """Binomially expanded Laplace image of a two-symbol exponential.

    integral over [0, inf) of s**(g-1) exp(-s (1 + c1 c2 w)) ds against
    the prefactor c1**alpha c2**beta gives Gamma(g) (1 + c1 c2 w)**(-g);
    expanded to `order`, term k carries coefficient (-w)**k Gamma(g+k)/k!
    and exponents (alpha+k, beta+k).  Reducing the result evaluates
    Gamma(g)/(Gamma(1+alpha)Gamma(1+beta)) * 1F2(g; 1+alpha, 1+beta; -w)
    up to the truncation order.
    """
    if not gamma_exp > 0:
        raise DomainError("laplace_reduce: exponent parameter must be positive")
    if order > _MAX_ORDER:
        raise DomainError(f"laplace_reduce: order {order} exceeds limit {_MAX_ORDER}")
    coeff = gamma(gamma_exp)
    terms = []
    for k in range(order + 1):
        if k > 0:
            # ratio Gamma(g+k)/Gamma(g+k-1) * (-w)/k
            coeff *= (gamma_exp + k - 1.0) * (-w) / k
        terms.append(UmbralTerm(coeff, (alpha + k, beta + k)))
    return UmbralExpr(symbol_count=2, terms=tuple(terms))
