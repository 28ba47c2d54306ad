"""sphstruve: spherical Bessel, Struve and hyper-Bessel functions with an
umbral evaluation engine, certified quadrature, and a verifier for the
family's closed-form identities."""

from .errors import ConvergenceError, DomainError, PoleError, UnknownIdentityError
from .gammakit import (
    GammaValue,
    Hermite2Coeffs,
    gamma,
    gamma_value,
    hermite2,
    hermite2_coeffs,
    rgamma,
)
from .umbral import (
    UmbralExpSeries,
    UmbralExpr,
    UmbralTerm,
    expand,
    gaussian_reduce,
    laplace_reduce,
    reduce_expr,
)
from .functions import (
    DEFAULT_POLICY,
    EvalPolicy,
    SeriesResult,
    anger,
    cyl_j,
    delta_fn,
    humbert2,
    humbert3,
    hyp1f2,
    mod_i0,
    rayleigh_jn,
    s1,
    s2,
    sph_j,
    sph_j_deriv,
    struve_h,
    weber,
)
from .quadrature import (
    QuadraturePlan,
    QuadratureResult,
    integrate_finite,
    integrate_laguerre,
    integrate_oscillatory,
    integrate_real_line,
)
from .identities import (
    Identity,
    VerificationReport,
    catalog_json,
    get_identity,
    list_identities,
    verify,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "PoleError",
    "UnknownIdentityError",
    "GammaValue",
    "Hermite2Coeffs",
    "gamma",
    "gamma_value",
    "hermite2",
    "hermite2_coeffs",
    "rgamma",
    "UmbralExpSeries",
    "UmbralExpr",
    "UmbralTerm",
    "expand",
    "gaussian_reduce",
    "laplace_reduce",
    "reduce_expr",
    "DEFAULT_POLICY",
    "EvalPolicy",
    "SeriesResult",
    "anger",
    "cyl_j",
    "delta_fn",
    "humbert2",
    "humbert3",
    "hyp1f2",
    "mod_i0",
    "rayleigh_jn",
    "s1",
    "s2",
    "sph_j",
    "sph_j_deriv",
    "struve_h",
    "weber",
    "QuadraturePlan",
    "QuadratureResult",
    "integrate_finite",
    "integrate_laguerre",
    "integrate_oscillatory",
    "integrate_real_line",
    "Identity",
    "VerificationReport",
    "catalog_json",
    "get_identity",
    "list_identities",
    "verify",
    "verify_all",
    "__version__",
]
