"""Machine-checkable catalog of the closed-form identities.

Each catalog entry binds a left-side evaluator (series, quadrature or
umbral pipeline) and a right-side closed form, a parameter window with a
default sample grid, and tolerances matched to the evaluator class:

* 1e-10 .. 1e-12 for pure series/umbral identities,
* 1e-8 for absolutely convergent quadrature,
* 1e-6 for finite-difference relations and conditionally convergent or
  regularized integrals.

The two sides of every identity are evaluated independently: bindings
carry the set of library operations they touch, and the audit (see the
test suite) checks that the sides share nothing above the gamma kernel.
For the handful of within-family relations (recursions, shift-operator
relations) the same function family necessarily appears on both sides;
those entries are flagged `shared_family` and the audit instead requires
the two strategies to differ.
"""

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .errors import DomainError, ConvergenceError, UnknownIdentityError
from .gammakit import SQRT_PI, gamma, rgamma
from . import fd
from .functions import (
    DEFAULT_POLICY,
    anger,
    bessel_j_asym,
    bessel_y_asym,
    cyl_j,
    hankel_coeff_arrays,
    humbert2,
    humbert3,
    mod_i0,
    rayleigh_jn,
    s1,
    s2,
    sinc_sqrt,
    sph_j,
    sph_j_deriv,
    struve_algebraic_tail,
    struve_h,
    watson_a_coeffs,
    weber,
)
from .quadrature import (
    finite_plan,
    integrate_finite,
    integrate_laguerre,
    integrate_oscillatory,
    integrate_real_line,
    oscillatory_plan,
    real_line_plan,
)
from .regularized import power_moment_integral, real_line_squared_integral
from .umbral import laplace_reduce, reduce_expr

__all__ = [
    "Identity",
    "EvaluatorBinding",
    "VerificationReport",
    "list_identities",
    "get_identity",
    "verify",
    "verify_all",
    "catalog_json",
]

# where finite adaptive integration hands over to tail machinery
_TAIL_SPLIT = 50.0


@dataclass(frozen=True)
class EvaluatorBinding:
    """One side of an identity: callable plus audit metadata."""

    fn: object
    operations: frozenset
    strategy: str


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    reference: str  # statement of the verified claim
    params: dict  # name -> ("range", lo, hi) | ("choice", values)
    grid: tuple  # tuple of param dicts
    lhs: EvaluatorBinding
    rhs: EvaluatorBinding
    tol_abs: float
    tol_rel: float
    window_note: str = ""
    shared_family: bool = False

    def __post_init__(self):
        if self.tol_abs <= 0 or self.tol_rel <= 0:
            raise DomainError(f"{self.id}: tolerances must be positive")
        for pt in self.grid:
            self.check_params(pt)

    def check_params(self, params):
        for name, spec in self.params.items():
            if name not in params:
                raise DomainError(f"{self.id}: missing parameter {name!r}")
            v = params[name]
            if spec[0] == "range":
                if not spec[1] <= v <= spec[2]:
                    raise DomainError(
                        f"{self.id}: {name}={v!r} outside window [{spec[1]}, {spec[2]}]"
                    )
            else:
                if v not in spec[1]:
                    raise DomainError(f"{self.id}: {name}={v!r} not among {spec[1]!r}")
        for name in params:
            if name not in self.params:
                raise DomainError(f"{self.id}: unknown parameter {name!r}")


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    params: dict
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    status: str  # pass | fail | skipped
    seconds: float
    reason: str = ""


# ---------------------------------------------------------------------------
# Shared evaluator helpers.


def _sinc(x):
    return math.sin(x) / x if x != 0.0 else 1.0


def _j_parity(n, x):
    """j_n over the whole real line through |x| and parity, bitwise odd/even.

    The series and the trigonometric closed form have complementary
    conditioning (the latter cancels catastrophically for x below ~2n),
    so the integrand switches representation at x = 2n."""
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    ax = abs(x)
    if ax < max(2.0, 2.0 * n):
        v = sph_j(n, ax).value
    else:
        v = rayleigh_jn(n, ax)
    if n % 2 == 1 and x < 0.0:
        return -v
    return v


def _struve_source(alpha, x):
    """(x/2)**alpha / (sqrt(pi) Gamma(alpha + 3/2))."""
    return (x / 2.0) ** alpha * rgamma(alpha + 1.5) / SQRT_PI


def _struve_line_integral(alpha, policy):
    """integral over [0, inf) of H_alpha, for alpha in (-2, 0): finite
    adaptive part plus an oscillatory-accelerated second-kind tail plus
    the exact algebraic tail."""
    T = _TAIL_SPLIT
    policy = replace(policy, crossover_x=18.0)
    head = integrate_finite(
        lambda u: 2.0 * u * struve_h(alpha, u * u, policy).value,
        0.0,
        1.0,
        finite_plan(0.0, 1.0, 1e-10, 1e-10),
    )
    mid = integrate_finite(
        lambda x: struve_h(alpha, x, policy).value,
        1.0,
        T,
        finite_plan(1.0, T, 3e-9, 3e-9, max_cells=4000),
    )
    osc = integrate_oscillatory(
        lambda x: bessel_y_asym(alpha, x),
        T,
        math.pi,
        oscillatory_plan(math.pi, T, 60, 1e-9, 1e-9),
    )
    return head.value + mid.value + osc.value + struve_algebraic_tail(alpha, T)


def _watson_combo_coeffs(nu, sign):
    """Coefficient array of A_nu + sign*A_{-nu} over k (to pair with k!/x^{k+1})."""
    a = watson_a_coeffs(nu)
    b = watson_a_coeffs(-nu)
    return [ai + sign * bi for ai, bi in zip(a, b)]


def _watson_tail(coeffs, T, extra_power):
    """integral over [T, inf) of (1/pi) sum_k c_k k!/x^{k+1} * x^{-extra_power}."""
    total = 0.0
    kfac = 1.0
    for k, c in enumerate(coeffs):
        if k > 0:
            kfac *= k
        p = k + extra_power
        if p <= 0:
            if c != 0.0:
                raise DomainError("watson tail: non-integrable monotone component")
            continue
        total += c * kfac * T ** (-p) / p
    return total / math.pi


def _s_line_integral(nu, kind, extra_power, policy):
    """integral over [0, inf) of S_kind(nu, x)/x**extra_power."""
    T = _TAIL_SPLIT
    policy = replace(policy, crossover_x=18.0)
    if kind == 1:
        f = lambda x: s1(nu, x, policy).value / x**extra_power if extra_power else s1(nu, x, policy).value
    else:
        f = lambda x: s2(nu, x, policy).value / x**extra_power if extra_power else s2(nu, x, policy).value
    head = integrate_finite(f, 0.0, T, finite_plan(0.0, T, 3e-9, 3e-9, max_cells=6000))
    c = math.cos(0.5 * nu * math.pi)
    s = math.sin(0.5 * nu * math.pi)
    if kind == 1:
        osc = lambda x: (c * bessel_j_asym(nu, x) - s * bessel_y_asym(nu, x)) / x**extra_power if extra_power else (
            c * bessel_j_asym(nu, x) - s * bessel_y_asym(nu, x)
        )
        combo = [s * v for v in _watson_combo_coeffs(nu, -1.0)]
    else:
        osc = lambda x: (s * bessel_j_asym(nu, x) + c * bessel_y_asym(nu, x)) / x**extra_power if extra_power else (
            s * bessel_j_asym(nu, x) + c * bessel_y_asym(nu, x)
        )
        combo = [c * v for v in _watson_combo_coeffs(nu, +1.0)]
    tail_osc = integrate_oscillatory(osc, T, math.pi, oscillatory_plan(math.pi, T, 60, 1e-9, 1e-9))
    tail_alg = _watson_tail(combo, T, extra_power)
    return head.value + tail_osc.value + tail_alg


def _product_series_arrays(mu, nu, kmax=12):
    """Convolution arrays of the two phase/amplitude expansions:
    PP+QQ, PQ-QP (constant-phase part) and PP-QQ, PQ+QP (fast part)."""
    pm, qm = hankel_coeff_arrays(mu, kmax)
    pn, qn = hankel_coeff_arrays(nu, kmax)

    def conv(a, b):
        out = [0.0] * (kmax + 1)
        for i in range(kmax + 1):
            if a[i] == 0.0:
                continue
            for j in range(kmax + 1 - i):
                out[i + j] += a[i] * b[j]
        return out

    pp = conv(pm, pn)
    qq = conv(qm, qn)
    pq = conv(pm, qn)
    qp = conv(qm, pn)
    sum_pp_qq = [a + b for a, b in zip(pp, qq)]
    dif_pq_qp = [a - b for a, b in zip(pq, qp)]
    dif_pp_qq = [a - b for a, b in zip(pp, qq)]
    sum_pq_qp = [a + b for a, b in zip(pq, qp)]
    return sum_pp_qq, dif_pq_qp, dif_pp_qq, sum_pq_qp


def _j_product_integral(mu, nu, policy):
    """integral over [0, inf) of (x/2)^{-(mu+nu)} J_mu(x) J_nu(x) dx."""
    T = _TAIL_SPLIT
    policy = replace(policy, crossover_x=18.0)
    g = lambda x: (x / 2.0) ** (-(mu + nu)) * cyl_j(mu, x, policy).value * cyl_j(nu, x, policy).value
    head = integrate_finite(g, 0.0, T, finite_plan(0.0, T, 3e-9, 3e-9, max_cells=6000))
    spp_qq, dpq_qp, dpp_qq, spq_qp = _product_series_arrays(mu, nu)
    delta = 0.5 * (nu - mu) * math.pi
    cd, sd = math.cos(delta), math.sin(delta)
    scale = 2.0**(mu + nu)

    def osc(x):
        # fast part: phase 2x - (mu+nu+1) pi/2
        sig = 2.0 * x - 0.5 * (mu + nu + 1.0) * math.pi
        pp = 0.0
        pq = 0.0
        u = 1.0
        for m in range(len(spp_qq)):
            pp += dpp_qq[m] * u
            pq += spq_qp[m] * u
            u /= x
        return scale * x ** (-(mu + nu) - 1.0) / math.pi * (pp * math.cos(sig) - pq * math.sin(sig))

    tail_osc = integrate_oscillatory(osc, T, math.pi / 2.0, oscillatory_plan(math.pi / 2.0, T, 80, 1e-9, 1e-9))
    # constant-phase part integrates in closed form
    tail_mono = 0.0
    for m in range(len(spp_qq)):
        cm = (spp_qq[m] * cd + dpq_qp[m] * sd) * scale / math.pi
        p = mu + nu + m
        tail_mono += cm * T ** (-p) / p
    return head.value + tail_osc.value + tail_mono


def _generating_sum(x, t, policy, nmax=25):
    total = 0.0
    coeff = 1.0
    for n in range(nmax + 1):
        if n > 0:
            coeff *= t / n
        total += coeff * sph_j(n, x, policy).value
    return total


def _i16_lhs(u, v, x, policy, m_cut=14):
    total = 0.0
    for m in range(-m_cut, m_cut + 1):
        for n in range(-m_cut, m_cut + 1):
            total += u**m * v**n * humbert2(float(m), float(n), x, policy).value
    return total


def _i17_lhs(u, v, x, gamma_p, policy, m_cut=14):
    w = (x / 2.0) ** 2
    total = 0.0
    for m in range(-m_cut, m_cut + 1):
        for n in range(-m_cut, m_cut + 1):
            expr = laplace_reduce(gamma_p, w, float(m), float(n), order=60)
            total += u**m * v**n * reduce_expr(expr)
    return total


def _spherical_ode_residual(n, x, policy):
    f = lambda t: sph_j(n, t, policy).value
    d2 = fd.deriv2(f, x)
    d1 = fd.deriv1(f, x)
    j = f(x)
    residual = x * x * d2 + 2.0 * x * d1 + (x * x - n * (n + 1.0)) * j
    scale = abs(x * x * d2)
    return residual / scale


def _shift_relation_defect(family, direction, order, x, policy):
    """Relative defect of the order shift relations; lhs applies
    (order/x -/+ d/dx) numerically, rhs is the shifted member (plus the
    power source term for the raising Struve relation)."""
    if family == "bessel":
        f = lambda t: cyl_j(order, t, policy).value
        val = f(x)
        d1 = fd.deriv1(f, x)
        lhs = order / x * val - direction * d1
        rhs = cyl_j(order + direction, x, policy).value
    else:
        f = lambda t: struve_h(order, t, policy).value
        val = f(x)
        d1 = fd.deriv1(f, x)
        lhs = order / x * val - direction * d1
        if direction == 1:
            rhs = struve_h(order + 1, x, policy).value - _struve_source(order, x)
        else:
            rhs = struve_h(order - 1, x, policy).value
    return lhs, rhs


def _deriv_n_sinc(n, x):
    f = _sinc
    if n == 1:
        return fd.deriv1(f, x)
    if n == 2:
        return fd.deriv2(f, x)
    if n == 3:
        return fd.deriv3(f, x)
    raise DomainError("derivative order limited to 3 in the default grid")


# ---------------------------------------------------------------------------
# Catalog construction.


def _binding(fn, ops, strategy):
    return EvaluatorBinding(fn=fn, operations=frozenset(ops), strategy=strategy)


def _grid(*dicts):
    return tuple(dicts)


def _product_grid(**axes):
    names = list(axes)
    pts = [{}]
    for name in names:
        pts = [dict(p, **{name: v}) for p in pts for v in axes[name]]
    return tuple(pts)


def _build_catalog():
    ids = []

    ids.append(Identity(
        id="I01",
        description="Real-line integral of the zeroth spherical function equals pi",
        reference="integral over R of j_0(x) dx = pi",
        params={},
        grid=_grid({}),
        lhs=_binding(
            lambda p, pol: integrate_real_line(lambda x: _j_parity(0, x), real_line_plan(math.pi, 40.0, 60, 1e-9, 1e-9)).value,
            {"integrate_real_line", "rayleigh_jn", "sph_j"},
            "oscillatory-quadrature",
        ),
        rhs=_binding(lambda p, pol: math.pi, set(), "constant"),
        tol_abs=1e-8,
        tol_rel=1e-8,
    ))

    ids.append(Identity(
        id="I02",
        description="Exponential generating function of the spherical family collapses to a shifted j_0",
        reference="sum_n t^n/n! j_n(x) = j_0(sqrt(x^2 - 2xt))",
        params={"t": ("range", -1.0, 1.0), "x": ("range", 0.25, 8.0)},
        grid=_product_grid(t=(-0.75, -0.25, 0.25, 0.75), x=(0.5, 2.0, 5.0)),
        lhs=_binding(
            lambda p, pol: _generating_sum(p["x"], p["t"], pol),
            {"sph_j"},
            "series-sum",
        ),
        rhs=_binding(
            lambda p, pol: sinc_sqrt(p["x"] ** 2 - 2.0 * p["x"] * p["t"]),
            set(),
            "closed-form",
        ),
        tol_abs=1e-12,
        tol_rel=1e-12,
        window_note="points with x^2 < 2xt use the even continuation (sinh branch)",
    ))

    ids.append(Identity(
        id="I03",
        description="Iterated (x^-1 d/dx) applied to j_0 reproduces j_n",
        reference="j_n(x) = (-x)^n (x^{-1} d/dx)^n j_0(x)",
        params={"n": ("choice", (1, 2, 3)), "x": ("range", 0.5, 8.0)},
        grid=_product_grid(n=(1, 2, 3), x=(0.8, 1.6, 3.0, 6.4)),
        lhs=_binding(
            lambda p, pol: (-p["x"]) ** p["n"] * fd.inv_x_d_dx_n(_sinc, p["x"], p["n"]),
            {"fd"},
            "fd-operator",
        ),
        rhs=_binding(lambda p, pol: sph_j(p["n"], p["x"], pol).value, {"sph_j"}, "series"),
        tol_abs=1e-6,
        tol_rel=1e-6,
    ))

    ids.append(Identity(
        id="I04",
        description="Closed finite sum for the n-th derivative of j_0",
        reference="d^n/dx^n j_0 = n! sum_k (-1)^(n+k) (2x)^-k/(k!(n-2k)!) j_{n-k}(x)",
        params={"n": ("choice", (1, 2, 3)), "x": ("range", 0.5, 8.0)},
        grid=_product_grid(n=(1, 2, 3), x=(0.8, 1.6, 3.0, 6.4)),
        lhs=_binding(
            lambda p, pol: _deriv_n_sinc(p["n"], p["x"]),
            {"fd"},
            "fd-derivative",
        ),
        rhs=_binding(lambda p, pol: sph_j_deriv(p["n"], p["x"], pol), {"sph_j_deriv", "sph_j"}, "closed-sum"),
        tol_abs=1e-6,
        tol_rel=1e-6,
    ))

    ids.append(Identity(
        id="I05",
        description="Real-line moments of the spherical family: even orders hit the gamma ratio, odd orders vanish",
        reference="integral over R of j_{2n} dx = sqrt(pi) Gamma(n+1/2)/n!, odd orders integrate to zero",
        params={"m": ("choice", (0, 1, 2, 3, 4, 5, 6, 7))},
        grid=_product_grid(m=(0, 1, 2, 3, 4, 5, 6, 7)),
        lhs=_binding(
            lambda p, pol: integrate_real_line(
                lambda x, m=p["m"]: _j_parity(m, x),
                real_line_plan(math.pi, 40.0, 60, 1e-9, 1e-9),
            ).value,
            {"integrate_real_line", "rayleigh_jn", "sph_j"},
            "oscillatory-quadrature",
        ),
        rhs=_binding(
            lambda p, pol: SQRT_PI * gamma(p["m"] // 2 + 0.5) / math.factorial(p["m"] // 2)
            if p["m"] % 2 == 0
            else 0.0,
            {"gamma"},
            "closed-form",
        ),
        tol_abs=1e-10,
        tol_rel=1e-6,
        window_note="odd orders integrate to exactly zero by parity detection",
    ))

    ids.append(Identity(
        id="I06",
        description="Moment generating function of the real-line integrals equals pi times the modified order-0 function",
        reference="integral over R of j_0(sqrt(x^2-2xt)) dx = pi I_0(t)",
        params={"t": ("range", 0.0, 3.0)},
        grid=_product_grid(t=(0.5, 1.0, 2.0)),
        lhs=_binding(
            lambda p, pol: integrate_real_line(
                lambda x, t=p["t"]: sinc_sqrt(x * x - 2.0 * x * t),
                real_line_plan(math.pi, 40.0, 60, 1e-9, 1e-9),
            ).value,
            {"integrate_real_line"},
            "oscillatory-quadrature",
        ),
        rhs=_binding(lambda p, pol: math.pi * mod_i0(p["t"], pol), {"mod_i0"}, "series"),
        tol_abs=1e-8,
        tol_rel=1e-8,
    ))

    ids.append(Identity(
        id="I07",
        description="Quadratic-argument real-line integral as a modified-function image",
        reference="integral over R of j_0(sqrt(a x^2 + b x)) dx = (pi/sqrt(a)) I_0(b/(2 sqrt(a)))",
        params={"a": ("range", 0.25, 4.0), "b": ("range", 0.0, 4.0)},
        grid=_grid(
            {"a": 1.0, "b": 0.5},
            {"a": 0.5, "b": 1.0},
            {"a": 2.0, "b": 1.5},
            {"a": 1.0, "b": 2.0},
            {"a": 1.5, "b": 0.8},
        ),
        lhs=_binding(
            lambda p, pol: integrate_real_line(
                lambda x, a=p["a"], b=p["b"]: sinc_sqrt(a * x * x + b * x),
                real_line_plan(math.pi / math.sqrt(p["a"]), 40.0, 60, 1e-9, 1e-9),
            ).value,
            {"integrate_real_line"},
            "oscillatory-quadrature",
        ),
        rhs=_binding(
            lambda p, pol: math.pi / math.sqrt(p["a"]) * mod_i0(p["b"] / (2.0 * math.sqrt(p["a"])), pol),
            {"mod_i0"},
            "series",
        ),
        tol_abs=1e-8,
        tol_rel=1e-8,
    ))

    struve_axes = dict(alpha=(0.5, 1.0, 1.7), x=(0.8, 2.0, 5.0))
    ids.append(Identity(
        id="I08",
        description="Differentiation formula of the Struve family",
        reference="dH_a/dx = (H_{a-1} - H_{a+1} + (x/2)^a/(sqrt(pi)Gamma(a+3/2)))/2",
        params={"alpha": ("range", 0.0, 3.0), "x": ("range", 0.5, 10.0)},
        grid=_product_grid(**struve_axes),
        lhs=_binding(
            lambda p, pol: fd.deriv1(lambda t: struve_h(p["alpha"], t, pol).value, p["x"]),
            {"struve_h", "fd"},
            "fd-derivative",
        ),
        rhs=_binding(
            lambda p, pol: 0.5
            * (
                struve_h(p["alpha"] - 1.0, p["x"], pol).value
                - struve_h(p["alpha"] + 1.0, p["x"], pol).value
                + _struve_source(p["alpha"], p["x"])
            ),
            {"struve_h", "gamma"},
            "order-shift-combination",
        ),
        tol_abs=1e-6,
        tol_rel=1e-6,
        shared_family=True,
    ))

    ids.append(Identity(
        id="I09",
        description="Three-term recursion of the Struve family",
        reference="H_{a+1} + H_{a-1} = (2a/x) H_a + (x/2)^a/(sqrt(pi)Gamma(a+3/2))",
        params={"alpha": ("range", 0.0, 3.0), "x": ("range", 0.25, 15.0)},
        grid=_product_grid(alpha=(0.5, 1.0, 1.7), x=(0.5, 2.0, 10.0)),
        lhs=_binding(
            lambda p, pol: struve_h(p["alpha"] + 1.0, p["x"], pol).value
            + struve_h(p["alpha"] - 1.0, p["x"], pol).value,
            {"struve_h"},
            "order-shift-sum",
        ),
        rhs=_binding(
            lambda p, pol: 2.0 * p["alpha"] / p["x"] * struve_h(p["alpha"], p["x"], pol).value
            + _struve_source(p["alpha"], p["x"]),
            {"struve_h", "gamma"},
            "weighted-value-plus-source",
        ),
        tol_abs=1e-6,
        tol_rel=1e-6,
        shared_family=True,
    ))

    ids.append(Identity(
        id="I10",
        description="Non-homogeneous second-order equation satisfied by the Struve family",
        reference="(x d/dx)^2 H_a + (x^2 - a^2) H_a = 4 (x/2)^(a+1)/(sqrt(pi) Gamma(a+1/2))",
        params={"alpha": ("range", 0.0, 3.0), "x": ("range", 0.5, 10.0)},
        grid=_product_grid(**struve_axes),
        lhs=_binding(
            lambda p, pol: (
                p["x"] ** 2 * fd.deriv2(lambda t: struve_h(p["alpha"], t, pol).value, p["x"])
                + p["x"] * fd.deriv1(lambda t: struve_h(p["alpha"], t, pol).value, p["x"])
                + (p["x"] ** 2 - p["alpha"] ** 2) * struve_h(p["alpha"], p["x"], pol).value
            ),
            {"struve_h", "fd"},
            "fd-ode-lhs",
        ),
        rhs=_binding(
            lambda p, pol: 4.0 * (p["x"] / 2.0) ** (p["alpha"] + 1.0) * rgamma(p["alpha"] + 0.5) / SQRT_PI,
            {"gamma"},
            "closed-form",
        ),
        tol_abs=1e-5,
        tol_rel=1e-6,
    ))

    ids.append(Identity(
        id="I11",
        description="Exponential-weight integral representation of the Struve family via the two-index series",
        reference="H_a(x) = (x/2)^(a+1) integral_0^inf e^-s J_{1/2, a+1/2}(s (x/2)^2) ds",
        params={"alpha": ("range", -0.5, 2.0), "x": ("range", 0.25, 6.0)},
        grid=_product_grid(alpha=(0.0, 0.5, 1.0), x=(0.5, 1.0, 2.0, 5.0)),
        lhs=_binding(
            lambda p, pol: (p["x"] / 2.0) ** (p["alpha"] + 1.0)
            * integrate_laguerre(
                lambda s, a=p["alpha"], x=p["x"]: humbert2(0.5, a + 0.5, s * (x / 2.0) ** 2, pol).value,
                0.0,
                80,
            ).value,
            {"integrate_laguerre", "humbert2"},
            "laguerre-quadrature",
        ),
        rhs=_binding(lambda p, pol: struve_h(p["alpha"], p["x"], pol).value, {"struve_h"}, "series"),
        tol_abs=1e-8,
        tol_rel=1e-8,
    ))

    ids.append(Identity(
        id="I12",
        description="Real-line integral of the squared-argument two-index series",
        reference="integral over R of J_{mu,nu}(x^2) dx = sqrt(pi)/(Gamma(mu+1/2)Gamma(nu+1/2))",
        params={"mu": ("choice", (0.0, 0.5, 1.0, 1.5, 2.0)), "nu": ("choice", (0.0, 0.5, 1.0, 1.5, 2.0))},
        grid=_grid(
            {"mu": 0.0, "nu": 0.0},
            {"mu": 0.5, "nu": 1.0},
            {"mu": 1.0, "nu": 2.0},
            {"mu": 0.5, "nu": 0.5},
            {"mu": 2.0, "nu": 1.0},
        ),
        lhs=_binding(
            lambda p, pol: real_line_squared_integral(p["mu"], p["nu"]),
            {"regularized"},
            "regularized-phase-integral",
        ),
        rhs=_binding(
            lambda p, pol: SQRT_PI * rgamma(p["mu"] + 0.5) * rgamma(p["nu"] + 0.5),
            {"gamma"},
            "closed-form",
        ),
        tol_abs=1e-8,
        tol_rel=1e-8,
        window_note=(
            "integrand envelope grows ~exp(1.5 x^(2/3)); value is the Abel/Mellin-"
            "regularized one, computed by phase substitution + asymptotic tail"
        ),
    ))

    ids.append(Identity(
        id="I13",
        description="Power moments of the two-index series reduce to a gamma ratio",
        reference="integral_0^inf x^(a-1) J_{mu,nu}(x) dx = Gamma(a)/(Gamma(mu-a+1)Gamma(nu-a+1))",
        params={
            "alpha": ("range", 0.05, 0.95),
            "mu": ("choice", (0.0, 0.5, 1.0, 1.5, 2.0)),
            "nu": ("choice", (0.0, 0.5, 1.0, 1.5, 2.0)),
        },
        grid=_grid(
            {"alpha": 0.5, "mu": 0.0, "nu": 0.0},
            {"alpha": 0.25, "mu": 1.0, "nu": 0.5},
            {"alpha": 0.75, "mu": 2.0, "nu": 1.0},
            {"alpha": 0.5, "mu": 1.0, "nu": 1.0},
            {"alpha": 0.25, "mu": 0.5, "nu": 0.5},
        ),
        lhs=_binding(
            lambda p, pol: power_moment_integral(p["alpha"], p["mu"], p["nu"]),
            {"regularized"},
            "regularized-phase-integral",
        ),
        rhs=_binding(
            lambda p, pol: gamma(p["alpha"]) * rgamma(p["mu"] - p["alpha"] + 1.0) * rgamma(p["nu"] - p["alpha"] + 1.0),
            {"gamma"},
            "closed-form",
        ),
        tol_abs=1e-6,
        tol_rel=1e-6,
        window_note="window alpha in (0,1), mu,nu in [0,2]; regularized as in I12",
    ))

    ids.append(Identity(
        id="I14",
        description="Half-line integral of the Struve family equals a negative cotangent",
        reference="integral_0^inf H_a(x) dx = -cot(a pi/2), -2 < a < 0",
        params={"alpha": ("range", -1.9, -0.1)},
        grid=_product_grid(alpha=(-1.5, -1.0, -0.5)),
        lhs=_binding(
            lambda p, pol: _struve_line_integral(p["alpha"], pol),
            {"struve_h", "integrate_finite", "integrate_oscillatory", "hankel"},
            "split-tail-quadrature",
        ),
        rhs=_binding(
            lambda p, pol: -math.cos(0.5 * p["alpha"] * math.pi) / math.sin(0.5 * p["alpha"] * math.pi),
            set(),
            "closed-form",
        ),
        tol_abs=1e-6,
        tol_rel=1e-6,
        window_note="conditionally convergent; oscillatory tail accelerated from x=50",
    ))

    ids.append(Identity(
        id="I15",
        description="Weighted exponential integral of the two-index series equals its hypergeometric closed form",
        reference="Delta_{a,b,g}(x) = Gamma(g)/(Gamma(1+a)Gamma(1+b)) 1F2(g; 1+a, 1+b; -x^2/4)",
        params={
            "alpha": ("choice", (0.0, 0.5, 1.0)),
            "beta": ("choice", (0.0, 0.5, 1.0)),
            "gamma_p": ("choice", (0.5, 1.0)),
            "x": ("range", 0.25, 6.0),
        },
        grid=_product_grid(alpha=(0.0, 0.5, 1.0), beta=(0.0, 0.5, 1.0), gamma_p=(0.5, 1.0), x=(0.5, 1.0, 2.0, 5.0)),
        lhs=_binding(
            lambda p, pol: integrate_laguerre(
                lambda s, a=p["alpha"], b=p["beta"], x=p["x"]: humbert2(a, b, s * (x / 2.0) ** 2, pol).value,
                p["gamma_p"] - 1.0,
                80,
            ).value,
            {"integrate_laguerre", "humbert2"},
            "laguerre-quadrature",
        ),
        rhs=_binding(
            lambda p, pol: delta_closed_form(p["alpha"], p["beta"], p["gamma_p"], p["x"], pol),
            {"delta_fn", "hyp1f2", "gamma"},
            "hypergeometric-series",
        ),
        tol_abs=1e-12,
        tol_rel=1e-9,
    ))

    ids.append(Identity(
        id="I16",
        description="Bilateral double generating function of the two-index family",
        reference="sum_{m,n in Z} u^m v^n J_{m,n}(x) = exp(u + v - x/(uv))",
        params={"u": ("range", 0.5, 1.5), "v": ("range", 0.5, 1.5), "x": ("range", 0.1, 1.0)},
        grid=_grid(
            {"u": 1.0, "v": 1.0, "x": 0.5},
            {"u": 0.8, "v": 1.2, "x": 0.6},
            {"u": 1.1, "v": 0.9, "x": 0.3},
        ),
        lhs=_binding(
            lambda p, pol: _i16_lhs(p["u"], p["v"], p["x"], pol),
            {"humbert2"},
            "truncated-double-sum",
        ),
        rhs=_binding(
            lambda p, pol: math.exp(p["u"] + p["v"] - p["x"] / (p["u"] * p["v"])),
            set(),
            "closed-form",
        ),
        tol_abs=1e-12,
        tol_rel=1e-10,
        window_note="double sum truncated at |m|,|n| <= 14",
    ))

    ids.append(Identity(
        id="I17",
        description="Double generating function of the weighted-integral family via the umbral pipeline",
        reference="sum_{m,n} u^m v^n Delta_{m,n,g}(x) = e^(u+v) Gamma(g)/(1 + (x/2)^2/(uv))^g",
        params={
            "u": ("range", 0.5, 1.5),
            "v": ("range", 0.5, 1.5),
            "x": ("range", 0.1, 1.0),
            "gamma_p": ("choice", (1.0, 2.0)),
        },
        grid=_grid(
            {"u": 1.0, "v": 1.0, "x": 0.5, "gamma_p": 1.0},
            {"u": 1.0, "v": 1.0, "x": 0.5, "gamma_p": 2.0},
            {"u": 0.8, "v": 1.2, "x": 0.6, "gamma_p": 1.0},
            {"u": 0.8, "v": 1.2, "x": 0.6, "gamma_p": 2.0},
        ),
        lhs=_binding(
            lambda p, pol: _i17_lhs(p["u"], p["v"], p["x"], p["gamma_p"], pol),
            {"laplace_reduce", "reduce_expr"},
            "umbral-pipeline",
        ),
        rhs=_binding(
            lambda p, pol: math.exp(p["u"] + p["v"])
            * gamma(p["gamma_p"])
            / (1.0 + (p["x"] / 2.0) ** 2 / (p["u"] * p["v"])) ** p["gamma_p"],
            {"gamma"},
            "closed-form",
        ),
        tol_abs=1e-12,
        tol_rel=1e-10,
        window_note="requires (x/2)^2 < |uv|; double sum truncated at |m|,|n| <= 14",
    ))

    ids.append(Identity(
        id="I18",
        description="Product of two first-kind cylindrical functions as an exponential-weight image of the three-index series",
        reference="J_mu(x) J_nu(x) = (x/2)^(mu+nu) integral_0^inf e^-s s^(mu+nu) J_{mu,nu,mu+nu}(s^2 x^2/4) ds",
        params={
            "mu": ("choice", (0.0, 0.5, 1.0)),
            "nu": ("choice", (0.0, 0.5, 2.0)),
            "x": ("range", 0.25, 4.0),
        },
        grid=_grid(
            {"mu": 0.0, "nu": 0.0, "x": 0.5},
            {"mu": 0.0, "nu": 0.0, "x": 1.0},
            {"mu": 0.0, "nu": 0.0, "x": 3.0},
            {"mu": 0.5, "nu": 0.5, "x": 0.5},
            {"mu": 0.5, "nu": 0.5, "x": 1.0},
            {"mu": 0.5, "nu": 0.5, "x": 3.0},
            {"mu": 1.0, "nu": 2.0, "x": 0.5},
            {"mu": 1.0, "nu": 2.0, "x": 1.0},
            {"mu": 1.0, "nu": 2.0, "x": 3.0},
        ),
        lhs=_binding(
            lambda p, pol: cyl_j(p["mu"], p["x"], pol).value * cyl_j(p["nu"], p["x"], pol).value,
            {"cyl_j"},
            "series-product",
        ),
        rhs=_binding(
            lambda p, pol: (p["x"] / 2.0) ** (p["mu"] + p["nu"])
            * integrate_laguerre(
                lambda s, m=p["mu"], n=p["nu"], x=p["x"]: humbert3(m, n, m + n, (s * s) * (x * x) / 4.0, pol).value,
                p["mu"] + p["nu"],
                100,
            ).value,
            {"integrate_laguerre", "humbert3"},
            "laguerre-quadrature",
        ),
        tol_abs=1e-12,
        tol_rel=1e-8,
    ))

    ids.append(Identity(
        id="I19",
        description="Weighted half-line integral of a product of two first-kind cylindrical functions",
        reference="integral_0^inf (x/2)^(-mu-nu) J_mu J_nu dx = sqrt(pi) Gamma(mu+nu)/(Gamma(mu+1/2)Gamma(nu+1/2)Gamma(mu+nu+1/2))",
        params={"mu": ("range", 0.1, 2.0), "nu": ("range", 0.1, 2.0)},
        grid=_grid(
            {"mu": 0.5, "nu": 0.5},
            {"mu": 0.5, "nu": 1.0},
            {"mu": 1.0, "nu": 1.0},
            {"mu": 0.25, "nu": 0.75},
            {"mu": 1.0, "nu": 2.0},
        ),
        lhs=_binding(
            lambda p, pol: _j_product_integral(p["mu"], p["nu"], pol),
            {"cyl_j", "integrate_finite", "integrate_oscillatory", "hankel"},
            "split-tail-quadrature",
        ),
        rhs=_binding(
            lambda p, pol: SQRT_PI
            * gamma(p["mu"] + p["nu"])
            * rgamma(p["mu"] + 0.5)
            * rgamma(p["nu"] + 0.5)
            * rgamma(p["mu"] + p["nu"] + 0.5),
            {"gamma"},
            "closed-form",
        ),
        tol_abs=1e-6,
        tol_rel=1e-6,
        window_note="window mu+nu in (0.5, 3); conditionally convergent oscillatory part",
    ))

    ids.append(Identity(
        id="I20",
        description="Trigonometric-matrix decomposition consistency: integer orders collapse to the cylindrical function, the zero-order second component to the negative Struve value",
        reference="A_n(x) = J_n(x) for integer n; E_0(x) = -H_0(x)",
        params={
            "mode": ("choice", ("anger", "weber")),
            "n": ("choice", (0, 1, 2, 3)),
            "x": ("range", 0.05, 24.0),
        },
        grid=_product_grid(mode=("anger",), n=(0, 1, 2, 3), x=(0.5, 1.0, 5.0, 20.0))
        + _product_grid(mode=("weber",), n=(0,), x=(0.1, 1.0, 5.0, 20.0)),
        lhs=_binding(
            lambda p, pol: anger(float(p["n"]), p["x"], pol) if p["mode"] == "anger" else weber(0.0, p["x"], pol),
            {"s1", "s2"},
            "auxiliary-series-matrix",
        ),
        rhs=_binding(
            lambda p, pol: cyl_j(float(p["n"]), p["x"], pol).value
            if p["mode"] == "anger"
            else -struve_h(0.0, p["x"], pol).value,
            {"cyl_j", "struve_h"},
            "series",
        ),
        tol_abs=1e-10,
        tol_rel=1e-10,
    ))

    ids.append(Identity(
        id="I21",
        description="Half-line integral of the first auxiliary series equals a cosine",
        reference="integral_0^inf S_1(nu, x) dx = cos(nu pi/2)",
        params={"nu": ("range", 0.0, 1.5)},
        grid=_product_grid(nu=(0.0, 0.5, 1.0, 1.5)),
        lhs=_binding(
            lambda p, pol: _s_line_integral(p["nu"], 1, 0, pol),
            {"s1", "integrate_finite", "integrate_oscillatory", "hankel", "anger_a"},
            "split-tail-quadrature",
        ),
        rhs=_binding(lambda p, pol: math.cos(0.5 * p["nu"] * math.pi), set(), "closed-form"),
        tol_abs=1e-6,
        tol_rel=1e-6,
        window_note="window |nu| <= 1.5; tail accelerated from x=50",
    ))

    ids.append(Identity(
        id="I22",
        description="Weighted half-line integral of the second auxiliary series equals a sinc of the order",
        reference="integral_0^inf S_2(nu, x)/x dx = sin(nu pi/2)/nu",
        params={"nu": ("range", 0.1, 1.5)},
        grid=_product_grid(nu=(0.5, 1.0, 1.5)),
        lhs=_binding(
            lambda p, pol: _s_line_integral(p["nu"], 2, 1, pol),
            {"s2", "integrate_finite", "integrate_oscillatory", "hankel", "anger_a"},
            "split-tail-quadrature",
        ),
        rhs=_binding(
            lambda p, pol: math.sin(0.5 * p["nu"] * math.pi) / p["nu"],
            set(),
            "closed-form",
        ),
        tol_abs=1e-6,
        tol_rel=1e-6,
        window_note="window 0 < |nu| <= 1.5; tail accelerated from x=50",
    ))

    ids.append(Identity(
        id="I23",
        description="Second-order equation satisfied by the spherical family (scaled residual)",
        reference="x^2 j_n'' + 2x j_n' + (x^2 - n(n+1)) j_n = 0",
        params={"n": ("choice", (0, 1, 2, 3, 5)), "x": ("range", 0.5, 10.0)},
        grid=_product_grid(n=(0, 1, 2, 3, 5), x=(0.9, 1.7, 3.3, 7.1)),
        lhs=_binding(
            lambda p, pol: _spherical_ode_residual(p["n"], p["x"], pol),
            {"sph_j", "fd"},
            "fd-ode-residual",
        ),
        rhs=_binding(lambda p, pol: 0.0, set(), "constant"),
        tol_abs=1e-6,
        tol_rel=1e-6,
        window_note="residual scaled by x^2 |j_n''|",
    ))

    ids.append(Identity(
        id="I24",
        description="Raising/lowering shift relations for the cylindrical and Struve families",
        reference="(nu/x -/+ d/dx) F_nu = F_{nu +/- 1} (with the power source term on the raising Struve side)",
        params={
            "family": ("choice", ("bessel", "struve")),
            "direction": ("choice", (1, -1)),
            "order": ("choice", (0.5, 1.7)),
            "x": ("range", 0.5, 10.0),
        },
        grid=_product_grid(family=("bessel", "struve"), direction=(1, -1), order=(0.5, 1.7), x=(0.8, 2.0, 5.0)),
        lhs=_binding(
            lambda p, pol: _shift_relation_defect(p["family"], p["direction"], p["order"], p["x"], pol)[0],
            {"cyl_j", "struve_h", "fd"},
            "fd-shift-operator",
        ),
        rhs=_binding(
            lambda p, pol: _shift_relation_defect(p["family"], p["direction"], p["order"], p["x"], pol)[1],
            {"cyl_j", "struve_h", "gamma"},
            "order-shift",
        ),
        tol_abs=1e-6,
        tol_rel=1e-6,
        shared_family=True,
    ))

    return {iden.id: iden for iden in ids}


def delta_closed_form(alpha, beta, gamma_p, x, policy=None):
    from .functions import delta_fn

    return delta_fn(alpha, beta, gamma_p, x, policy)


_CATALOG = None


def _catalog():
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
    return _CATALOG


def list_identities():
    """The fixed catalog I01..I24, in id order."""
    cat = _catalog()
    return [cat[k] for k in sorted(cat)]


def get_identity(identity_id):
    cat = _catalog()
    try:
        return cat[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def verify(identity_id, params=None, policy=None):
    """Evaluate both sides of one identity at one parameter point."""
    iden = get_identity(identity_id)
    policy = policy or DEFAULT_POLICY
    if params is None:
        params = dict(iden.grid[0]) if iden.grid else {}
    iden.check_params(params)
    start = time.perf_counter()
    try:
        lhs = iden.lhs.fn(params, policy)
        rhs = iden.rhs.fn(params, policy)
    except (DomainError, ConvergenceError, OverflowError) as exc:
        return VerificationReport(
            identity_id=iden.id,
            params=dict(params),
            lhs=math.nan,
            rhs=math.nan,
            abs_err=math.nan,
            rel_err=math.nan,
            status="skipped",
            seconds=time.perf_counter() - start,
            reason=f"{type(exc).__name__}: {exc}",
        )
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(rhs) if rhs != 0.0 else math.inf
    status = "pass" if (abs_err <= iden.tol_abs or rel_err <= iden.tol_rel) else "fail"
    return VerificationReport(
        identity_id=iden.id,
        params=dict(params),
        lhs=lhs,
        rhs=rhs,
        abs_err=abs_err,
        rel_err=rel_err,
        status=status,
        seconds=time.perf_counter() - start,
    )


def _jittered_grid(iden, rng):
    pts = []
    for pt in iden.grid:
        q = dict(pt)
        for name, spec in iden.params.items():
            if spec[0] != "range":
                continue
            lo, hi = spec[1], spec[2]
            width = hi - lo
            v = q[name] + rng.uniform(-0.02, 0.02) * width
            margin = 0.01 * width
            q[name] = min(max(v, lo + margin), hi - margin)
        pts.append(q)
    return pts


def verify_all(policy=None, parallelism=1, ids=None, seed=0):
    """Run every identity over its default grid.

    Reports come back ordered by (identity id, grid index) regardless of
    the execution schedule.  A nonzero seed jitters every range-valued
    grid coordinate by up to +/-2% of its window width (clipped to the
    interior), which is how the catalog windows get exercised off their
    default points.
    """
    policy = policy or DEFAULT_POLICY
    identities = list_identities() if ids is None else [get_identity(i) for i in ids]
    jobs = []
    if seed:
        import random

        rng = random.Random(seed)
        for iden in identities:
            for pt in _jittered_grid(iden, rng):
                jobs.append((iden.id, pt))
    else:
        for iden in identities:
            for pt in iden.grid:
                jobs.append((iden.id, dict(pt)))
    if parallelism <= 1:
        return [verify(i, p, policy) for i, p in jobs]
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        futures = [pool.submit(verify, i, p, policy) for i, p in jobs]
        return [f.result() for f in futures]


def catalog_json():
    """Catalog export: id, description, reference, params, grid, tolerances."""
    out = []
    for iden in list_identities():
        out.append(
            {
                "id": iden.id,
                "description": iden.description,
                "reference": iden.reference,
                "params": {
                    k: {"kind": v[0], "window": list(v[1:]) if v[0] == "range" else list(v[1])}
                    for k, v in iden.params.items()
                },
                "grid": [dict(p) for p in iden.grid],
                "tol_abs": iden.tol_abs,
                "tol_rel": iden.tol_rel,
                "window_note": iden.window_note,
                "shared_family": iden.shared_family,
                "lhs": {"operations": sorted(iden.lhs.operations), "strategy": iden.lhs.strategy},
                "rhs": {"operations": sorted(iden.rhs.operations), "strategy": iden.rhs.strategy},
            }
        )
    return out
