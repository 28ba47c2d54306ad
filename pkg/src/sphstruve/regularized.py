"""Regularized semi-infinite integrals of the two-index Bessel-like family.

The integrals over [0, inf) of x**(a-1) J_{mu,nu}(x) and over the real
line of J_{mu,nu}(x**2) do not converge classically: the function carries
an oscillatory component whose envelope grows like exp(1.5 z**(1/3)).
Their closed-form values are the Mellin/Abel-regularized ones, and that
is what this module computes, to ~1e-11:

1. substitute x = t**3 (or x**2 = t**3), which makes the asymptotic
   phase linear in t;
2. integrate [0, T] with high-order Gauss-Legendre cells in fixed
   60-digit decimal arithmetic (the integrand reaches ~1e9 at T = 16
   while the answer is O(1), so binary64 cannot hold the cancellation);
3. replace the tail by the Abel-regularized antiderivative of the
   function's large-argument expansion, extracted from the ODE
   recurrence with the closed-form saddle amplitude
   omega**q / (2 pi sqrt(3)), omega = exp(i pi/3), q = -(1 + mu + nu).

The expansion, the amplitude and the tail are all validated against the
60-digit series in the test suite.
"""

import math
from decimal import Decimal as D, getcontext, localcontext
from functools import lru_cache, wraps

import numpy as np

from .errors import DomainError

__all__ = [
    "humbert2_phase_integral",
    "real_line_squared_integral",
    "power_moment_integral",
    "humbert2_decimal",
    "asym_saddle_value",
    "stokes_amplitude",
    "fit_stokes_amplitude",
]

_PREC = 60
_PI = D("3.14159265358979323846264338327950288419716939937510582097494459")
_TAIL_CUT = D(16)
_CELL_WIDTH = D("0.6")
_GL_ORDER = 40


def _ctx():
    ctx = getcontext()
    if ctx.prec < _PREC:
        ctx.prec = _PREC
    return ctx


def _with_precision(fn):
    """Run a public entry under a scoped 60-digit context, leaving the
    caller's decimal context untouched."""

    @wraps(fn)
    def wrapper(*args, **kwargs):
        with localcontext() as ctx:
            ctx.prec = _PREC
            return fn(*args, **kwargs)

    return wrapper


def _sincos(x):
    """sin and cos of a Decimal by reduction mod 2*pi plus Taylor."""
    _ctx()
    two_pi = 2 * _PI
    k = int(x / two_pi)
    r = x - k * two_pi
    if r > _PI:
        r -= two_pi
    elif r < -_PI:
        r += two_pi
    s = D(0)
    term = r
    n = 1
    while True:
        s += term
        nxt = term * r * r / ((2 * n) * (2 * n + 1))
        if abs(nxt) < D("1e-58"):
            break
        term = -nxt
        n += 1
    c = D(0)
    term = D(1)
    n = 1
    while True:
        c += term
        nxt = term * r * r / ((2 * n - 1) * (2 * n))
        if abs(nxt) < D("1e-58"):
            break
        term = -nxt
        n += 1
    return s, c


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cdiv(a, b):
    d = b[0] * b[0] + b[1] * b[1]
    return ((a[0] * b[0] + a[1] * b[1]) / d, (a[1] * b[0] - a[0] * b[1]) / d)


def _cexp(a):
    m = a[0].exp()
    s, c = _sincos(a[1])
    return (m * c, m * s)


def _rpow(base, expo):
    """base**expo for positive Decimal base, Decimal exponent."""
    return (expo * base.ln()).exp()


_SQRT3 = D(3).sqrt()
_OMEGA = (D("0.5"), _SQRT3 / 2)  # exp(i pi/3)
_P_RATE = (3 * _OMEGA[0], 3 * _OMEGA[1])  # exponent rate 3*omega


def _halfint(x):
    return 2.0 * x == math.floor(2.0 * x)


def _gamma_decimal(x):
    """Gamma for positive integer or half-integer Decimal-compatible x."""
    if x <= 0 or not _halfint(float(x)):
        raise DomainError("decimal gamma implemented for positive half-integers only")
    x = D(str(x))
    if x == int(x):
        v = D(1)
        for i in range(2, int(x)):
            v *= i
        return v
    n = int(x - D("0.5"))
    v = _PI.sqrt()
    for i in range(n):
        v *= D(2 * i + 1) / 2
    return v


@_with_precision
def humbert2_decimal(mu, nu, z):
    """J_{mu,nu}(z) by direct series in 60-digit decimal; mu, nu must be
    nonnegative integers or half-integers (the catalog windows)."""
    _ctx()
    mu_d = D(str(mu))
    nu_d = D(str(nu))
    t = 1 / (_gamma_decimal(mu + 1.0) * _gamma_decimal(nu + 1.0))
    z = D(z) if not isinstance(z, D) else z
    s = D(0)
    k = 0
    while True:
        s += t
        t = t * (-z) / ((k + 1) * (k + 1 + mu_d) * (k + 1 + nu_d))
        k += 1
        if k > 8 and abs(t) < D("1e-55") * (abs(s) + 1):
            return s
        if k > 4000:
            raise DomainError("humbert2_decimal: series failed to converge")


@lru_cache(maxsize=64)
def _asym_coeffs(mu, nu, nmax=48):
    """Correction coefficients a_i of the saddle expansion
    f(t^3) ~ 2 Re[C e^{3 omega t} t^q sum_i a_i t^-i], q = -(1+mu+nu),
    from the third-order recurrence the defining ODE imposes."""
    _ctx()
    mu_d = D(str(mu))
    nu_d = D(str(nu))
    q = -(1 + mu_d + nu_d)

    def B2(m):
        return m + 1 + mu_d + nu_d

    def B1(m):
        return ((m + 1) / 3) * ((2 * m + 1) / 3 + mu_d + nu_d) + (m / 3 + mu_d) * (m / 3 + nu_d)

    def B0(m):
        return (m / 3) * (m / 3 + mu_d) * (m / 3 + nu_d)

    a = [(D(1), D(0))]
    w2 = _cmul(_OMEGA, _OMEGA)
    for i in range(2, nmax + 2):
        t1 = _cmul(_OMEGA, a[i - 2])
        b1 = B1(q - i + 2)
        t1 = (t1[0] * b1, t1[1] * b1)
        if i >= 3:
            b0 = B0(q - i + 3)
            t2 = (a[i - 3][0] * b0, a[i - 3][1] * b0)
        else:
            t2 = (D(0), D(0))
        num = (-(t1[0] + t2[0]), -(t1[1] + t2[1]))
        den = _cmul(w2, (B2(q - i + 1), D(0)))
        a.append(_cdiv(num, den))
    return q, tuple(a[: nmax + 1])


def _sum_to_min(terms):
    """Sum a complex asymptotic term list through its global-minimum
    magnitude entry (inclusive), the optimal truncation."""
    mags = [abs(t[0]) + abs(t[1]) for t in terms]
    imin = mags.index(min(mags))
    re = D(0)
    im = D(0)
    for t in terms[: imin + 1]:
        re += t[0]
        im += t[1]
    return (re, im)


@_with_precision
def stokes_amplitude(mu, nu):
    """Closed-form saddle amplitude C = omega**q / (2 pi sqrt(3))."""
    _ctx()
    q, _ = _asym_coeffs(mu, nu)
    phase = q * _PI / 3
    s, c = _sincos(phase)
    mag = 1 / (2 * _PI * _SQRT3)
    return (mag * c, mag * s)


@_with_precision
def asym_saddle_value(mu, nu, t):
    """2 Re[C e^{3 omega t} t^q P(t)]: the growing-oscillation part of
    J_{mu,nu}(t**3) for large t."""
    _ctx()
    q, acoef = _asym_coeffs(mu, nu)
    C = stokes_amplitude(mu, nu)
    t = D(str(t)) if not isinstance(t, D) else t
    terms = []
    tp = D(1)
    for ai in acoef:
        terms.append((ai[0] / tp, ai[1] / tp))
        tp *= t
    P = _sum_to_min(terms)
    e = _cexp((_P_RATE[0] * t, _P_RATE[1] * t))
    g = _cmul(e, P)
    tq = _rpow(t, q)
    return 2 * (C[0] * g[0] - C[1] * g[1]) * tq


@_with_precision
def fit_stokes_amplitude(mu, nu, t_fit=D(14)):
    """Numerically determine the saddle amplitude by matching the
    decimal series at two quarter-period-separated points; used by the
    test suite to validate the closed form."""
    _ctx()
    q, acoef = _asym_coeffs(mu, nu)
    t1 = D(t_fit)
    t2 = t1 + _PI / (2 * (3 * _SQRT3 / 2))

    def g_of(t):
        terms = []
        tp = D(1)
        for ai in acoef:
            terms.append((ai[0] / tp, ai[1] / tp))
            tp *= t
        P = _sum_to_min(terms)
        e = _cexp((_P_RATE[0] * t, _P_RATE[1] * t))
        g = _cmul(e, P)
        tq = _rpow(t, q)
        return (g[0] * tq, g[1] * tq)

    g1 = g_of(t1)
    g2 = g_of(t2)
    f1 = humbert2_decimal(mu, nu, t1**3)
    f2 = humbert2_decimal(mu, nu, t2**3)
    det = 4 * (g1[0] * (-g2[1]) - (-g1[1]) * g2[0])
    re = (f1 * (-2 * g2[1]) - (-2 * g1[1]) * f2) / det
    im = (2 * g1[0] * f2 - f1 * 2 * g2[0]) / det
    return (re, im)


def _tail_regularized(T, gam, mu, nu):
    """Abel-regularized integral over [T, inf) of t**gam J_{mu,nu}(t**3) dt.

    Each expansion piece C a_i e^{3 omega t} t^{q+gam-i} has the asymptotic
    antiderivative e^{pt} sum_j c_j t^{beta-j} (c_0 = 1/p,
    c_{j+1} = -(beta-j) c_j / p); under Abel regularization only the lower
    boundary survives, so the tail is minus the antiderivative at T.  The
    decaying real saddle is below 1e-17 at the default cut and is dropped.
    """
    _ctx()
    q, acoef = _asym_coeffs(mu, nu)
    C = stokes_amplitude(mu, nu)
    p = _P_RATE
    e_pT = _cexp((p[0] * T, p[1] * T))
    lnT = T.ln()
    saddle_terms = []
    for i, ai in enumerate(acoef):
        beta = q + D(str(gam)) - i
        c = _cdiv((D(1), D(0)), p)
        inner = []
        j = 0
        while j < 120:
            tb = ((beta - j) * lnT).exp()
            inner.append((c[0] * tb, c[1] * tb))
            c = _cdiv((-(beta - j) * c[0], -(beta - j) * c[1]), p)
            j += 1
            if j > 5 and abs(inner[-1][0]) + abs(inner[-1][1]) < D("1e-55"):
                break
        Ai = _sum_to_min(inner)
        saddle_terms.append(_cmul(ai, _cmul(e_pT, Ai)))
    tot = _sum_to_min(saddle_terms)
    v = _cmul(C, tot)
    return -2 * v[0]


@lru_cache(maxsize=4)
def _gl_nodes_decimal(order):
    """Gauss-Legendre nodes/weights Newton-refined in decimal; binary64
    nodes would cost ~1e-6 absolute on cells where the integrand is ~1e9."""
    _ctx()

    def legendre_p_dp(n, x):
        p0, p1 = D(1), x
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1)
        return p1, dp

    xs, ws = [], []
    seed, _ = np.polynomial.legendre.leggauss(order)
    for xv in seed:
        x = D(repr(float(xv)))
        for _ in range(3):
            pv, dp = legendre_p_dp(order, x)
            x = x - pv / dp
        pv, dp = legendre_p_dp(order, x)
        xs.append(x)
        ws.append(2 / ((1 - x * x) * dp * dp))
    return tuple(xs), tuple(ws)


def _finite_part(T, gam, mu, nu):
    """integral over [0, T] of t**gam J_{mu,nu}(t**3) dt in decimal.

    The first cell is mapped through t = h u**4 to absorb the t**gam
    endpoint kink (gam may be as low as -1/4 in the catalog windows).
    """
    _ctx()
    gam_d = D(str(gam))
    xs, ws = _gl_nodes_decimal(_GL_ORDER)
    ncell = int(T / _CELL_WIDTH) + 1
    h = T / ncell
    total = D(0)
    for xi, wi in zip(xs, ws):
        u = (1 + xi) / 2
        t = h * u**4
        if t == 0:
            continue
        gp = (gam_d * t.ln()).exp()
        total += wi * D("0.5") * 4 * h * u**3 * gp * humbert2_decimal(mu, nu, t**3)
    for k in range(1, ncell):
        a = k * h
        mid = a + h / 2
        hl = h / 2
        for xi, wi in zip(xs, ws):
            t = mid + hl * xi
            gp = (gam_d * t.ln()).exp()
            total += wi * hl * gp * humbert2_decimal(mu, nu, t**3)
    return total


@_with_precision
def humbert2_phase_integral(gam, mu, nu):
    """Regularized integral over [0, inf) of t**gam J_{mu,nu}(t**3) dt."""
    if not gam > -1.0:
        raise DomainError("humbert2_phase_integral: requires power > -1")
    if mu < 0 or nu < 0 or not (_halfint(mu) and _halfint(nu)):
        raise DomainError(
            "humbert2_phase_integral: indices restricted to nonnegative half-integers"
        )
    _ctx()
    T = _TAIL_CUT
    fp = _finite_part(T, gam, mu, nu)
    tl = _tail_regularized(T, gam, mu, nu)
    return float(fp + tl)


def real_line_squared_integral(mu, nu):
    """Regularized integral over the real line of J_{mu,nu}(x**2) dx,
    evaluated as 3 * integral t**(1/2) J(t**3) dt (x = t**(3/2))."""
    return 3.0 * humbert2_phase_integral(0.5, mu, nu)


def power_moment_integral(alpha, mu, nu):
    """Regularized integral over [0, inf) of x**(alpha-1) J_{mu,nu}(x) dx,
    evaluated as 3 * integral t**(3 alpha - 1) J(t**3) dt (x = t**3)."""
    if not 0.0 < alpha < 1.0:
        raise DomainError("power_moment_integral: alpha restricted to (0, 1)")
    return 3.0 * humbert2_phase_integral(3.0 * alpha - 1.0, mu, nu)
