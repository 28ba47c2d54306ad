"""Direct numerical evaluators for the function families.

Every family follows the same three-path scheme:

* plain power series up to `crossover_x` (alternating series lose about
  x/ln10 digits to cancellation, so plain binary64 is only trusted there),
* the same series accumulated in double-double up to `extended_x`,
* large-argument asymptotics beyond that (Hankel phase/amplitude pairs
  for the cylindrical kinds, plus the algebraic correction series for the
  Struve and Anger/Weber auxiliaries).

Series are certified by a tail bound: a result counts as converged only
when the first neglected term is below rel_tol * |partial sum| twice in
a row, which guards against even/odd-term flatlines in alternating sums.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, DomainError
from .gammakit import SQRT_PI, gamma, rgamma
from .ddouble import _SPLITTER, two_prod

__all__ = [
    "EvalPolicy",
    "SeriesResult",
    "DEFAULT_POLICY",
    "sph_j",
    "cyl_j",
    "mod_i0",
    "struve_h",
    "humbert2",
    "humbert3",
    "hyp1f2",
    "delta_fn",
    "s1",
    "s2",
    "anger",
    "weber",
    "sph_j_deriv",
    "rayleigh_jn",
    "sinc_sqrt",
    "bessel_j_asym",
    "bessel_y_asym",
    "hankel_pq",
    "hankel_coeff_arrays",
    "struve_algebraic",
    "struve_algebraic_tail",
    "watson_a_coeffs",
    "anger_a_value",
]


@dataclass(frozen=True)
class EvalPolicy:
    """Tolerances, term limits and path crossovers shared by all series."""

    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    max_terms: int = 500
    crossover_x: float = 25.0
    extended_x: float = 60.0

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError("EvalPolicy: rel_tol must lie in (0, 1)")
        if not self.crossover_x < self.extended_x:
            raise DomainError("EvalPolicy: crossover_x must be below extended_x")


DEFAULT_POLICY = EvalPolicy()

PATH_SERIES = "series"
PATH_EXTENDED = "extended-precision-series"
PATH_ASYMPTOTIC = "asymptotic"
PATH_CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class SeriesResult:
    """Value plus convergence metadata for one evaluation."""

    value: float
    terms_used: int
    tail_estimate: float
    path: str

    def __float__(self):
        return self.value


def _closed(value):
    return SeriesResult(value=value, terms_used=0, tail_estimate=0.0, path=PATH_CLOSED_FORM)


def _is_nonpositive_int(x):
    return x <= 0.0 and x == math.floor(x)


def _kill_start(gamma_args):
    """First surviving index of a series whose term k carries
    rgamma(k + g) factors: terms vanish while any integer g makes
    k + g a nonpositive integer."""
    k0 = 0
    for g in gamma_args:
        if g == math.floor(g) and g <= 0.0:
            k0 = max(k0, int(1.0 - g))
    return k0


def _sum_ratio_series(t0, z, num_offsets, den_offsets, policy, k0=0):
    """Sum t0 * prod ratios, term_{k+1} = term_k * z * prod(k+num)/prod(k+den).

    Returns (value, terms_used, tail_estimate); certified when the first
    neglected term is below rel_tol*|sum| twice in a row.
    """
    total = 0.0
    comp = 0.0
    term = t0
    small = 0
    k = k0
    for _ in range(policy.max_terms):
        y = term - comp
        s = total + y
        comp = (s - total) - y
        total = s
        num = z
        for a in num_offsets:
            num *= k + a
        den = 1.0
        for a in den_offsets:
            den *= k + a
        term = term * num / den
        k += 1
        bound = max(policy.rel_tol * abs(total), policy.abs_tol)
        if abs(term) <= bound:
            small += 1
            if small >= 2:
                return total, k - k0, abs(term)
        else:
            small = 0
    raise ConvergenceError(
        f"series did not certify within {policy.max_terms} terms (last={term!r})"
    )


def _sum_ratio_series_dd(t0, z_hi, z_lo, num_offsets, den_offsets, policy, k0=0):
    """Double-double variant of `_sum_ratio_series`.

    The term recurrence runs entirely in double-double so cancellation in
    the alternating sum is resolved to ~1e-32 * (largest term).  The
    error-free transformations are inlined: this loop dominates every
    quadrature over the extended-precision window.
    """
    th, tl = float(t0), 0.0
    sh, sl = 0.0, 0.0
    small = 0
    k = k0
    rel_tol = policy.rel_tol
    abs_tol = policy.abs_tol
    for _ in range(policy.max_terms):
        # sum += term (two_sum + low parts + renormalize)
        s = sh + th
        bb = s - sh
        e = (sh - (s - bb)) + (th - bb) + sl + tl
        sh = s + e
        sl = e - (sh - s)
        # numerator factor: z * prod(k + a)
        nh, nl = z_hi, z_lo
        for a in num_offsets:
            fs = k + a
            fe = a - (fs - k)  # two_sum(k, a), k exact
            p = nh * fs
            t1 = _SPLITTER * nh
            xh = t1 - (t1 - nh)
            xl = nh - xh
            t2 = _SPLITTER * fs
            yh = t2 - (t2 - fs)
            yl = fs - yh
            pe = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl + nh * fe + nl * fs
            nh = p + pe
            nl = pe - (nh - p)
        # term *= numerator
        p = th * nh
        t1 = _SPLITTER * th
        xh = t1 - (t1 - th)
        xl = th - xh
        t2 = _SPLITTER * nh
        yh = t2 - (t2 - nh)
        yl = nh - yh
        pe = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl + th * nl + tl * nh
        th = p + pe
        tl = pe - (th - p)
        # term /= (k + a) for each denominator offset
        for a in den_offsets:
            fs = k + a
            fe = a - (fs - k)
            q1 = th / fs
            p = q1 * fs
            t1 = _SPLITTER * q1
            xh = t1 - (t1 - q1)
            xl = q1 - xh
            t2 = _SPLITTER * fs
            yh = t2 - (t2 - fs)
            yl = fs - yh
            pe = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl + q1 * fe
            s = th - p
            q2 = (s + (th - (s + p)) + tl - pe) / fs
            th = q1 + q2
            tl = q2 - (th - q1)
        k += 1
        bound = rel_tol * abs(sh)
        if bound < abs_tol:
            bound = abs_tol
        if abs(th) <= bound:
            small += 1
            if small >= 2:
                return sh + sl, k - k0, abs(th)
        else:
            small = 0
    raise ConvergenceError(
        f"extended-precision series did not certify within {policy.max_terms} terms"
    )


def _half_x_squared_dd(x):
    """(x/2)**2 as an exact double-double."""
    h = x / 2.0
    return two_prod(h, h)


# ---------------------------------------------------------------------------
# Hankel-type large-argument machinery for the cylindrical kinds.


def hankel_coeff_arrays(nu, kmax=30):
    """Coefficient arrays (p, q) of the phase/amplitude expansions.

    P(x) = sum_m p[m] x**-m (even m only), Q(x) = sum_m q[m] x**-m (odd m
    only); both arrays are indexed by m with zeros interleaved, which is
    the convenient layout for forming products of two expansions.
    """
    mu4 = 4.0 * nu * nu
    c = 1.0
    cs = [1.0]
    for k in range(1, kmax + 1):
        c *= (mu4 - (2 * k - 1) ** 2) / (8.0 * k)
        cs.append(c)
    p = [0.0] * (kmax + 1)
    q = [0.0] * (kmax + 1)
    sign = 1.0
    for j in range(0, kmax + 1, 2):
        p[j] = sign * cs[j]
        if j + 1 <= kmax:
            q[j + 1] = sign * cs[j + 1]
        sign = -sign
    return p, q


def hankel_pq(nu, x, policy=None):
    """Evaluate the amplitude sums P(nu,x), Q(nu,x) at the smallest-term
    truncation.

    Returns (P, Q, floor) where `floor` is the magnitude of the first
    neglected term: the expansion's certified absolute accuracy.  It is
    exactly zero for half-integer orders (the expansion terminates) and
    grows useless once the order is large compared to sqrt(x)."""
    policy = policy or DEFAULT_POLICY
    mu4 = 4.0 * nu * nu
    P = 0.0
    Q = 0.0
    term = 1.0
    prev = math.inf
    floor = math.inf
    for k in range(0, 60):
        if k > 0:
            term *= (mu4 - (2 * k - 1) ** 2) / (8.0 * k * x)
        mag = abs(term)
        if mag == 0.0:
            floor = 0.0
            break
        if mag > prev and k > 2:
            floor = prev
            break
        prev = mag
        floor = mag
        j, r = divmod(k, 2)
        sign = -1.0 if j % 2 else 1.0
        if r == 0:
            P += sign * term
        else:
            Q += sign * term
    return P, Q, floor


def _chi(nu, x):
    return x - (0.5 * nu + 0.25) * math.pi


def bessel_j_asym(nu, x, policy=None):
    """Large-argument first-kind cylindrical value via the phase/amplitude pair."""
    P, Q, _ = hankel_pq(nu, x, policy)
    c = _chi(nu, x)
    return math.sqrt(2.0 / (math.pi * x)) * (P * math.cos(c) - Q * math.sin(c))


def bessel_y_asym(nu, x, policy=None):
    """Large-argument second-kind cylindrical value via the phase/amplitude pair."""
    P, Q, _ = hankel_pq(nu, x, policy)
    c = _chi(nu, x)
    return math.sqrt(2.0 / (math.pi * x)) * (P * math.sin(c) + Q * math.cos(c))


# absolute accuracy demanded of a certified asymptotic truncation, and the
# largest cancellation exponent the double-double series can absorb while
# staying near 1e-9 absolute
_ASYM_FLOOR = 1e-9
_DD_LOSS_LIMIT = 62.0


def _series_loss(nu, x):
    """Natural log of the ascending series' largest-term-to-envelope ratio:
    sqrt(x^2 + nu^2) - nu asinh(nu/x) - ln(pi x).  This is what multiplies
    the working precision's ulp to give the cancellation floor; it decays
    to zero once the order dominates the argument (forward-peaked sums)."""
    nu = abs(nu)
    L = math.sqrt(x * x + nu * nu)
    if nu > 0.0:
        L -= nu * math.asinh(nu / x)
    return max(L - math.log(math.pi * max(x, 1.0)), 0.0)


# ---------------------------------------------------------------------------
# Cylindrical Bessel of the first kind.


def cyl_j(nu, x, policy=None):
    """J_nu(x) for nu >= -50, x >= 0."""
    policy = policy or DEFAULT_POLICY
    nu = float(nu)
    x = float(x)
    if nu < -50.0:
        raise DomainError("cyl_j: order below -50 not supported")
    if x < 0.0:
        raise DomainError("cyl_j: requires x >= 0")
    if nu < 0.0 and nu == math.floor(nu):
        inner = cyl_j(-nu, x, policy)
        sign = 1.0 if int(-nu) % 2 == 0 else -1.0
        return SeriesResult(sign * inner.value, inner.terms_used, inner.tail_estimate, inner.path)
    if x == 0.0:
        if nu == 0.0:
            return _closed(1.0)
        if nu > 0.0:
            return _closed(0.0)
        raise DomainError("cyl_j: x=0 is singular for negative order")
    if x <= policy.crossover_x:
        t0 = (x / 2.0) ** nu * rgamma(nu + 1.0)
        v, n, tail = _sum_ratio_series(
            t0, -((x / 2.0) ** 2), (), (1.0, nu + 1.0), policy
        )
        return SeriesResult(v, n, tail, PATH_SERIES)

    def dd_path():
        t0 = (x / 2.0) ** nu * rgamma(nu + 1.0)
        zh, zl = _half_x_squared_dd(x)
        v, n, tail = _sum_ratio_series_dd(t0, -zh, -zl, (), (1.0, nu + 1.0), policy)
        return SeriesResult(v, n, tail, PATH_EXTENDED)

    if x <= policy.extended_x:
        return dd_path()
    P, Q, floor = hankel_pq(nu, x, policy)
    if floor <= _ASYM_FLOOR:
        c = _chi(nu, x)
        v = math.sqrt(2.0 / (math.pi * x)) * (P * math.cos(c) - Q * math.sin(c))
        return SeriesResult(v, 0, floor + abs(v) * 1e-15, PATH_ASYMPTOTIC)
    loss = _series_loss(nu, x)
    if loss <= _DD_LOSS_LIMIT:
        res = dd_path()
        # report the cancellation floor honestly out here
        floor_dd = 1e-32 * math.exp(loss)
        return SeriesResult(res.value, res.terms_used, max(res.tail_estimate, floor_dd), res.path)
    raise ConvergenceError(
        f"cyl_j: no certified path for order {nu} at x={x} "
        "(asymptotics diverge, series cancellation exceeds the extended budget)"
    )


def mod_i0(t, policy=None):
    """Modified cylindrical function of order 0; even entire series."""
    policy = policy or DEFAULT_POLICY
    t = float(t)
    if abs(t) > 300.0:
        raise OverflowError("mod_i0: |t| > 300 exceeds the supported range")
    v, _, _ = _sum_ratio_series(1.0, (t / 2.0) ** 2, (), (1.0, 1.0), policy)
    return v


# ---------------------------------------------------------------------------
# Struve functions.


def _struve_series_start(alpha, x):
    """(k0, t0) of the Struve power series with term-killing applied."""
    g = alpha + 1.5
    k0 = _kill_start((g,))
    sign = -1.0 if k0 % 2 else 1.0
    t0 = sign * (x / 2.0) ** (2 * k0 + alpha + 1.0) * rgamma(k0 + 1.5) * rgamma(k0 + g)
    return k0, t0


def struve_h(alpha, x, policy=None):
    """Struve function H_alpha(x) for alpha >= -5, x >= 0 (x > 0 if alpha < -1)."""
    policy = policy or DEFAULT_POLICY
    alpha = float(alpha)
    x = float(x)
    if alpha < -5.0:
        raise DomainError("struve_h: order below -5 not supported")
    if x < 0.0:
        raise DomainError("struve_h: requires x >= 0")
    if x == 0.0:
        if alpha > -1.0:
            return _closed(0.0)
        if alpha == -1.0:
            return _closed(2.0 / math.pi)
        raise DomainError("struve_h: x=0 is singular for alpha < -1")
    if x <= policy.crossover_x:
        k0, t0 = _struve_series_start(alpha, x)
        v, n, tail = _sum_ratio_series(
            t0, -((x / 2.0) ** 2), (), (1.5, alpha + 1.5), policy, k0=k0
        )
        return SeriesResult(v, n, tail, PATH_SERIES)

    def dd_path():
        k0, t0 = _struve_series_start(alpha, x)
        zh, zl = _half_x_squared_dd(x)
        v, n, tail = _sum_ratio_series_dd(
            t0, -zh, -zl, (), (1.5, alpha + 1.5), policy, k0=k0
        )
        return SeriesResult(v, n, tail, PATH_EXTENDED)

    if x <= policy.extended_x:
        return dd_path()
    P, Q, floor = hankel_pq(alpha, x, policy)
    alg, alg_tail = struve_algebraic(alpha, x, policy)
    if floor + alg_tail <= _ASYM_FLOOR * max(1.0, abs(alg)):
        c = _chi(alpha, x)
        y = math.sqrt(2.0 / (math.pi * x)) * (P * math.sin(c) + Q * math.cos(c))
        return SeriesResult(y + alg, 0, floor + alg_tail + 1e-16, PATH_ASYMPTOTIC)
    loss = _series_loss(alpha, x)
    if loss <= _DD_LOSS_LIMIT:
        res = dd_path()
        floor_dd = 1e-32 * math.exp(loss)
        return SeriesResult(res.value, res.terms_used, max(res.tail_estimate, floor_dd), res.path)
    raise ConvergenceError(
        f"struve_h: no certified path for order {alpha} at x={x}"
    )


def struve_algebraic(alpha, x, policy=None):
    """Algebraic part of the large-argument Struve expansion.

    H_alpha(x) - Y_alpha(x) ~ (1/pi) sum_k Gamma(k+1/2) (x/2)**(alpha-2k-1)
    / Gamma(alpha+1/2-k); returns (value, magnitude of first neglected term).
    """
    policy = policy or DEFAULT_POLICY
    term = SQRT_PI * rgamma(alpha + 0.5) * (x / 2.0) ** (alpha - 1.0) / math.pi
    total = 0.0
    prev = math.inf
    for k in range(0, 60):
        mag = abs(term)
        if mag > prev and k > 1:
            return total, mag
        if mag == 0.0:
            return total, 0.0
        total += term
        prev = mag
        term *= (k + 0.5) * (alpha - 0.5 - k) * (2.0 / x) ** 2
    return total, abs(term)


def struve_algebraic_tail(alpha, T):
    """Exact integral over [T, inf) of the algebraic Struve part; needs alpha < 0
    so every power x**(alpha-2k-1) is integrable at infinity."""
    if alpha >= 0.0:
        raise DomainError("struve_algebraic_tail: requires alpha < 0")
    coeff = SQRT_PI * rgamma(alpha + 0.5) / math.pi
    total = 0.0
    prev = math.inf
    for k in range(0, 60):
        # integral of (x/2)^(alpha-2k-1): 2*(T/2)^(alpha-2k)/(2k-alpha)
        term = coeff * 2.0 * (T / 2.0) ** (alpha - 2 * k) / (2 * k - alpha)
        mag = abs(term)
        if mag > prev and k > 1:
            break
        total += term
        prev = mag
        coeff *= (k + 0.5) * (alpha - 0.5 - k)
    return total


# ---------------------------------------------------------------------------
# Humbert-type multi-index families.


def _humbert_sum(z, gamma_args, policy, use_dd=False):
    k0 = _kill_start(gamma_args)
    t0 = (-z) ** k0 if k0 else 1.0
    for g in gamma_args:
        t0 *= rgamma(k0 + g)
    if use_dd:
        v, n, tail = _sum_ratio_series_dd(t0, -z, 0.0, (), gamma_args, policy, k0=k0)
    else:
        v, n, tail = _sum_ratio_series(t0, -z, (), gamma_args, policy, k0=k0)
    return v, n, tail


def humbert2(mu, nu, z, policy=None):
    """Two-index Bessel-like series sum_k (-z)^k/(k! Gamma(k+mu+1) Gamma(k+nu+1)).

    Negative integer indices start the sum past the reciprocal-gamma zeros.
    """
    policy = policy or DEFAULT_POLICY
    v, n, tail = _humbert_sum(float(z), (1.0, mu + 1.0, nu + 1.0), policy)
    return SeriesResult(v, n, tail, PATH_SERIES)


def humbert3(mu, nu, rho, z, policy=None):
    """Three-index Bessel-like series with four reciprocal-gamma factors per term."""
    policy = policy or DEFAULT_POLICY
    v, n, tail = _humbert_sum(float(z), (1.0, mu + 1.0, nu + 1.0, rho + 1.0), policy)
    return SeriesResult(v, n, tail, PATH_SERIES)


def hyp1f2(gamma_p, a, b, z, policy=None):
    """Generalized hypergeometric 1F2(gamma_p; a, b; z) by its defining series."""
    policy = policy or DEFAULT_POLICY
    terminates = _is_nonpositive_int(gamma_p)
    if not terminates:
        for name, c in (("a", a), ("b", b)):
            if _is_nonpositive_int(c):
                raise DomainError(f"hyp1f2: denominator parameter {name}={c} is a pole")
    if terminates:
        kmax = int(-gamma_p)
        total = 0.0
        term = 1.0
        for k in range(kmax + 1):
            total += term
            term *= (gamma_p + k) * z / ((a + k) * (b + k) * (k + 1.0))
        return SeriesResult(total, kmax + 1, 0.0, PATH_SERIES)
    v, n, tail = _sum_ratio_series(1.0, z, (gamma_p,), (1.0, a, b), policy)
    return SeriesResult(v, n, tail, PATH_SERIES)


def delta_fn(alpha, beta, gamma_p, x, policy=None):
    """Struve-like auxiliary Delta_{alpha,beta,gamma}(x).

    Evaluated through its hypergeometric closed form
    Gamma(g)/(Gamma(1+a)Gamma(1+b)) 1F2(g; 1+a, 1+b; -x^2/4), summed in the
    combined form that stays finite at negative integer indices.
    """
    policy = policy or DEFAULT_POLICY
    if not gamma_p > 0:
        raise DomainError("delta_fn: exponent parameter must be positive")
    w = (x / 2.0) ** 2
    ga = (1.0, alpha + 1.0, beta + 1.0)
    k0 = _kill_start(ga)
    t0 = (-w) ** k0 if k0 else 1.0
    t0 *= gamma(gamma_p + k0)
    for g in ga:
        t0 *= rgamma(k0 + g)
    v, _, _ = _sum_ratio_series(t0, -w, (gamma_p,), ga, policy, k0=k0)
    return v


# ---------------------------------------------------------------------------
# Anger/Weber auxiliaries S1, S2 and their combinations.


def _watson_g_series(nu, K):
    """Power-series coefficients of exp(-nu asinh u)/sqrt(1+u^2) up to u^K."""
    # asinh u = sum_m (-1)^m (2m)! / (4^m (m!)^2 (2m+1)) u^(2m+1)
    asinh = [0.0] * (K + 1)
    c = 1.0
    for m in range(0, (K + 1) // 2):
        asinh_idx = 2 * m + 1
        if asinh_idx > K:
            break
        asinh[asinh_idx] = c / (2 * m + 1)
        c *= -(2.0 * m + 1.0) / (2.0 * m + 2.0)
    a = [-nu * v for v in asinh]
    # exp of a power series with zero constant term
    e = [0.0] * (K + 1)
    e[0] = 1.0
    for n in range(1, K + 1):
        s = 0.0
        for j in range(1, n + 1):
            s += j * a[j] * e[n - j]
        e[n] = s / n
    # (1+u^2)^(-1/2) = sum_m (-1)^m (2m)!/(4^m (m!)^2) u^(2m)
    inv = [0.0] * (K + 1)
    c = 1.0
    for m in range(0, K // 2 + 1):
        if 2 * m > K:
            break
        inv[2 * m] = c
        c *= -(2.0 * m + 1.0) / (2.0 * m + 2.0)
    out = [0.0] * (K + 1)
    for n in range(K + 1):
        s = 0.0
        for j in range(n + 1):
            s += e[j] * inv[n - j]
        out[n] = s
    return out


@lru_cache(maxsize=256)
def watson_a_coeffs(nu, K=26):
    """Watson-lemma coefficients of the algebraic Anger/Weber integral:
    (1/pi) * integral_0^inf exp(-nu t - x sinh t) dt
    ~ (1/pi) * sum_k coeffs[k] * k! / x^(k+1)."""
    return tuple(_watson_g_series(float(nu), K))


def anger_a_value(nu, x, policy=None):
    """Algebraic Anger/Weber integral (1/pi) int_0^inf e^{-nu t - x sinh t} dt
    via its large-x expansion, truncated at the smallest term."""
    cs = watson_a_coeffs(nu)
    total = 0.0
    term = 1.0 / x
    prev = math.inf
    for k, c in enumerate(cs):
        t = c * term
        mag = abs(t)
        if mag > prev and k > 2:
            break
        total += t
        prev = mag if c != 0.0 else prev
        term *= (k + 1.0) / x
    return total / math.pi


def _s_series(kind, nu, x, policy, use_dd):
    """Series path shared by S1 (kind=1) and S2 (kind=2)."""
    h = 0.0 if kind == 1 else 0.5
    ga = (1.0 + h + nu / 2.0, 1.0 + h - nu / 2.0)
    k0 = _kill_start(ga)
    sign = -1.0 if k0 % 2 else 1.0
    t0 = sign * (x / 2.0) ** (2 * k0 + 2 * h) * rgamma(k0 + ga[0]) * rgamma(k0 + ga[1])
    if use_dd:
        zh, zl = _half_x_squared_dd(x)
        return _sum_ratio_series_dd(t0, -zh, -zl, (), ga, policy, k0=k0)
    return _sum_ratio_series(t0, -((x / 2.0) ** 2), (), ga, policy, k0=k0)


def _s_asym(nu, x, policy):
    """(S1, S2) from the large-argument decomposition:
    S1 = c*J_nu - s*Y_nu + s*(A_nu - A_{-nu}),
    S2 = s*J_nu + c*Y_nu + c*(A_nu + A_{-nu}),
    with c = cos(nu pi/2), s = sin(nu pi/2)."""
    c = math.cos(0.5 * nu * math.pi)
    s = math.sin(0.5 * nu * math.pi)
    J = bessel_j_asym(nu, x, policy)
    Y = bessel_y_asym(nu, x, policy)
    ap = anger_a_value(nu, x, policy)
    am = anger_a_value(-nu, x, policy)
    return c * J - s * Y + s * (ap - am), s * J + c * Y + c * (ap + am)


def _s_eval(kind, nu, x, policy):
    nu = float(nu)
    x = float(x)
    if abs(nu) > 20.0:
        raise DomainError("S-series: |nu| > 20 not supported")
    if x < 0.0:
        raise DomainError("S-series: requires x >= 0")
    if x == 0.0:
        if kind == 2:
            return _closed(0.0)
        return _closed(rgamma(1.0 + nu / 2.0) * rgamma(1.0 - nu / 2.0))
    if x <= policy.crossover_x:
        v, n, tail = _s_series(kind, nu, x, policy, use_dd=False)
        return SeriesResult(v, n, tail, PATH_SERIES)
    if x <= policy.extended_x:
        v, n, tail = _s_series(kind, nu, x, policy, use_dd=True)
        return SeriesResult(v, n, tail, PATH_EXTENDED)
    _, _, floor = hankel_pq(nu, x, policy)
    if floor <= _ASYM_FLOOR:
        v1, v2 = _s_asym(nu, x, policy)
        v = v1 if kind == 1 else v2
        return SeriesResult(v, 0, floor + abs(v) * 1e-12, PATH_ASYMPTOTIC)
    # the auxiliary series cancels like exp(x) independent of the order,
    # so the extended budget only stretches a little past the switchover
    if x <= policy.extended_x + 10.0:
        v, n, tail = _s_series(kind, nu, x, policy, use_dd=True)
        return SeriesResult(v, n, tail, PATH_EXTENDED)
    raise ConvergenceError(
        f"S-series: no certified path for order {nu} at x={x}"
    )


def s1(nu, x, policy=None):
    """Even Anger/Weber auxiliary series S1(nu, x)."""
    return _s_eval(1, nu, x, policy or DEFAULT_POLICY)


def s2(nu, x, policy=None):
    """Odd Anger/Weber auxiliary series S2(nu, x)."""
    return _s_eval(2, nu, x, policy or DEFAULT_POLICY)


def anger(nu, x, policy=None):
    """Anger function: cos(nu pi/2) S1 + sin(nu pi/2) S2.

    The matrix angle is the half-pi multiple of the order; that choice is
    the one consistent with the auxiliary series' half-line integrals and
    with the integer-order collapse onto the first cylindrical kind."""
    policy = policy or DEFAULT_POLICY
    c = math.cos(0.5 * nu * math.pi)
    s = math.sin(0.5 * nu * math.pi)
    return c * s1(nu, x, policy).value + s * s2(nu, x, policy).value


def weber(nu, x, policy=None):
    """Weber function: sin(nu pi/2) S1 - cos(nu pi/2) S2."""
    policy = policy or DEFAULT_POLICY
    c = math.cos(0.5 * nu * math.pi)
    s = math.sin(0.5 * nu * math.pi)
    return s * s1(nu, x, policy).value - c * s2(nu, x, policy).value


# ---------------------------------------------------------------------------
# Spherical Bessel functions.


def sph_j(n, x, policy=None):
    """Spherical Bessel j_n(x) for |n| <= 100.

    Positive orders ride the cylindrical evaluator at order n+1/2 (where
    the asymptotic pair terminates exactly); negative orders use the
    downward trigonometric recurrence, which is stable in that direction.
    Negative x is served by parity, j_n(-x) = (-1)^n j_n(x).
    """
    policy = policy or DEFAULT_POLICY
    if n != int(n):
        raise DomainError("sph_j: order must be an integer")
    n = int(n)
    if abs(n) > 100:
        raise DomainError("sph_j: |n| > 100 not supported")
    x = float(x)
    if x < 0.0:
        inner = sph_j(n, -x, policy)
        sign = 1.0 if n % 2 == 0 else -1.0
        return SeriesResult(sign * inner.value, inner.terms_used, inner.tail_estimate, inner.path)
    if x == 0.0:
        if n == 0:
            return _closed(1.0)
        if n > 0:
            return _closed(0.0)
        raise DomainError("sph_j: x=0 is singular for negative order")
    if n >= 0:
        if x > policy.extended_x and x > n + 1.0:
            # oscillatory regime: the upward trigonometric recurrence is
            # stable and exact up to rounding, and beats both the extended
            # series (cancellation floor) and the phase/amplitude pair
            # (which needs x well above n^2/2)
            below = math.sin(x) / x  # j_0
            here = below / x - math.cos(x) / x  # j_1
            if n == 0:
                return _closed(below)
            for m in range(1, n):
                below, here = here, (2 * m + 1) / x * here - below
            return _closed(here)
        res = cyl_j(n + 0.5, x, policy)
        scale = math.sqrt(math.pi / (2.0 * x))
        return SeriesResult(scale * res.value, res.terms_used, scale * res.tail_estimate, res.path)
    # downward recurrence from j_0 = sin x / x and j_{-1} = cos x / x;
    # stable towards negative orders, where the family grows
    above = math.sin(x) / x  # j_{m+1}
    here = math.cos(x) / x  # j_m
    m = -1
    while m > n:
        above, here = here, (2 * m + 1) / x * here - above
        m -= 1
    return _closed(here)


def _rayleigh_tables(n):
    """Coefficient arrays (S, C) over u = 1/x with
    (u d/dx applied n times to sin x / x) = sin x * sum S_i u^i + cos x * sum C_i u^i."""
    S = [0.0, 1.0]
    C = [0.0]
    for _ in range(n):
        nS = [0.0] * (len(S) + 2)
        nC = [0.0] * (len(S) + 2)
        for i, c in enumerate(S):
            if c:
                nS[i + 2] += -i * c
                nC[i + 1] += c
        for i, c in enumerate(C):
            if c:
                nC[i + 2] += -i * c
                nS[i + 1] -= c
        S, C = nS, nC
    return S, C


@lru_cache(maxsize=64)
def _rayleigh_tables_cached(n):
    S, C = _rayleigh_tables(n)
    return tuple(S), tuple(C)


def rayleigh_jn(n, x):
    """j_n(x) through the symbolically pre-applied derivative operator:
    j_n = (-x)^n (x^{-1} d/dx)^n (sin x / x).

    Exact trigonometric closed form; serves as the independent oracle for
    the series evaluator."""
    if n != int(n) or n < 0:
        raise DomainError("rayleigh_jn: order must be a nonnegative integer")
    n = int(n)
    if n > 30:
        raise DomainError("rayleigh_jn: order above 30 not supported")
    x = float(x)
    if x <= 0.0:
        raise DomainError("rayleigh_jn: requires x > 0")
    S, C = _rayleigh_tables_cached(n)
    u = 1.0 / x
    spart = 0.0
    for c in reversed(S):
        spart = spart * u + c
    cpart = 0.0
    for c in reversed(C):
        cpart = cpart * u + c
    sign = 1.0 if n % 2 == 0 else -1.0
    # multiply by (-x)^n = (-1)^n u^{-n}
    return sign * u ** (-n) * (spart * math.sin(x) + cpart * math.cos(x))


def sph_j_deriv(n, x, policy=None):
    """n-th derivative of j_0 via the closed finite sum
    n! sum_k (-1)^(n+k) (2x)^(-k) / (k!(n-2k)!) j_{n-k}(x)."""
    policy = policy or DEFAULT_POLICY
    if n != int(n) or n < 0:
        raise DomainError("sph_j_deriv: order must be a nonnegative integer")
    n = int(n)
    if n > 30:
        raise DomainError("sph_j_deriv: order above 30 not supported")
    x = float(x)
    if x <= 0.0:
        raise DomainError("sph_j_deriv: requires x > 0")
    from .gammakit import hermite2_coeffs

    table = hermite2_coeffs(n).coefficients
    total = 0.0
    for k, c in enumerate(table):
        sign = -1.0 if (n + k) % 2 else 1.0
        total += sign * c * (2.0 * x) ** (-k) * sph_j(n - k, x, policy).value
    return total


def sinc_sqrt(u):
    """sin(sqrt(u))/sqrt(u) continued evenly through u <= 0
    (sinh branch for negative arguments, 1 at zero)."""
    if abs(u) < 1e-6:
        # series in u; three terms reach ~1e-40 here
        return 1.0 - u / 6.0 + u * u / 120.0
    if u > 0.0:
        r = math.sqrt(u)
        return math.sin(r) / r
    r = math.sqrt(-u)
    return math.sinh(r) / r
