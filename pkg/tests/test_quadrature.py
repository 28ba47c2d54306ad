import math

import pytest

from sphstruve.errors import DomainError
from sphstruve.gammakit import gamma
from sphstruve.quadrature import (
    QuadraturePlan,
    finite_plan,
    gauss_laguerre_nodes,
    integrate_finite,
    integrate_laguerre,
    integrate_oscillatory,
    integrate_real_line,
    levin_u,
    oscillatory_plan,
    real_line_plan,
)


class TestPlanValidation:
    def test_finite_requires_order(self):
        with pytest.raises(DomainError):
            QuadraturePlan(("finite", 2.0, 1.0), ("adaptive", 100))

    def test_laguerre_weight_exponent(self):
        with pytest.raises(DomainError):
            QuadraturePlan(("semi_infinite", 0.0), ("laguerre", -1.0, 16))

    def test_oscillatory_period(self):
        with pytest.raises(DomainError):
            QuadraturePlan(("semi_infinite", 0.0), ("oscillatory", 0.0, 0.0, 60))

    def test_unknown_kinds(self):
        with pytest.raises(DomainError):
            QuadraturePlan(("circle",), ("adaptive", 10))
        with pytest.raises(DomainError):
            QuadraturePlan(("real_line",), ("romberg",))


class TestFinite:
    def test_monomial(self):
        r = integrate_finite(lambda x: x * x, 0.0, 1.0)
        assert r.value == pytest.approx(1.0 / 3.0, abs=1e-14)
        assert r.status == "converged"

    def test_sine(self):
        r = integrate_finite(math.sin, 0.0, math.pi)
        assert r.value == pytest.approx(2.0, abs=1e-13)

    def test_series_defined_cylindrical(self):
        f = lambda x: sum(
            (-1.0) ** k * (x / 2.0) ** (2 * k) / math.factorial(k) ** 2 for k in range(25)
        )
        r = integrate_finite(f, 0.0, 1.0)
        assert r.value == pytest.approx(0.9197304100897602, abs=1e-13)

    def test_additivity(self):
        f = lambda x: math.exp(-x) * math.cos(3.0 * x)
        whole = integrate_finite(f, 0.0, 5.0)
        left = integrate_finite(f, 0.0, 1.7)
        right = integrate_finite(f, 1.7, 5.0)
        assert whole.value == pytest.approx(left.value + right.value, abs=1e-12)

    def test_requires_ordering(self):
        with pytest.raises(DomainError):
            integrate_finite(math.sin, 1.0, 0.0)

    def test_non_finite_integrand(self):
        with pytest.raises(DomainError):
            integrate_finite(lambda x: float("nan"), 0.0, 1.0)

    def test_determinism(self):
        f = lambda x: math.sin(7.0 * x) / (1.0 + x * x)
        a = integrate_finite(f, 0.0, 9.0)
        b = integrate_finite(f, 0.0, 9.0)
        assert a == b

    def test_max_refinement_status(self):
        plan = finite_plan(0.0, 1.0, 1e-300, 1e-300, max_cells=4)
        r = integrate_finite(lambda x: math.exp(x) * math.sin(40.0 * x), 0.0, 1.0, plan)
        assert r.status == "max_refinement"


class TestLaguerre:
    def test_unit_weight(self):
        assert integrate_laguerre(lambda s: 1.0, 0.0, 16).value == pytest.approx(1.0, abs=1e-13)

    def test_unit_weight_linear_exponent(self):
        assert integrate_laguerre(lambda s: 1.0, 1.0, 16).value == pytest.approx(1.0, abs=1e-13)

    def test_polynomial_exactness(self):
        # degree <= 2*nodes-1 polynomials against s^sigma e^-s
        for sigma in (0.0, 0.5, 1.0, -0.25):
            for nodes in (8, 12, 16):
                coeffs = [0.7, -1.1, 0.3, 0.05, -0.02]
                deg = 2 * nodes - 1
                f = lambda s: sum(c * s ** min(k * 3, deg) for k, c in enumerate(coeffs))
                want = sum(
                    c * gamma(sigma + min(k * 3, deg) + 1.0) for k, c in enumerate(coeffs)
                )
                got = integrate_laguerre(f, sigma, nodes).value
                assert got == pytest.approx(want, rel=1e-13)

    def test_node_count_window(self):
        with pytest.raises(DomainError):
            integrate_laguerre(lambda s: 1.0, 0.0, 4)
        with pytest.raises(DomainError):
            integrate_laguerre(lambda s: 1.0, 0.0, 300)

    def test_sigma_window(self):
        with pytest.raises(DomainError):
            integrate_laguerre(lambda s: 1.0, -1.0, 16)

    def test_nodes_cached_and_positive(self):
        xs, ws = gauss_laguerre_nodes(0.5, 32)
        xs2, ws2 = gauss_laguerre_nodes(0.5, 32)
        assert xs is xs2
        assert all(x > 0 for x in xs)
        assert all(w >= 0 for w in ws)
        assert math.fsum(ws) == pytest.approx(gamma(1.5), rel=1e-13)


class TestLevin:
    def test_geometric_series(self):
        terms = [(-0.7) ** k for k in range(12)]
        ests = levin_u(terms)
        assert ests[-1] == pytest.approx(1.0 / 1.7, rel=1e-12)

    def test_divergent_alternating(self):
        # Euler-style divergent sum 1 - 2 + 4 - 8 ... has antilimit 1/3
        terms = [(-2.0) ** k for k in range(18)]
        ests = levin_u(terms)
        assert ests[-1] == pytest.approx(1.0 / 3.0, rel=1e-9)


class TestOscillatory:
    def test_sinc_tail(self):
        f = lambda x: math.sin(x) / x if x != 0.0 else 1.0
        r = integrate_oscillatory(f, 0.0, math.pi)
        assert r.status == "accelerated"
        assert r.value == pytest.approx(math.pi / 2.0, abs=1e-9)

    def test_fresnel_type(self):
        # integral_1^inf cos(x)/sqrt(x), reference from the head series
        head = sum(
            (-1.0) ** k / (math.factorial(2 * k) * (2 * k + 0.5)) for k in range(20)
        )
        want = math.sqrt(math.pi / 2.0) - head
        r = integrate_oscillatory(lambda x: math.cos(x) / math.sqrt(x), 1.0, math.pi)
        assert r.value == pytest.approx(want, abs=1e-10)

    def test_against_brute_cell_sum(self):
        # envelope x^-1.5: acceleration matches 1e4 summed cells
        f = lambda x: math.cos(x) * x**-1.5
        r = integrate_oscillatory(f, 3.0, math.pi)
        import numpy as np

        xs, ws = np.polynomial.legendre.leggauss(20)
        brute = 0.0
        for k in range(10000):
            a = 3.0 + k * math.pi
            mid, half = a + math.pi / 2.0, math.pi / 2.0
            brute += half * sum(w * f(mid + half * float(x)) for x, w in zip(xs, ws))
        assert r.value == pytest.approx(brute, abs=1e-7)

    def test_compact_support_equals_finite(self):
        def f(x):
            return math.sin(x) * math.exp(-((x - 2.0) ** 2) * 4.0) if x < 8.0 else 0.0

        r = integrate_oscillatory(f, 0.0, math.pi, oscillatory_plan(math.pi, 0.0, 40, 1e-12, 1e-12))
        want = integrate_finite(f, 0.0, 8.0, finite_plan(0.0, 8.0, 1e-13, 1e-13))
        assert r.value == pytest.approx(want.value, abs=1e-10)

    def test_growing_integrand_diagnosed(self):
        with pytest.raises(Exception):
            integrate_oscillatory(lambda x: math.exp(0.5 * x) * math.cos(x), 1.0, math.pi)

    def test_period_validation(self):
        with pytest.raises(DomainError):
            integrate_oscillatory(math.sin, 0.0, -1.0)


class TestRealLine:
    def test_gaussian(self):
        r = integrate_real_line(lambda x: math.exp(-x * x))
        assert r.value == pytest.approx(math.sqrt(math.pi), abs=1e-10)

    def test_odd_is_exactly_zero(self):
        r = integrate_real_line(lambda x: x * math.exp(-abs(x)))
        assert r.value == 0.0
        assert r.error_estimate == 0.0

    def test_general_asymmetric(self):
        # shifted Gaussian: stays sqrt(pi) wherever it sits
        r = integrate_real_line(
            lambda x: math.exp(-((x - 1.3) ** 2)), real_line_plan(math.pi, 20.0, 40, 1e-9, 1e-9)
        )
        assert r.value == pytest.approx(math.sqrt(math.pi), abs=1e-9)

    def test_oscillatory_even(self):
        from sphstruve.functions import sinc_sqrt

        r = integrate_real_line(
            lambda x: sinc_sqrt(x * x), real_line_plan(math.pi, 40.0, 60, 1e-9, 1e-9)
        )
        assert r.value == pytest.approx(math.pi, abs=1e-8)


class TestOscillatoryDeterminism:
    def test_bitwise_repeatability(self):
        f = lambda x: math.cos(x) / (1.0 + x)
        a = integrate_oscillatory(f, 1.0, math.pi)
        b = integrate_oscillatory(f, 1.0, math.pi)
        assert a == b
