import math

import pytest

from sphstruve.errors import DomainError
from sphstruve.gammakit import gamma
from sphstruve.regularized import (
    asym_saddle_value,
    fit_stokes_amplitude,
    humbert2_decimal,
    humbert2_phase_integral,
    power_moment_integral,
    real_line_squared_integral,
    stokes_amplitude,
)


class TestDecimalSeries:
    def test_small_value(self):
        assert float(humbert2_decimal(0.0, 0.0, 1)) == pytest.approx(
            0.12044213230101765, rel=1e-15
        )

    def test_large_argument_growth(self):
        # the envelope grows like exp(1.5 z^(1/3)); spot value at z = 12^3
        v = float(humbert2_decimal(0.0, 0.0, 12**3))
        assert abs(v) > 1e4

    def test_halfint_gamma_guard(self):
        with pytest.raises(DomainError):
            humbert2_decimal(0.3, 0.0, 1)


class TestAsymptotics:
    def test_stokes_closed_form_matches_fit(self):
        for mu, nu in ((0.0, 0.0), (0.5, 1.0), (2.0, 0.5), (1.0, 1.0)):
            cf = stokes_amplitude(mu, nu)
            ft = fit_stokes_amplitude(mu, nu)
            assert float(cf[0] - ft[0]) == pytest.approx(0.0, abs=1e-24)
            assert float(cf[1] - ft[1]) == pytest.approx(0.0, abs=1e-24)

    def test_amplitude_magnitude(self):
        c = stokes_amplitude(0.0, 0.0)
        mag = float((c[0] * c[0] + c[1] * c[1]).sqrt())
        assert mag == pytest.approx(1.0 / (2.0 * math.pi * math.sqrt(3.0)), rel=1e-20)

    def test_expansion_matches_series(self):
        for mu, nu in ((0.0, 0.0), (1.0, 2.0), (0.5, 0.5)):
            a = float(asym_saddle_value(mu, nu, 12))
            e = float(humbert2_decimal(mu, nu, 12**3))
            assert a == pytest.approx(e, rel=1e-20)


class TestRegularizedIntegrals:
    def test_real_line_values(self):
        for mu, nu in ((0.0, 0.0), (0.5, 1.0), (1.0, 2.0)):
            got = real_line_squared_integral(mu, nu)
            want = math.sqrt(math.pi) / (gamma(mu + 0.5) * gamma(nu + 0.5))
            assert got == pytest.approx(want, abs=2e-10)

    def test_special_point_is_exactly_two(self):
        assert real_line_squared_integral(0.5, 1.0) == pytest.approx(2.0, abs=1e-10)

    def test_power_moments(self):
        for alpha, mu, nu in ((0.5, 0.0, 0.0), (0.25, 1.0, 0.5), (0.75, 2.0, 1.0)):
            got = power_moment_integral(alpha, mu, nu)
            want = gamma(alpha) / (gamma(mu - alpha + 1.0) * gamma(nu - alpha + 1.0))
            assert got == pytest.approx(want, abs=2e-10, rel=2e-10)

    def test_windows(self):
        with pytest.raises(DomainError):
            power_moment_integral(1.5, 0.0, 0.0)
        with pytest.raises(DomainError):
            humbert2_phase_integral(-1.5, 0.0, 0.0)
        with pytest.raises(DomainError):
            humbert2_phase_integral(0.5, -0.5, 0.0)
