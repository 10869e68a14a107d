import numpy as np
import pytest

import autowave as aw


class TestGaussLegendre:
    def test__polynomial_integrated_exactly(self):

        assert aw.util.quadrature.gauss_legendre_integral_from(
            func=lambda t: t ** 5 - 2.0 * t, lower=0.0, upper=2.0, panels=1, points=3
        ) == pytest.approx(64.0 / 6.0 - 4.0, 1.0e-12)

    def test__weights_sum_to_interval_length(self):

        _, weights = aw.util.quadrature.gauss_legendre_from(lower=-1.0, upper=3.0)

        assert np.sum(weights) == pytest.approx(4.0, 1.0e-12)


class TestTrapezoid:
    def test__periodic_rule_exact_for_trigonometric_polynomial(self):

        assert aw.util.quadrature.periodic_trapezoid_integral_from(
            func=lambda y: np.sin(3.0 * y) ** 2, lower=0.0, upper=2.0 * np.pi, intervals=8
        ) == pytest.approx(np.pi, 1.0e-12)

    def test__composite_rule_converges(self):

        assert aw.util.quadrature.trapezoid_integral_from(
            func=np.exp, lower=0.0, upper=1.0, intervals=1000
        ) == pytest.approx(np.e - 1.0, 1.0e-6)


class TestClosedForms:
    def test__zero_frequency_handled(self):

        frequencies = np.array([0.0, 2.0])

        assert aw.util.quadrature.integral_of_cosine_from(frequencies, 3.0) == pytest.approx(
            np.array([3.0, np.sin(6.0) / 2.0]), 1.0e-12
        )
        assert aw.util.quadrature.integral_of_sine_from(frequencies, 3.0) == pytest.approx(
            np.array([0.0, (1.0 - np.cos(6.0)) / 2.0]), abs=1.0e-12
        )
