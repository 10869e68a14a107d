import numpy as np
import pytest

import autowave as aw

from autowave import exc


class TestRatio:
    def test__ratio_formula(self):

        assert aw.util.observability.observability_ratio_from(
            boundary_integral=6.0, T=3.0, E0=4.0, ell=2.0
        ) == pytest.approx(1.0, 1.0e-12)

    def test__zero_energy__raises_exception(self):

        with pytest.raises(exc.ZeroEnergy):
            aw.util.observability.observability_ratio_from(
                boundary_integral=1.0, T=1.0, E0=0.0, ell=1.0
            )

    def test__boundary_integral__empty_and_single_sample(self):

        with pytest.raises(exc.EmptyTrajectory):
            aw.util.observability.boundary_integral_from(times=np.zeros(0), flux_squares=np.zeros(0))

        assert aw.util.observability.boundary_integral_from(
            times=np.zeros(1), flux_squares=np.ones(1)
        ) == 0.0


class TestConstants:
    def test__envelope_constants(self):

        assert aw.util.observability.radial_multiplier_envelope_constant() == pytest.approx(4.139, 1.0e-3)
        assert aw.util.observability.poincare_constant_from(longest_side=2.0) == pytest.approx(
            2.0 * np.sqrt(np.e - 1.0), 1.0e-12
        )
        assert aw.util.observability.one_dimensional_envelope_from(length=1.5, T=30.0) == pytest.approx(
            0.1, 1.0e-12
        )

    def test__commutator_residual(self):

        assert aw.util.observability.commutator_residual_from(
            x_product_integral=10.0, T=2.0, E0=4.0, volume_term_0=1.0, volume_term_T=3.0
        ) == pytest.approx(0.0, abs=1.0e-12)
