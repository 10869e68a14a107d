import numpy as np
import pytest

import autowave as aw

from autowave import exc


class TestSquareMode:
    def test__energy_and_frequency(self):

        mode = aw.SquareMode(n=3)

        assert mode.energy == 10.0
        assert mode.frequency == pytest.approx(np.sqrt(10.0), 1.0e-12)

        with pytest.raises(exc.ConfigException):
            aw.SquareMode(n=0)

    def test__exact_matches_quadrature(self):

        for n in (1, 4, 10, 16):
            for T in (1.0, 9.5, 40.0):

                boundary_integral, _, _ = aw.square_exact(n=n, T=T)

                assert boundary_integral == pytest.approx(
                    aw.square_quadrature_oracle(n=n, T=T), 1.0e-10
                )

    def test__boundary_integral_per_energy_degenerates_with_n(self):

        _, _, per_energy_1 = aw.square_exact(n=1, T=10.0)
        _, _, per_energy_16 = aw.square_exact(n=16, T=10.0)

        assert per_energy_1 / per_energy_16 >= 50.0

        per_energy = [aw.square_exact(n=n, T=10.0)[2] for n in range(1, 17)]

        assert np.all(np.diff(per_energy) < 0.0)

    def test__ratio_tends_to_inverse_energy(self):

        mode = aw.SquareMode(n=5)

        assert mode.observability_ratio_from(T=1.0e4) == pytest.approx(1.0 / 26.0, 1.0e-3)
