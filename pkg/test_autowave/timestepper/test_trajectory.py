import numpy as np
import pytest

import autowave as aw

from autowave import exc


def make_trajectory(times, flux_squares, energies=None):

    return aw.Trajectory(
        times=times,
        energies=np.ones(times.shape[0]) if energies is None else energies,
        flux_squares={"A": flux_squares},
        x_products={"A": 0.5 * flux_squares},
        u0=None,
        u1=None,
        first_state=None,
        final_state=None,
        E0=1.0,
        sample_stride=1,
    )


class TestBoundaryIntegral:
    def test__constant_flux__integral_is_flux_times_time(self):

        trajectory = make_trajectory(
            times=np.linspace(0.0, 2.0, 5), flux_squares=np.full(5, 3.0)
        )

        assert trajectory.boundary_integral_until(side="A") == pytest.approx(6.0, 1.0e-12)
        assert trajectory.boundary_integral_until(side="A", t=1.0) == pytest.approx(
            3.0, 1.0e-12
        )
        assert trajectory.boundary_integral_until(side="A", t=0.0) == 0.0
        assert trajectory.x_product_integral_from(side="A") == pytest.approx(3.0, 1.0e-12)

    def test__cumulative__ends_at_whole_run_integral(self):

        times = np.linspace(0.0, 1.0, 11)

        trajectory = make_trajectory(times=times, flux_squares=times)

        cumulative = trajectory.cumulative_boundary_integral_from(side="A")

        assert cumulative[0] == 0.0
        assert cumulative[-1] == pytest.approx(0.5, 1.0e-12)
        assert np.all(np.diff(cumulative) >= 0.0)

    def test__missing_side_or_samples__raise_exception(self):

        trajectory = make_trajectory(times=np.linspace(0.0, 1.0, 3), flux_squares=np.ones(3))

        with pytest.raises(exc.InvalidSide):
            trajectory.boundary_integral_until(side="B")

        empty = make_trajectory(times=np.zeros(0), flux_squares=np.zeros(0))

        with pytest.raises(exc.EmptyTrajectory):
            empty.boundary_integral_until(side="A")


class TestEnergyDrift:
    def test__relative_to_first_sample(self):

        trajectory = make_trajectory(
            times=np.linspace(0.0, 1.0, 3),
            flux_squares=np.ones(3),
            energies=np.array([2.0, 2.002, 1.999]),
        )

        assert trajectory.energy_drift == pytest.approx(1.0e-3, 1.0e-8)
