import numpy as np
from scipy import integrate
from typing import Dict, Optional

from autowave.discretization.nodal_field import NodalField
from autowave.timestepper.wave_state import WaveState

from autowave import exc


class Trajectory:
    def __init__(
        self,
        times: np.ndarray,
        energies: np.ndarray,
        flux_squares: Dict[str, np.ndarray],
        x_products: Dict[str, np.ndarray],
        u0: NodalField,
        u1: NodalField,
        first_state: WaveState,
        final_state: WaveState,
        E0: float,
        sample_stride: int,
    ):
        """
        The sampled history of a leapfrog run: the conserved discrete energy and the boundary functionals of every
        side at the sample times, plus the initial data and the first and final states.

        Boundary functionals are per-sample space integrals over a side. For the side `s` at time `t`:

        - `flux_squares[s]` holds the integral of `|du/dn|^2` over `s`.
        - `x_products[s]` holds the integral of `(Xu)(du/dn)` over `s`, for the radial field `X` of the frame the
          run was observed in.

        Parameters
        ----------
        times
            The sample times, uniformly spaced from 0 to the final time.
        energies
            The conserved (staggered product) discrete energy at every sample.
        flux_squares
            The flux square integral of every side at every sample.
        x_products
            The radial product integral of every side at every sample.
        u0
            The initial displacement.
        u1
            The initial velocity.
        first_state
            The leapfrog state at `t = 0`.
        final_state
            The leapfrog state at the final time.
        E0
            The energy of the discrete initial data, `u1^T M u1 + u0^T K u0`.
        sample_stride
            The number of leapfrog steps between samples.
        """
        self.times = times
        self.energies = energies
        self.flux_squares = flux_squares
        self.x_products = x_products
        self.u0 = u0
        self.u1 = u1
        self.first_state = first_state
        self.final_state = final_state
        self.E0 = E0
        self.sample_stride = sample_stride

    @property
    def dt(self) -> float:
        return self.final_state.dt

    @property
    def T(self) -> float:
        return float(self.times[-1])

    @property
    def total_samples(self) -> int:
        return self.times.shape[0]

    @property
    def total_steps(self) -> int:
        return (self.total_samples - 1) * self.sample_stride

    @property
    def energy_drift(self) -> float:
        """
        The largest relative deviation of the sampled energies from their value at `t = 0`. A leapfrog run samples
        the staggered energy `v_{n-1/2}^T M_L v_{n+1/2} + u_n^T K u_n`, which is conserved to rounding, not the
        synchronized energy, whose relative oscillation is of order `(omega dt)^2`.
        """
        reference = self.energies[0]

        if reference == 0.0:
            return float(np.max(np.abs(self.energies)))

        return float(np.max(np.abs(self.energies - reference)) / abs(reference))

    def check_side(self, side: str):
        if self.total_samples == 0:
            raise exc.EmptyTrajectory("The trajectory holds no samples")

        if side not in self.flux_squares:
            raise exc.InvalidSide(
                f"The trajectory holds no boundary samples for side {side!r}"
            )

    def boundary_integral_until(self, side: str, t: Optional[float] = None) -> float:
        """
        The trapezoid time integral of the side's flux square integral over the samples in `[0, t]`, by default the
        whole run.
        """
        self.check_side(side=side)

        if t is None:
            in_window = np.full(self.total_samples, True)
        else:
            in_window = self.times <= t + 1.0e-12 * self.T

        if np.sum(in_window) < 2:
            return 0.0

        return float(
            integrate.trapezoid(
                self.flux_squares[side][in_window], self.times[in_window]
            )
        )

    def cumulative_boundary_integral_from(self, side: str) -> np.ndarray:
        """
        The boundary integral of the side over `[0, t]` at every sample time `t`.
        """
        self.check_side(side=side)

        return integrate.cumulative_trapezoid(
            self.flux_squares[side], self.times, initial=0.0
        )

    def x_product_integral_from(self, side: str) -> float:
        """
        The trapezoid time integral of the side's radial product integral over the whole run.
        """
        self.check_side(side=side)

        if self.total_samples < 2:
            return 0.0

        return float(integrate.trapezoid(self.x_products[side], self.times))
