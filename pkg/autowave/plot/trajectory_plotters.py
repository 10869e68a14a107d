from matplotlib import pyplot as plt
from typing import Optional

from autowave.plot.abstract_plotters import AbstractPlotter, Output
from autowave.timestepper.trajectory import Trajectory


class TrajectoryPlotter(AbstractPlotter):
    def __init__(self, trajectory: Trajectory, side: str, ell: float, output: Output):
        """
        Plots the boundary observability of a run: the boundary integral of a side over `[0, t]` against the line
        `(t / ell) E(0)` it approaches, and the relative drift of the conserved energy.

        Parameters
        ----------
        trajectory
            The sampled run.
        side
            The side whose boundary integral is plotted.
        ell
            The altitude onto the side.
        output
            Where the figures are written.
        """
        super().__init__(output=output)

        self.trajectory = trajectory
        self.side = side
        self.ell = ell

    def plot_boundary_integral(self, axis):

        times = self.trajectory.times

        axis.plot(
            times,
            self.trajectory.cumulative_boundary_integral_from(side=self.side),
            label=f"boundary integral, side {self.side}",
        )
        axis.plot(
            times,
            times / self.ell * self.trajectory.E0,
            linestyle="--",
            label="(t / ell) E(0)",
        )
        axis.set_xlabel("t")
        axis.legend()

    def plot_energy_drift(self, axis):

        energies = self.trajectory.energies
        reference = energies[0] if energies[0] != 0.0 else 1.0

        axis.plot(self.trajectory.times, (energies - energies[0]) / abs(reference))
        axis.set_xlabel("t")
        axis.set_ylabel("relative energy drift")

    def figures_1d(
        self, boundary_integral: bool = False, energy_drift: bool = False, suffix: Optional[str] = None
    ):
        suffix = f"_{suffix}" if suffix else ""

        if boundary_integral:
            _, axes = self.open_figure()
            self.plot_boundary_integral(axis=axes[0, 0])
            self.output.to_figure(filename=f"boundary_integral{suffix}")

        if energy_drift:
            _, axes = self.open_figure()
            self.plot_energy_drift(axis=axes[0, 0])
            self.output.to_figure(filename=f"energy_drift{suffix}")

    def subplot_trajectory(self, suffix: Optional[str] = None):

        suffix = f"_{suffix}" if suffix else ""

        _, axes = self.open_figure(number_subplots=2)

        self.plot_boundary_integral(axis=axes[0, 0])
        self.plot_energy_drift(axis=axes[0, 1])

        plt.tight_layout()

        return self.output.to_figure(filename=f"subplot_trajectory{suffix}")
