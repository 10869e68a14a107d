import logging
from typing import Dict, Tuple

from autowave.discretization.discrete_pair import DiscretePair
from autowave.discretization.nodal_field import NodalField
from autowave.observability.boundary_observer import BoundaryObserver
from autowave.observability import observability_util
from autowave.timestepper.settings import RunConfig
from autowave.timestepper.trajectory import Trajectory
from autowave.timestepper import leapfrog

from autowave import exc

logger = logging.getLogger(__name__)

logger.setLevel(level="INFO")

COLUMNS = [
    "side",
    "level",
    "h_max",
    "dt",
    "T",
    "E0",
    "boundary_integral",
    "ratio",
    "x_prod_A",
    "x_prod_B",
    "x_prod_C",
    "commutator_residual",
]


class ObservabilityReport:
    def __init__(
        self,
        side: str,
        T: float,
        E0: float,
        boundary_integral: float,
        ratio: float,
        x_products: Dict[str, float],
        commutator_residual: float,
        level: int,
        dt: float,
        h_max: float,
        ell: float,
        frame_classification: str,
        energy_drift: float,
    ):
        """
        The boundary observability measurements of one run for the side under study.

        Parameters
        ----------
        side
            The side whose Neumann data is observed, which also fixes the frame of the radial field.
        T
            The final time.
        E0
            The energy of the discrete initial data.
        boundary_integral
            The time integral over `[0, T]` of the side integral of `|du/dn|^2`.
        ratio
            The observability ratio `ell * boundary_integral / (T * E0)`.
        x_products
            For every side, the time integral of the side integral of `(Xu)(du/dn)`.
        commutator_residual
            The residual of the commutator identity over the run.
        level
            The mesh level of the run.
        dt
            The time step of the run.
        h_max
            The longest element edge of the mesh.
        ell
            The altitude onto the side under study.
        frame_classification
            Whether the frame of the side is acute, right or obtuse.
        energy_drift
            The largest relative deviation during the run of the staggered energy
            `v_{n-1/2}^T M_L v_{n+1/2} + u_n^T K u_n`, which leapfrog conserves to rounding. The synchronized energy
            `v_n^T M_L v_n + u_n^T K u_n` oscillates about it by a relative amount of order `(omega dt)^2` and is not
            what this measures.
        """
        self.side = side
        self.T = T
        self.E0 = E0
        self.boundary_integral = boundary_integral
        self.ratio = ratio
        self.x_products = x_products
        self.commutator_residual = commutator_residual
        self.level = level
        self.dt = dt
        self.h_max = h_max
        self.ell = ell
        self.frame_classification = frame_classification
        self.energy_drift = energy_drift

    @classmethod
    def from_trajectory(
        cls, trajectory: Trajectory, observer: BoundaryObserver
    ) -> "ObservabilityReport":
        """
        Reduce a trajectory sampled by a boundary observer to its report.

        Raises
        ------
        exc.ZeroEnergy
            If the initial data has zero energy.
        exc.EmptyTrajectory
            If the trajectory holds no samples.
        """
        side = observer.side
        frame = observer.frame

        boundary_integral = observability_util.boundary_integral_from(
            times=trajectory.times, flux_squares=trajectory.flux_squares[side]
        )

        ratio = observability_util.observability_ratio_from(
            boundary_integral=boundary_integral,
            T=trajectory.T,
            E0=trajectory.E0,
            ell=frame.ell,
        )

        report = ObservabilityReport(
            side=side,
            T=trajectory.T,
            E0=trajectory.E0,
            boundary_integral=boundary_integral,
            ratio=ratio,
            x_products={
                label: trajectory.x_product_integral_from(side=label)
                for label in trajectory.x_products
            },
            commutator_residual=observer.commutator_balance_from(trajectory=trajectory),
            level=observer.mesh.level,
            dt=trajectory.dt,
            h_max=observer.mesh.h_max,
            ell=frame.ell,
            frame_classification=frame.classification,
            energy_drift=trajectory.energy_drift,
        )

        logger.info(
            f"Side {side} ({report.frame_classification} frame), level {report.level}, T = {report.T:.6g}: "
            f"R = {report.ratio:.6g}, commutator residual {report.commutator_residual:.3e}"
        )

        return report

    @property
    def ratio_error(self) -> float:
        return abs(self.ratio - 1.0)

    @property
    def row(self) -> Dict:
        """
        The report as one CSV row, keyed by `COLUMNS`.
        """
        return {
            "side": self.side,
            "level": self.level,
            "h_max": self.h_max,
            "dt": self.dt,
            "T": self.T,
            "E0": self.E0,
            "boundary_integral": self.boundary_integral,
            "ratio": self.ratio,
            "x_prod_A": self.x_products.get("A", 0.0),
            "x_prod_B": self.x_products.get("B", 0.0),
            "x_prod_C": self.x_products.get("C", 0.0),
            "commutator_residual": self.commutator_residual,
        }


def observe(
    u0: NodalField,
    u1: NodalField,
    pair: DiscretePair,
    side: str,
    run_config: RunConfig,
) -> Tuple[ObservabilityReport, Trajectory]:
    """
    Run leapfrog from the initial data `(u0, u1)` while a boundary observer framed on `side` samples every side,
    and return the report of the run together with its trajectory.

    Raises
    ------
    exc.ZeroEnergy
        If the initial data has zero energy, checked before any step is taken.
    """
    E0 = leapfrog.initial_energy_from(u0=u0, u1=u1, pair=pair)

    if not E0 > 0.0:
        raise exc.ZeroEnergy("The initial data has zero energy, there is nothing to observe")

    observer = BoundaryObserver.from_pair(pair=pair, side=side)

    trajectory = leapfrog.run(
        u0=u0, u1=u1, pair=pair, run_config=run_config, observer=observer
    )

    return ObservabilityReport.from_trajectory(trajectory=trajectory, observer=observer), trajectory
