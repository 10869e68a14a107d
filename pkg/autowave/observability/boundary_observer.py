import numpy as np
from scipy import sparse
from scipy.sparse import linalg as sparse_linalg
from typing import Dict, Optional, Tuple, Union

from autoconf import conf

from autowave.discretization import discretization_util
from autowave.discretization.discrete_pair import DiscretePair
from autowave.discretization.nodal_field import NodalField
from autowave.geometry.side_frame import SideFrame
from autowave.observability.radial_field import RadialField
from autowave.observability import observability_util
from autowave.timestepper.trajectory import Trajectory
from autowave.timestepper.wave_state import WaveState

from autowave import exc

ELEMENT = "element"
VARIATIONAL = "variational"


class BoundaryObserver:
    def __init__(self, pair: DiscretePair, frame: SideFrame, flux_recovery: Optional[str] = None):
        """
        Measures the Neumann data of P1 fields on the three sides of a mesh, together with the boundary and volume
        terms of the commutator identity of the radial field centred opposite the side under study.

        Two recoveries of the flux are available:

        - `element`: the constant gradient of the field on the unique element adjacent to a boundary edge, dotted
          with the edge's outward normal, so the trace is piecewise constant along every side.

        - `variational`: the continuous piecewise linear trace `g` along a side which satisfies Green's formula
          against every hat function of a node on the side,

              int g phi_j dS = (K u)_j + (M_c u_tt)_j

          with `g` zero at the corners of the triangle. The time derivative `u_tt` is that of the semi-discrete
          equation, `-M_L^-1 K u`, unless the acceleration is input. Since a field vanishing on a straight side has
          gradient `(du/dn) n` there, the radial product of this trace is the side's constant offset `x.n` times
          `int g^2`.

        The variational recovery is used for fields satisfying the Dirichlet condition, the element recovery for
        unconstrained fields and by `neumann_trace_from`.

        For every side the observer stores the data of its boundary edges once, so sampling a field during a
        leapfrog run costs a few small sparse products and one tridiagonal solve per side.

        Parameters
        ----------
        pair
            The operators of the mesh, whose element gradients and unconstrained operators are reused.
        frame
            The frame of the side under study, which fixes the radial field.
        flux_recovery
            The recovery of the side integrals, `variational` or `element`, defaulting to the `[observability]
            flux_recovery` config value.

        Raises
        ------
        exc.InvalidFluxRecovery
            If the flux recovery is not one of the two above.
        """
        if flux_recovery is None:
            flux_recovery = conf.instance["general"]["observability"]["flux_recovery"]

        if flux_recovery not in (ELEMENT, VARIATIONAL):
            raise exc.InvalidFluxRecovery(
                f"Unknown flux recovery {flux_recovery!r}, use {VARIATIONAL!r} or {ELEMENT!r}"
            )

        self.pair = pair
        self.mesh = pair.mesh
        self.frame = frame
        self.flux_recovery = flux_recovery
        self.radial_field = RadialField(frame=frame)

        self.restrictions = {
            side: self.mesh.boundary_restriction_from(side=side)
            for side in self.mesh.triangle.labels
        }

        self.edge_element_nodes = {
            side: self.mesh.elements[restriction.elements]
            for side, restriction in self.restrictions.items()
        }
        self.edge_element_gradients = {
            side: pair.gradients[restriction.elements]
            for side, restriction in self.restrictions.items()
        }
        self.edge_midpoints_in_frame = {
            side: frame.to_frame(points=restriction.midpoints)
            for side, restriction in self.restrictions.items()
        }

        self.side_nodes = {}
        self.side_stiffness = {}
        self.side_mass = {}
        self.side_trace_mass = {}
        self.side_trace_solvers = {}
        self.side_offsets = {}

        for side, restriction in self.restrictions.items():

            nodes = np.append(restriction.edges[:, 0], restriction.edges[-1, 1])
            inner = nodes[1:-1]

            self.side_nodes[side] = nodes
            self.side_stiffness[side] = pair.stiffness_full[inner]
            self.side_mass[side] = pair.mass_consistent_full[inner][:, pair.interior_nodes]

            lengths = restriction.lengths

            trace_mass = sparse.diags(
                [lengths[1:-1] / 6.0, (lengths[:-1] + lengths[1:]) / 3.0, lengths[1:-1] / 6.0],
                offsets=[-1, 0, 1],
                format="csc",
            )

            self.side_trace_mass[side] = trace_mass
            self.side_trace_solvers[side] = sparse_linalg.factorized(trace_mass)

            offsets = np.sum(
                self.edge_midpoints_in_frame[side]
                * frame.vectors_to_frame(vectors=restriction.normals),
                axis=1,
            )

            self.side_offsets[side] = float(np.mean(offsets))

    @classmethod
    def from_pair(
        cls, pair: DiscretePair, side: str, flux_recovery: Optional[str] = None
    ) -> "BoundaryObserver":
        return cls(
            pair=pair,
            frame=SideFrame.from_triangle(triangle=pair.mesh.triangle, side=side),
            flux_recovery=flux_recovery,
        )

    @property
    def side(self) -> str:
        return self.frame.side

    def full_values_from(self, field: Union[NodalField, WaveState, np.ndarray]) -> np.ndarray:

        if isinstance(field, WaveState):
            field = field.u

        if isinstance(field, NodalField):
            if not self.mesh.matches(field.mesh):
                raise exc.DimensionMismatch("The field lives on a different mesh")
            return field.full_values

        values = np.asarray(field, dtype="float")

        self.pair.check_values(values=values)

        full = np.zeros(self.mesh.total_nodes)
        full[self.pair.interior_nodes] = values

        return full

    def recovery_for(self, field) -> str:
        if isinstance(field, NodalField) and not field.constrained:
            return ELEMENT
        return self.flux_recovery

    def edge_gradients_from(self, full_values: np.ndarray, side: str) -> np.ndarray:
        """
        The (x,y) gradient of a field on the element adjacent to every boundary edge of a side.
        """
        return np.einsum(
            "ek,ekc->ec",
            full_values[self.edge_element_nodes[side]],
            self.edge_element_gradients[side],
        )

    def neumann_trace_from(self, field, side: str) -> np.ndarray:
        """
        The outward normal derivative of a field on every boundary edge of a side, ordered along the side.

        Parameters
        ----------
        field
            A `NodalField` (constrained or not), a `WaveState` whose displacement is used, or the interior values of
            a constrained field.
        side
            The side label.
        """
        self.mesh.triangle.side_index(side)

        gradients = self.edge_gradients_from(full_values=self.full_values_from(field), side=side)

        return np.sum(gradients * self.restrictions[side].normals, axis=1)

    def acceleration_from(self, full_values: np.ndarray) -> np.ndarray:
        return self.pair.acceleration_from(values=full_values[self.pair.interior_nodes])

    def inner_trace_from(
        self, full_values: np.ndarray, side: str, acceleration: Optional[np.ndarray] = None
    ) -> np.ndarray:
        """
        The variational trace at the nodes of a side other than its two corners.
        """
        if acceleration is None:
            acceleration = self.acceleration_from(full_values=full_values)

        residual = self.side_stiffness[side] @ full_values - self.side_mass[side] @ acceleration

        return self.side_trace_solvers[side](residual)

    def variational_trace_from(
        self, field, side: str, acceleration: Optional[np.ndarray] = None
    ) -> np.ndarray:
        """
        The outward normal derivative of a field vanishing on the boundary at every node of a side, ordered along
        the side and zero at both corners, recovered from Green's formula.

        Parameters
        ----------
        field
            A constrained `NodalField`, a `WaveState` whose displacement is used, or interior values.
        side
            The side label.
        acceleration
            The values `M_L^-1 K u` at interior nodes, computed from the field if not input.
        """
        self.mesh.triangle.side_index(side)

        trace = np.zeros(self.side_nodes[side].shape[0])
        trace[1:-1] = self.inner_trace_from(
            full_values=self.full_values_from(field), side=side, acceleration=acceleration
        )

        return trace

    def side_integrals_from(
        self,
        full_values: np.ndarray,
        side: str,
        acceleration: Optional[np.ndarray] = None,
        flux_recovery: Optional[str] = None,
    ) -> Tuple[float, float]:
        """
        The side integrals of `|du/dn|^2` and of `(Xu)(du/dn)` for the radial field of the frame under study.

        For the element recovery the gradient is constant and `Xu` linear on every edge, so the midpoint rule
        integrates both exactly. For the variational recovery both are integrated exactly with the side's P1 mass.
        """
        flux_recovery = flux_recovery or self.flux_recovery

        if flux_recovery == VARIATIONAL:

            trace = self.inner_trace_from(
                full_values=full_values, side=side, acceleration=acceleration
            )

            flux_square = float(trace @ (self.side_trace_mass[side] @ trace))

            return flux_square, self.side_offsets[side] * flux_square

        restriction = self.restrictions[side]

        gradients = self.edge_gradients_from(full_values=full_values, side=side)

        flux = np.sum(gradients * restriction.normals, axis=1)

        radial = np.sum(
            self.edge_midpoints_in_frame[side]
            * self.frame.vectors_to_frame(vectors=gradients),
            axis=1,
        )

        return (
            float(np.sum(flux ** 2 * restriction.lengths)),
            float(np.sum(radial * flux * restriction.lengths)),
        )

    def flux_square_from(self, field, side: str) -> float:
        self.mesh.triangle.side_index(side)

        return self.side_integrals_from(
            full_values=self.full_values_from(field),
            side=side,
            flux_recovery=self.recovery_for(field),
        )[0]

    def x_product_from(self, field, side: str) -> float:
        self.mesh.triangle.side_index(side)

        return self.side_integrals_from(
            full_values=self.full_values_from(field),
            side=side,
            flux_recovery=self.recovery_for(field),
        )[1]

    def sample_from(
        self, values: np.ndarray, acceleration: Optional[np.ndarray] = None
    ) -> Tuple[Dict[str, float], Dict[str, float]]:
        """
        The flux square and radial product integrals of every side, for the interior values of a displacement.
        This is the sampling hook of a leapfrog run, which inputs the acceleration it has already computed.
        """
        full_values = np.zeros(self.mesh.total_nodes)
        full_values[self.pair.interior_nodes] = values

        if self.flux_recovery == VARIATIONAL and acceleration is None:
            acceleration = self.acceleration_from(full_values=full_values)

        flux_squares = {}
        x_products = {}

        for side in self.restrictions:
            flux_squares[side], x_products[side] = self.side_integrals_from(
                full_values=full_values, side=side, acceleration=acceleration
            )

        return flux_squares, x_products

    def volume_term_from(self, displacement: NodalField, velocity: NodalField) -> float:
        """
        The volume term `int u_t u + 2 u_t (Xu) dV` of the commutator identity, integrated exactly for P1 fields
        with the consistent mass: `Xu` is linear on every element.
        """
        self.pair.check_values(values=displacement.values)
        self.pair.check_values(values=velocity.values)

        cross = float(velocity.values @ (self.pair.mass_consistent @ displacement.values))

        field_gradients = self.pair.field_gradients_from(field=displacement)

        radial_values = self.radial_field.vertex_values_from(
            nodes=self.mesh.nodes,
            elements=self.mesh.elements,
            field_gradients=field_gradients,
        )

        velocity_values = velocity.full_values[self.mesh.elements]

        radial = discretization_util.element_bilinear_mass_from(
            values_0=velocity_values, values_1=radial_values, areas=self.pair.areas
        )

        return cross + 2.0 * radial

    def commutator_balance_from(self, trajectory: Trajectory) -> float:
        """
        The residual of the commutator identity over a run,

            | int_0^T sum_sides int (Xu)(du/dn) dS dt - T E(0) - [int u_t u + 2 u_t (Xu) dV]_0^T |

        with velocities synchronized to the displacement at both ends.

        Raises
        ------
        exc.EmptyTrajectory
            If the trajectory holds no boundary samples.
        """
        if trajectory.total_samples == 0 or not trajectory.x_products:
            raise exc.EmptyTrajectory(
                "The commutator balance needs a trajectory sampled by a boundary observer"
            )

        x_product_integral = sum(
            trajectory.x_product_integral_from(side=side) for side in trajectory.x_products
        )

        volume_term_0 = self.volume_term_from(displacement=trajectory.u0, velocity=trajectory.u1)

        final_state = trajectory.final_state

        volume_term_T = self.volume_term_from(
            displacement=final_state.u,
            velocity=final_state.synchronized_velocity_from(pair=self.pair),
        )

        return observability_util.commutator_residual_from(
            x_product_integral=x_product_integral,
            T=trajectory.T,
            E0=trajectory.E0,
            volume_term_0=volume_term_0,
            volume_term_T=volume_term_T,
        )


def neumann_trace(field, pair: DiscretePair, side: str) -> np.ndarray:
    """
    The outward normal derivative of a field on every boundary edge of a side, ordered along the side.
    """
    return BoundaryObserver.from_pair(pair=pair, side=side).neumann_trace_from(
        field=field, side=side
    )


def x_product_on_side(field, pair: DiscretePair, frame: SideFrame, side: str) -> float:
    """
    The side integral of `(Xu)(du/dn)` for the radial field of `frame`, which may belong to another side.
    """
    return BoundaryObserver(pair=pair, frame=frame).x_product_from(field=field, side=side)


def poincare_check(field: NodalField, pair: DiscretePair, frame: SideFrame) -> Tuple[float, float]:
    """
    The two sides of the Poincare inequality `||u|| <= L sqrt(e - 1) ||u_x'||` for a field vanishing on the
    boundary, where `x'` is the frame's coordinate across the framed side and `L` the longest side.

    Returns
    -------
    lhs
        The L2 norm of the field.
    rhs
        `L sqrt(e - 1)` times the L2 norm of its derivative along the frame's `x` axis.
    """
    lhs = pair.l2_norm_from(field=field)

    derivative_norm_squared = observability_util.directional_derivative_norm_squared_from(
        field_gradients=pair.field_gradients_from(field=field),
        areas=pair.areas,
        direction=np.asarray(frame.rotation[0], dtype="float"),
    )

    rhs = observability_util.poincare_constant_from(
        longest_side=pair.mesh.triangle.longest_side
    ) * np.sqrt(derivative_norm_squared)

    return lhs, float(rhs)
