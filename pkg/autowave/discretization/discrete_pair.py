import logging
import numpy as np
from scipy import sparse
from typing import Optional

from autoconf import conf

from autowave.discretization.nodal_field import NodalField
from autowave.discretization import discretization_util
from autowave.mesh.mesh import Mesh

from autowave import exc

logger = logging.getLogger(__name__)

logger.setLevel(level="INFO")

MASS = "mass"
STIFFNESS = "stiffness"


class DiscretePair:
    def __init__(
        self,
        mesh: Mesh,
        lumped: bool,
        gradients: np.ndarray,
        areas: np.ndarray,
        stiffness_full: sparse.csr_matrix,
        mass_consistent_full: sparse.csr_matrix,
        mass_lumped_full: np.ndarray,
    ):
        """
        The P1 mass and stiffness operators of a mesh, with the homogeneous Dirichlet condition applied by
        eliminating the rows and columns of boundary nodes.

        The unconstrained (pre-elimination) operators are kept alongside the constrained ones, so invariants such as
        the stiffness annihilating constants can be checked.

        Parameters
        ----------
        mesh
            The mesh the operators are assembled on.
        lumped
            Whether `mass` is the lumped (diagonal) or the consistent mass.
        gradients
            The (total_elements, 3, 2) basis function gradients of every element.
        areas
            The area of every element.
        stiffness_full
            The unconstrained stiffness operator over all nodes.
        mass_consistent_full
            The unconstrained consistent mass operator over all nodes.
        mass_lumped_full
            The diagonal of the unconstrained lumped mass over all nodes.
        """
        self.mesh = mesh
        self.lumped = lumped
        self.gradients = gradients
        self.areas = areas

        self.stiffness_full = stiffness_full
        self.mass_consistent_full = mass_consistent_full
        self.mass_lumped_full = mass_lumped_full

        self.interior_nodes = mesh.interior_nodes

        self.stiffness = discretization_util.restricted_operator_from(
            operator=stiffness_full, interior_nodes=self.interior_nodes
        )
        self.mass_consistent = discretization_util.restricted_operator_from(
            operator=mass_consistent_full, interior_nodes=self.interior_nodes
        )
        self.mass_lumped = mass_lumped_full[self.interior_nodes]

        self.mass = (
            sparse.diags(self.mass_lumped, format="csr")
            if lumped
            else self.mass_consistent
        )

    @classmethod
    def from_mesh(cls, mesh: Mesh, lumped: Optional[bool] = None) -> "DiscretePair":
        """
        Assemble the P1 operators of a mesh.

        Parameters
        ----------
        mesh
            The mesh, which must have at least one interior node (level 2 or above for a uniform mesh).
        lumped
            Whether the mass used for time stepping and energies is lumped, defaulting to the `[discretization]
            lumped` config value.

        Raises
        ------
        exc.NoInteriorNodes
            If every node of the mesh lies on the boundary.
        """
        if mesh.total_interior_nodes == 0:
            raise exc.NoInteriorNodes(
                f"A mesh of level {mesh.level} has no interior nodes, use level 2 or above"
            )

        if lumped is None:
            lumped = conf.instance["general"]["discretization"]["lumped"]

        gradients, areas = discretization_util.element_gradients_from(
            nodes=mesh.nodes, elements=mesh.elements
        )

        stiffness_full = discretization_util.sparse_operator_from(
            elements=mesh.elements,
            local_matrices=discretization_util.element_stiffness_matrices_from(
                gradients=gradients, areas=areas
            ),
            total_nodes=mesh.total_nodes,
        )

        mass_consistent_full = discretization_util.sparse_operator_from(
            elements=mesh.elements,
            local_matrices=discretization_util.element_mass_matrices_from(
                areas=areas, lumped=False
            ),
            total_nodes=mesh.total_nodes,
        )

        mass_lumped_full = np.asarray(mass_consistent_full.sum(axis=1)).reshape(-1)

        logger.info(
            f"Assembled P1 operators on {mesh.total_interior_nodes} interior nodes "
            f"({stiffness_full.nnz} stiffness entries before elimination)"
        )

        return DiscretePair(
            mesh=mesh,
            lumped=bool(lumped),
            gradients=gradients,
            areas=areas,
            stiffness_full=stiffness_full,
            mass_consistent_full=mass_consistent_full,
            mass_lumped_full=mass_lumped_full,
        )

    @property
    def total_interior_nodes(self) -> int:
        return self.interior_nodes.shape[0]

    def check_values(self, values: np.ndarray):
        if values.shape != (self.total_interior_nodes,):
            raise exc.DimensionMismatch(
                f"Operators act on {self.total_interior_nodes} interior values, got an array of shape "
                f"{values.shape}"
            )

    def apply_operator(self, which: str, field: NodalField) -> NodalField:
        """
        Apply the mass or stiffness operator to a constrained field.

        Parameters
        ----------
        which
            Either `mass` or `stiffness`.
        field
            The field the operator acts on.

        Raises
        ------
        exc.DimensionMismatch
            If the field is not a constrained field with one value per interior node.
        """
        if not field.constrained:
            raise exc.DimensionMismatch(
                "Operators act on constrained fields, which store interior values only"
            )

        self.check_values(values=field.values)

        if which == MASS:
            values = self.mass @ field.values
        elif which == STIFFNESS:
            values = self.stiffness @ field.values
        else:
            raise exc.DiscretizationException(
                f"Unknown operator {which!r}, use {MASS!r} or {STIFFNESS!r}"
            )

        return field.with_new_values(values=values)

    def acceleration_from(self, values: np.ndarray) -> np.ndarray:
        """
        Returns `M_L^-1 K u` for interior values `u`, using the lumped mass whatever the `lumped` flag, so explicit
        time steps need no linear solve.
        """
        return (self.stiffness @ values) / self.mass_lumped

    def mass_norm_squared_from(self, values: np.ndarray) -> float:
        return float(values @ (self.mass @ values))

    def stiffness_norm_squared_from(self, values: np.ndarray) -> float:
        return float(values @ (self.stiffness @ values))

    def l2_norm_from(self, field: NodalField) -> float:
        """
        The exact L2 norm of a constrained P1 field, from the consistent mass.
        """
        self.check_values(values=field.values)

        return float(np.sqrt(field.values @ (self.mass_consistent @ field.values)))

    def rayleigh_quotient_from(self, field: NodalField) -> float:
        """
        The discrete Rayleigh quotient `x^T K x / x^T M x` of a constrained field, using the pair's mass.
        """
        self.check_values(values=field.values)

        return self.stiffness_norm_squared_from(
            values=field.values
        ) / self.mass_norm_squared_from(values=field.values)

    def field_gradients_from(self, field: NodalField) -> np.ndarray:
        """
        The constant (x,y) gradient of a field on every element of the mesh.
        """
        return discretization_util.field_gradients_from(
            values=field.full_values,
            elements=self.mesh.elements,
            gradients=self.gradients,
        )
