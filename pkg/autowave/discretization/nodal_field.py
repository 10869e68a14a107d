import numpy as np
from typing import Callable

from autowave.mesh.mesh import Mesh

from autowave import exc


class NodalField:
    def __init__(self, values: np.ndarray, mesh: Mesh, constrained: bool = True):
        """
        A real piecewise-linear field on a mesh, stored by its nodal values.

        A constrained field (the default) satisfies the homogeneous Dirichlet condition and stores values at the
        interior nodes only, in interior node order. An unconstrained field stores a value at every node of the mesh
        and is used to study traces of interpolants which do not vanish on the boundary.

        Parameters
        ----------
        values
            The nodal values, at interior nodes for a constrained field and at all nodes otherwise.
        mesh
            The mesh the field is defined on.
        constrained
            Whether the field vanishes on the boundary and stores interior values only.
        """
        values = np.asarray(values, dtype="float")

        expected = mesh.total_interior_nodes if constrained else mesh.total_nodes

        if values.shape != (expected,):
            raise exc.DimensionMismatch(
                f"A {'constrained' if constrained else 'unconstrained'} field on this mesh needs {expected} "
                f"values, got an array of shape {values.shape}"
            )

        if not np.all(np.isfinite(values)):
            raise exc.NonFiniteSample("Nodal field values must be finite")

        self.values = values
        self.mesh = mesh
        self.constrained = constrained

    @classmethod
    def zeros(cls, mesh: Mesh) -> "NodalField":
        return cls(values=np.zeros(mesh.total_interior_nodes), mesh=mesh)

    @classmethod
    def via_function_from(
        cls, mesh: Mesh, func: Callable, constrained: bool = True
    ) -> "NodalField":
        """
        Nodal interpolation of a function of `(x, y)` on a mesh.

        For a constrained field the function is evaluated at interior nodes only, so it does not need to vanish on
        the boundary: boundary values are discarded by the interior restriction.

        Parameters
        ----------
        mesh
            The mesh whose nodes the function is sampled at.
        func
            A vectorized function `func(x, y)` of two arrays of coordinates.
        constrained
            Whether to sample interior nodes only (a Dirichlet field) or every node.

        Raises
        ------
        exc.NonFiniteSample
            If the function returns a non-finite value at a sampled node.
        """
        nodes = mesh.nodes[mesh.interior_nodes] if constrained else mesh.nodes

        values = np.asarray(func(nodes[:, 0], nodes[:, 1]), dtype="float")
        values = np.broadcast_to(values, (nodes.shape[0],)).copy()

        if not np.all(np.isfinite(values)):
            raise exc.NonFiniteSample(
                "The function being interpolated is not finite at every node of the mesh"
            )

        return cls(values=values, mesh=mesh, constrained=constrained)

    @property
    def full_values(self) -> np.ndarray:
        """
        The value of the field at every node of the mesh, with zeros re-inserted at Dirichlet nodes.
        """
        if not self.constrained:
            return self.values

        full = np.zeros(self.mesh.total_nodes)
        full[self.mesh.interior_nodes] = self.values

        return full

    def with_new_values(self, values: np.ndarray) -> "NodalField":
        return NodalField(values=values, mesh=self.mesh, constrained=self.constrained)

    def __add__(self, other: "NodalField") -> "NodalField":
        return self.with_new_values(values=self.values + other.values)

    def __sub__(self, other: "NodalField") -> "NodalField":
        return self.with_new_values(values=self.values - other.values)

    def __mul__(self, factor: float) -> "NodalField":
        return self.with_new_values(values=factor * self.values)

    __rmul__ = __mul__

    def __neg__(self) -> "NodalField":
        return self.with_new_values(values=-self.values)

    def __len__(self):
        return self.values.shape[0]


def interpolate_full(mesh: Mesh, func: Callable) -> NodalField:
    """
    The unconstrained nodal interpolant of a function at every node of a mesh, including the boundary.
    """
    return NodalField.via_function_from(mesh=mesh, func=func, constrained=False)


def project_initial(mesh: Mesh, func: Callable) -> NodalField:
    """
    Initial data for the wave equation: the nodal interpolant of a function at the interior nodes of a mesh.
    """
    return NodalField.via_function_from(mesh=mesh, func=func)
