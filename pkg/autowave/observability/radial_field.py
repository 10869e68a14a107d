import numpy as np

from autowave.geometry.side_frame import SideFrame
from autowave.observability import observability_util


class RadialField:
    def __init__(self, frame: SideFrame):
        """
        The radial vector field `X = x d/dx + y d/dy` in the frame of a side, centred on the vertex opposite that
        side.

        `X` is tangent to the two sides meeting at its centre, and on the framed side `x = ell` its normal
        component is the constant `ell`.

        Parameters
        ----------
        frame
            The frame of the side under study.
        """
        self.frame = frame

    @property
    def origin(self) -> np.ndarray:
        """
        The centre of the field, in the coordinates of the triangle. In frame coordinates it is `(0, 0)`.
        """
        return self.frame.origin

    def vectors_from(self, points: np.ndarray) -> np.ndarray:
        """
        The field at (x,y) points of the triangle, in frame components.
        """
        return self.frame.to_frame(points=points)

    def derivative_from(self, points: np.ndarray, gradients: np.ndarray) -> np.ndarray:
        """
        `Xu = x' u_x' + y' u_y'` at every point, given the (x,y) gradient of `u` there, with both the point and the
        gradient expressed in frame coordinates.
        """
        return np.sum(
            self.vectors_from(points=points)
            * self.frame.vectors_to_frame(vectors=gradients),
            axis=1,
        )

    def vertex_values_from(
        self, nodes: np.ndarray, elements: np.ndarray, field_gradients: np.ndarray
    ) -> np.ndarray:
        """
        `Xu` at the three vertices of every element of a P1 field, which represents `Xu` exactly as it is linear on
        every element.
        """
        return observability_util.radial_vertex_values_from(
            nodes=nodes,
            elements=elements,
            field_gradients=field_gradients,
            origin=np.asarray(self.origin, dtype="float"),
        )
