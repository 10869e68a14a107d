import numpy as np

from autoconf import conf

from autowave.geometry import geometry_util
from autowave.geometry.triangle import Triangle, ACUTE, RIGHT, OBTUSE


class SideFrame:
    def __init__(
        self,
        side: str,
        rotation: np.ndarray,
        origin: np.ndarray,
        a1: float,
        a2: float,
        ell: float,
        side_length: float,
    ):
        """
        The coordinate frame in which a chosen side of a triangle is studied: the vertex opposite the side sits at
        the origin and the side lies on the vertical line `x = ell`, where `ell` is the altitude onto the side.

        In frame coordinates the side occupies `y` in `[-a1, a2]`. When the foot of the altitude lies on the side
        both offsets are non-negative; when it falls outside the side (one of the two base angles is obtuse) exactly
        one offset is negative. The two cases therefore share every formula, only the sign of an offset changes.

        A frame point is `rotation @ (p - origin)` for a point `p` in the coordinates of the triangle.

        Parameters
        ----------
        side
            The label of the framed side.
        rotation
            The (2, 2) rotation whose rows are the outward normal and the counterclockwise tangent of the side.
        origin
            The vertex opposite the side, in triangle coordinates.
        a1
            Minus the lowest frame `y` coordinate of the side.
        a2
            The highest frame `y` coordinate of the side.
        ell
            The altitude onto the side.
        side_length
            The length of the side, equal to `a1 + a2`.
        """
        self.side = side
        self.rotation = rotation
        self.origin = origin
        self.a1 = a1
        self.a2 = a2
        self.ell = ell
        self.side_length = side_length

    @classmethod
    def from_triangle(cls, triangle: Triangle, side: str) -> "SideFrame":
        index = triangle.side_index(side)

        tangent, normal = geometry_util.side_tangent_and_normal_from(
            vertices=triangle.vertices, side_index=index
        )

        origin = triangle.vertices[index]
        start, end = triangle.side_endpoints(side)

        rotation = np.vstack([normal, tangent])

        ell = float((start - origin) @ normal)
        y_lo = float((start - origin) @ tangent)
        y_hi = float((end - origin) @ tangent)

        return SideFrame(
            side=side,
            rotation=rotation,
            origin=origin.copy(),
            a1=-y_lo,
            a2=y_hi,
            ell=ell,
            side_length=triangle.side_length(side),
        )

    def to_frame(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype="float")
        return (points - self.origin) @ self.rotation.T

    def from_frame(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype="float")
        return points @ self.rotation + self.origin

    def vectors_to_frame(self, vectors: np.ndarray) -> np.ndarray:
        """
        Rotate (x,y) vectors, for example gradients, into the frame. Vectors are not translated.
        """
        return np.asarray(vectors, dtype="float") @ self.rotation.T

    def vertices_in_frame(self, triangle: Triangle) -> np.ndarray:
        return self.to_frame(triangle.vertices)

    @property
    def classification(self) -> str:
        """
        `obtuse` if the foot of the altitude falls outside the side (a negative offset), `right` if it lands on an
        endpoint and `acute` otherwise.
        """
        tolerance = float(conf.instance["general"]["tolerances"]["right_angle"])

        smallest = min(self.a1, self.a2)

        if smallest < -tolerance * self.side_length:
            return OBTUSE
        if smallest <= tolerance * self.side_length:
            return RIGHT
        return ACUTE

    @property
    def uses_acute_frame(self) -> bool:
        """
        Whether both offsets are non-negative, the configuration of an acute triangle in which the side's radial
        field argument applies unchanged.
        """
        return self.classification != OBTUSE

    def __repr__(self):
        return (
            f"SideFrame(side={self.side}, ell={self.ell}, a1={self.a1}, a2={self.a2}, "
            f"classification={self.classification})"
        )
