import numpy as np
from typing import Dict, Optional, Tuple, Union

from autoconf import conf

from autowave.geometry import geometry_util

from autowave import exc

SIDE_LABELS = ("A", "B", "C")

ACUTE = "acute"
RIGHT = "right"
OBTUSE = "obtuse"


class Triangle:
    def __init__(
        self,
        vertices: Union[np.ndarray, list, tuple],
        side_labels: Optional[Dict[str, int]] = None,
    ):
        """
        A triangular region of the plane, the domain on which the wave equation is simulated and observed.

        The vertices are stored counterclockwise. If they are input clockwise the second and third vertices are
        swapped, and the side labels are swapped with them so that every label stays attached to the same
        geometric side.

        Sides are labelled `A`, `B` and `C`, and `side_labels` maps every label to the index of the vertex opposite
        that side in the stored (counterclockwise) vertex array. By default side `A` is opposite the first input
        vertex, `B` the second and `C` the third.

        Parameters
        ----------
        vertices
            The three (x,y) vertices of the triangle.
        side_labels
            Mapping from side label to the index of the opposite vertex, in the input vertex order.

        Raises
        ------
        exc.CollinearVertices
            If twice the signed area is below `1e-12` times the squared diameter.
        """
        vertices = np.asarray(vertices, dtype="float")

        if vertices.shape != (3, 2):
            raise exc.GeometryException(
                f"A triangle needs three (x,y) vertices, got an array of shape {vertices.shape}"
            )

        if not np.all(np.isfinite(vertices)):
            raise exc.GeometryException("Triangle vertices must be finite")

        side_labels = dict(side_labels or {label: index for index, label in enumerate(SIDE_LABELS)})

        diameter = max(
            np.linalg.norm(vertices[i] - vertices[j])
            for i, j in ((0, 1), (1, 2), (2, 0))
        )

        twice_area = geometry_util.twice_signed_area_from(*vertices)

        tolerance = conf.instance["general"]["tolerances"]["collinear"]

        if diameter == 0.0 or abs(twice_area) < float(tolerance) * diameter ** 2:
            raise exc.CollinearVertices(
                f"The vertices {vertices.tolist()} are collinear (twice signed area {twice_area})"
            )

        if twice_area < 0.0:
            vertices = vertices[[0, 2, 1]]
            swap = {0: 0, 1: 2, 2: 1}
            side_labels = {label: swap[index] for label, index in side_labels.items()}

        self.vertices = vertices
        self.side_labels = side_labels

    @classmethod
    def from_vertices(cls, p0, p1, p2) -> "Triangle":
        """
        Create a triangle from three (x,y) points, enforcing counterclockwise orientation.
        """
        return cls(vertices=[p0, p1, p2])

    def __repr__(self):
        return f"Triangle({self.vertices.tolist()})"

    def side_index(self, side: str) -> int:
        """
        The index of the vertex opposite the input side label.
        """
        try:
            return self.side_labels[side]
        except KeyError:
            raise exc.InvalidSide(
                f"Side {side!r} is not one of the labels {sorted(self.side_labels)}"
            )

    def side_label(self, side_index: int) -> str:
        for label, index in self.side_labels.items():
            if index == side_index:
                return label

        raise exc.InvalidSide(f"No side is opposite vertex {side_index}")

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(sorted(self.side_labels))

    @property
    def area(self) -> float:
        return 0.5 * geometry_util.twice_signed_area_from(*self.vertices)

    @property
    def side_lengths(self) -> np.ndarray:
        """
        The side lengths indexed by opposite vertex.
        """
        return geometry_util.side_lengths_from(vertices=self.vertices)

    def side_length(self, side: str) -> float:
        return float(self.side_lengths[self.side_index(side)])

    def side_endpoints(self, side: str) -> Tuple[np.ndarray, np.ndarray]:
        """
        The two endpoints of a side, ordered counterclockwise around the triangle.
        """
        index = self.side_index(side)
        return self.vertices[(index + 1) % 3], self.vertices[(index + 2) % 3]

    def opposite_vertex(self, side: str) -> np.ndarray:
        return self.vertices[self.side_index(side)]

    def outward_normal(self, side: str) -> np.ndarray:
        _, normal = geometry_util.side_tangent_and_normal_from(
            vertices=self.vertices, side_index=self.side_index(side)
        )
        return normal

    def altitude(self, side: str) -> float:
        """
        The perpendicular distance from the line containing a side to the opposite vertex, `2 * area / |side|`.
        """
        return 2.0 * self.area / self.side_length(side)

    @property
    def longest_side(self) -> float:
        return float(np.max(self.side_lengths))

    @property
    def classification(self) -> str:
        """
        Whether the triangle is acute, right or obtuse, from the sign of the cosine of its largest angle.
        """
        cosine = geometry_util.largest_angle_cosine_from(side_lengths=self.side_lengths)

        tolerance = float(conf.instance["general"]["tolerances"]["right_angle"])

        if cosine > tolerance:
            return ACUTE
        if cosine < -tolerance:
            return OBTUSE
        return RIGHT

    def contains(self, points: np.ndarray, tolerance: float = 1.0e-12) -> np.ndarray:
        """
        For every (x,y) point, whether it lies in the closed triangle, allowing points a distance
        `tolerance * longest_side` outside a side.
        """
        points = np.atleast_2d(np.asarray(points, dtype="float"))

        inside = np.full(points.shape[0], True)

        for index in range(3):
            p = self.vertices[(index + 1) % 3]
            _, normal = geometry_util.side_tangent_and_normal_from(
                vertices=self.vertices, side_index=index
            )
            inside &= (points - p) @ normal <= tolerance * self.longest_side

        return inside

    def affine_map_to(self, other: "Triangle"):
        """
        The affine map `x -> matrix @ x + offset` taking the vertices of this triangle onto the vertices of `other`,
        in stored order.
        """
        return geometry_util.affine_map_from(source=self.vertices, target=other.vertices)
