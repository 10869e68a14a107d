import logging
import numpy as np
import os
from os import path

from autoconf import conf

from autowave.geometry import geometry_util
from autowave.geometry.triangle import Triangle
from autowave.mesh import mesh_util

from autowave import exc

logger = logging.getLogger(__name__)

logger.setLevel(level="INFO")


class BoundaryRestriction:
    def __init__(
        self,
        side: str,
        edges: np.ndarray,
        elements: np.ndarray,
        lengths: np.ndarray,
        normals: np.ndarray,
        midpoints: np.ndarray,
    ):
        """
        The boundary edges of a mesh which lie on one side of its triangle, ordered along the side in the
        counterclockwise direction.

        Parameters
        ----------
        side
            The label of the side.
        edges
            The (total_edges, 2) directed node indexes of every edge.
        elements
            The index of the element adjacent to every edge.
        lengths
            The length of every edge.
        normals
            The (total_edges, 2) outward unit normal of every edge.
        midpoints
            The (total_edges, 2) midpoint of every edge.
        """
        self.side = side
        self.edges = edges
        self.elements = elements
        self.lengths = lengths
        self.normals = normals
        self.midpoints = midpoints

    @property
    def total_edges(self) -> int:
        return self.edges.shape[0]

    @property
    def total_length(self) -> float:
        return float(np.sum(self.lengths))


class Mesh:
    def __init__(
        self,
        triangle: Triangle,
        level: int,
        nodes: np.ndarray,
        elements: np.ndarray,
        boundary_edges: np.ndarray,
        boundary_sides: np.ndarray,
        boundary_elements: np.ndarray,
        interior_node_mask: np.ndarray,
    ):
        """
        A conforming triangulation of a `Triangle`, whose boundary edges are tagged by the geometric side they lie on.

        A `Mesh` is usually created via `Mesh.uniform`, which cuts every side into `2 ** level` intervals and
        fills the triangle with the resulting barycentric lattice. Every level of refinement splits every element
        into four similar children, so meshes of successive levels are nested.

        Parameters
        ----------
        triangle
            The triangle the mesh tiles.
        level
            The refinement depth, the mesh has `4 ** level` elements.
        nodes
            The (total_nodes, 2) node coordinates.
        elements
            The (total_elements, 3) counterclockwise node indexes of every element.
        boundary_edges
            The (total_boundary_edges, 2) directed node indexes of every boundary edge.
        boundary_sides
            The side label of every boundary edge.
        boundary_elements
            The element adjacent to every boundary edge.
        interior_node_mask
            Whether every node lies in the interior of the triangle (and is therefore not constrained by the
            Dirichlet condition).
        """
        self.triangle = triangle
        self.level = level
        self.nodes = nodes
        self.elements = elements
        self.boundary_edges = boundary_edges
        self.boundary_sides = boundary_sides
        self.boundary_elements = boundary_elements
        self.interior_node_mask = interior_node_mask

        edge_lengths = mesh_util.element_edge_lengths_from(
            nodes=self.nodes, elements=self.elements
        )

        self.h_min = float(np.min(edge_lengths))
        self.h_max = float(np.max(edge_lengths))

    @classmethod
    def uniform(cls, triangle: Triangle, level: int) -> "Mesh":
        """
        Create the structured mesh of a triangle obtained by `level` steps of uniform 4-way refinement.

        Parameters
        ----------
        triangle
            The triangle which is meshed.
        level
            The number of refinement steps, from 0 (the triangle itself) up to the `[mesh] max_level` config value.

        Raises
        ------
        exc.LevelTooLarge
            If the level exceeds the configured maximum or is negative.
        """
        max_level = int(conf.instance["general"]["mesh"]["max_level"])

        if level < 0 or level > max_level:
            raise exc.LevelTooLarge(
                f"Mesh level {level} is outside the supported range 0 to {max_level}"
            )

        divisions = 2 ** level

        nodes = mesh_util.lattice_nodes_from(
            vertices=triangle.vertices, divisions=divisions
        )
        elements = mesh_util.lattice_elements_from(divisions=divisions)
        interior_node_mask = mesh_util.lattice_interior_mask_from(divisions=divisions)

        boundary_edges, boundary_elements, _ = mesh_util.boundary_edges_from(
            elements=elements
        )

        boundary_edges, boundary_sides, boundary_elements = cls.tag_boundary_edges(
            triangle=triangle,
            nodes=nodes,
            boundary_edges=boundary_edges,
            boundary_elements=boundary_elements,
        )

        logger.info(
            f"Mesh level {level}: {nodes.shape[0]} nodes, {elements.shape[0]} elements, "
            f"{boundary_edges.shape[0]} boundary edges"
        )

        return Mesh(
            triangle=triangle,
            level=level,
            nodes=nodes,
            elements=elements,
            boundary_edges=boundary_edges,
            boundary_sides=boundary_sides,
            boundary_elements=boundary_elements,
            interior_node_mask=interior_node_mask,
        )

    @staticmethod
    def tag_boundary_edges(
        triangle: Triangle,
        nodes: np.ndarray,
        boundary_edges: np.ndarray,
        boundary_elements: np.ndarray,
    ):
        """
        Assign every boundary edge to the side whose line is nearest its midpoint, and order the edges side by side
        (in label order) and, within a side, by position along the side's counterclockwise tangent.

        Raises
        ------
        exc.MeshException
            If an edge midpoint lies further than `side_distance * L` from every side line.
        """
        tolerance = float(conf.instance["general"]["tolerances"]["side_distance"])

        midpoints = 0.5 * (nodes[boundary_edges[:, 0]] + nodes[boundary_edges[:, 1]])

        distances = np.zeros((midpoints.shape[0], 3))

        for index in range(3):
            distances[:, index] = geometry_util.point_to_line_distances_from(
                points=midpoints,
                line_start=triangle.vertices[(index + 1) % 3],
                line_end=triangle.vertices[(index + 2) % 3],
            )

        nearest = np.argmin(distances, axis=1)

        if np.any(
            distances[np.arange(midpoints.shape[0]), nearest]
            > tolerance * triangle.longest_side
        ):
            raise exc.MeshException(
                "A boundary edge of the mesh does not lie on a side of its triangle"
            )

        edge_list = []
        side_list = []
        element_list = []

        for label in triangle.labels:

            index = triangle.side_index(label)
            on_side = np.where(nearest == index)[0]

            tangent, _ = geometry_util.side_tangent_and_normal_from(
                vertices=triangle.vertices, side_index=index
            )

            order = on_side[np.argsort(midpoints[on_side] @ tangent, kind="stable")]

            edge_list.append(boundary_edges[order])
            element_list.append(boundary_elements[order])
            side_list.append(np.full(order.shape[0], label))

        return (
            np.concatenate(edge_list, axis=0),
            np.concatenate(side_list),
            np.concatenate(element_list),
        )

    @property
    def total_nodes(self) -> int:
        return self.nodes.shape[0]

    @property
    def total_elements(self) -> int:
        return self.elements.shape[0]

    @property
    def interior_nodes(self) -> np.ndarray:
        """
        The indexes of the nodes in the interior of the triangle, in node order.
        """
        return np.where(self.interior_node_mask)[0]

    @property
    def total_interior_nodes(self) -> int:
        return int(np.sum(self.interior_node_mask))

    @property
    def element_areas(self) -> np.ndarray:
        return mesh_util.element_areas_from(nodes=self.nodes, elements=self.elements)

    def matches(self, other: "Mesh") -> bool:
        """
        Whether another mesh has the same triangle, nodes and elements, so that nodal values of one are nodal values
        of the other.
        """
        if other is self:
            return True

        return (
            self.level == other.level
            and np.array_equal(self.triangle.vertices, other.triangle.vertices)
            and np.array_equal(self.nodes, other.nodes)
            and np.array_equal(self.elements, other.elements)
        )

    def boundary_restriction_from(self, side: str) -> BoundaryRestriction:
        """
        The boundary edges lying on a side of the triangle, ordered along the side, with their lengths, outward unit
        normals and midpoints.

        The normal of every edge is its (counterclockwise) direction rotated clockwise by 90 degrees, which points
        out of the domain.
        """
        self.triangle.side_index(side)

        on_side = self.boundary_sides == side

        edges = self.boundary_edges[on_side]

        start = self.nodes[edges[:, 0]]
        end = self.nodes[edges[:, 1]]

        vectors = end - start
        lengths = np.sqrt(np.sum(vectors ** 2, axis=1))

        normals = np.column_stack([vectors[:, 1], -vectors[:, 0]]) / lengths[:, None]

        return BoundaryRestriction(
            side=side,
            edges=edges,
            elements=self.boundary_elements[on_side],
            lengths=lengths,
            normals=normals,
            midpoints=0.5 * (start + end),
        )

    def output_to_text(self, file_path: str, overwrite: bool = False):
        """
        Output the mesh to a text file holding three tables, each introduced by a `#` header line:

        - `# nodes`: index, x, y, interior (1 or 0).
        - `# elements`: index, node_0, node_1, node_2, area.
        - `# boundary`: index, node_0, node_1, side, element, length.

        Floats are written with 17 significant digits.
        """
        file_dir = os.path.split(file_path)[0]

        if file_dir and not path.exists(file_dir):
            os.makedirs(file_dir)

        if not overwrite and path.exists(file_path):
            raise FileExistsError(
                f"The file {file_path} already exists. Set overwrite=True to overwrite this file"
            )

        areas = self.element_areas

        with open(file_path, "w+") as f:

            f.write(f"# nodes {self.total_nodes}\n")
            for index, (node, interior) in enumerate(
                zip(self.nodes, self.interior_node_mask)
            ):
                f.write(f"{index} {node[0]:.17g} {node[1]:.17g} {int(interior)}\n")

            f.write(f"# elements {self.total_elements}\n")
            for index, (element, area) in enumerate(zip(self.elements, areas)):
                f.write(
                    f"{index} {element[0]} {element[1]} {element[2]} {area:.17g}\n"
                )

            f.write(f"# boundary {self.boundary_edges.shape[0]}\n")
            for index, (edge, side, element) in enumerate(
                zip(self.boundary_edges, self.boundary_sides, self.boundary_elements)
            ):
                length = np.linalg.norm(self.nodes[edge[1]] - self.nodes[edge[0]])
                f.write(
                    f"{index} {edge[0]} {edge[1]} {side} {element} {length:.17g}\n"
                )

        logger.info(f"Mesh written to {file_path}")
