import numpy as np

from autowave import numba_util


@numba_util.jit()
def lattice_index_from(i: int, j: int, divisions: int) -> int:
    """
    The node index of lattice point `(i, j)` in a barycentric lattice with `divisions` intervals per side.

    Nodes are numbered row-major: row `i` holds the `divisions + 1 - i` nodes with `j = 0, ..., divisions - i`, and
    starts at the offset `i * (divisions + 1) - i * (i - 1) / 2`.
    """
    return i * (divisions + 1) - (i * (i - 1)) // 2 + j


@numba_util.jit()
def total_nodes_from(divisions: int) -> int:
    return (divisions + 1) * (divisions + 2) // 2


@numba_util.jit()
def lattice_nodes_from(vertices: np.ndarray, divisions: int) -> np.ndarray:
    """
    Returns the (x,y) coordinates of every node of the barycentric lattice of a triangle, where node `(i, j)` is
    at `v0 + (j / N) * (v1 - v0) + (i / N) * (v2 - v0)` for `N = divisions`.

    Parameters
    ----------
    vertices
        The (3, 2) counterclockwise vertices of the triangle.
    divisions
        The number of intervals each side is cut into, `2 ** level` for a uniformly refined mesh.

    Returns
    -------
    ndarray
        The (total_nodes, 2) node coordinates in row-major lattice order.
    """
    nodes = np.zeros((total_nodes_from(divisions), 2))

    e1_x = vertices[1, 0] - vertices[0, 0]
    e1_y = vertices[1, 1] - vertices[0, 1]
    e2_x = vertices[2, 0] - vertices[0, 0]
    e2_y = vertices[2, 1] - vertices[0, 1]

    index = 0

    for i in range(divisions + 1):
        for j in range(divisions + 1 - i):

            s = j / divisions
            r = i / divisions

            nodes[index, 0] = vertices[0, 0] + s * e1_x + r * e2_x
            nodes[index, 1] = vertices[0, 1] + s * e1_y + r * e2_y

            index += 1

    return nodes


@numba_util.jit()
def lattice_interior_mask_from(divisions: int) -> np.ndarray:
    """
    Whether every lattice node lies strictly inside the triangle, i.e. `i >= 1`, `j >= 1` and `i + j <= N - 1`.
    """
    mask = np.zeros(total_nodes_from(divisions), dtype=np.bool_)

    index = 0

    for i in range(divisions + 1):
        for j in range(divisions + 1 - i):
            if i >= 1 and j >= 1 and i + j <= divisions - 1:
                mask[index] = True
            index += 1

    return mask


@numba_util.jit()
def lattice_elements_from(divisions: int) -> np.ndarray:
    """
    Returns the node indexes of every element of the barycentric lattice, counterclockwise.

    Each row `i` of the lattice is a strip of `N - i` upward elements `(i,j), (i,j+1), (i+1,j)` interleaved with
    `N - i - 1` downward elements `(i,j+1), (i+1,j+1), (i+1,j)`, giving `N ** 2` elements in total.
    """
    elements = np.zeros((divisions * divisions, 3), dtype=np.int64)

    index = 0

    for i in range(divisions):
        for j in range(divisions - i):

            elements[index, 0] = lattice_index_from(i, j, divisions)
            elements[index, 1] = lattice_index_from(i, j + 1, divisions)
            elements[index, 2] = lattice_index_from(i + 1, j, divisions)

            index += 1

            if j < divisions - i - 1:

                elements[index, 0] = lattice_index_from(i, j + 1, divisions)
                elements[index, 1] = lattice_index_from(i + 1, j + 1, divisions)
                elements[index, 2] = lattice_index_from(i + 1, j, divisions)

                index += 1

    return elements


@numba_util.jit()
def element_areas_from(nodes: np.ndarray, elements: np.ndarray) -> np.ndarray:
    """
    The (positive) area of every counterclockwise element.
    """
    areas = np.zeros(elements.shape[0])

    for e in range(elements.shape[0]):

        x0 = nodes[elements[e, 0], 0]
        y0 = nodes[elements[e, 0], 1]
        x1 = nodes[elements[e, 1], 0]
        y1 = nodes[elements[e, 1], 1]
        x2 = nodes[elements[e, 2], 0]
        y2 = nodes[elements[e, 2], 1]

        areas[e] = 0.5 * ((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0))

    return areas


@numba_util.jit()
def element_edge_lengths_from(nodes: np.ndarray, elements: np.ndarray) -> np.ndarray:
    """
    The lengths of the three edges of every element, where column `k` is the edge opposite local vertex `k`.
    """
    lengths = np.zeros((elements.shape[0], 3))

    for e in range(elements.shape[0]):
        for k in range(3):

            a = elements[e, (k + 1) % 3]
            b = elements[e, (k + 2) % 3]

            lengths[e, k] = np.sqrt(
                (nodes[b, 0] - nodes[a, 0]) ** 2 + (nodes[b, 1] - nodes[a, 1]) ** 2
            )

    return lengths


def boundary_edges_from(elements: np.ndarray):
    """
    Find every boundary edge of a conforming triangulation, as the edges which belong to exactly one element.

    Every element contributes its three directed edges `(n0, n1)`, `(n1, n2)`, `(n2, n0)`. An edge shared by two
    elements appears once in each direction, so after sorting every edge's node pair an interior edge is counted
    twice and a boundary edge once. Boundary edges keep the direction of their element, which for counterclockwise
    elements is the counterclockwise direction around the domain.

    Parameters
    ----------
    elements
        The (total_elements, 3) counterclockwise node indexes of every element.

    Returns
    -------
    edges
        The (total_boundary_edges, 2) directed node pairs of the boundary edges.
    adjacent_elements
        The index of the unique element each boundary edge belongs to.
    edge_counts
        The number of elements sharing every distinct (sorted) edge of the mesh, which is 1 or 2 for a conforming
        mesh.
    """
    directed = np.concatenate(
        [elements[:, [0, 1]], elements[:, [1, 2]], elements[:, [2, 0]]], axis=0
    )
    owners = np.tile(np.arange(elements.shape[0]), 3)

    keys = np.sort(directed, axis=1)

    _, inverse, counts = np.unique(
        keys, axis=0, return_inverse=True, return_counts=True
    )

    inverse = np.asarray(inverse).reshape(-1)

    is_boundary = counts[inverse] == 1

    return directed[is_boundary], owners[is_boundary], counts
