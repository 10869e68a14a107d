import numpy as np
from scipy import sparse

from autowave import numba_util


@numba_util.jit()
def element_gradients_from(nodes: np.ndarray, elements: np.ndarray):
    """
    Returns the constant gradients of the three linear barycentric basis functions on every element, together with
    the element areas.

    For a counterclockwise element with vertices `(x_k, y_k)` and area `A`, the gradient of the basis function of
    local vertex `i` is `(y_{i+1} - y_{i+2}, x_{i+2} - x_{i+1}) / (2A)` with indexes taken modulo 3.

    Parameters
    ----------
    nodes
        The (total_nodes, 2) node coordinates.
    elements
        The (total_elements, 3) counterclockwise node indexes of every element.

    Returns
    -------
    gradients
        The (total_elements, 3, 2) basis gradients, indexed by element, local vertex and (x,y) component.
    areas
        The area of every element.
    """
    gradients = np.zeros((elements.shape[0], 3, 2))
    areas = np.zeros(elements.shape[0])

    for e in range(elements.shape[0]):

        x0 = nodes[elements[e, 0], 0]
        y0 = nodes[elements[e, 0], 1]
        x1 = nodes[elements[e, 1], 0]
        y1 = nodes[elements[e, 1], 1]
        x2 = nodes[elements[e, 2], 0]
        y2 = nodes[elements[e, 2], 1]

        twice_area = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)

        areas[e] = 0.5 * twice_area

        gradients[e, 0, 0] = (y1 - y2) / twice_area
        gradients[e, 0, 1] = (x2 - x1) / twice_area
        gradients[e, 1, 0] = (y2 - y0) / twice_area
        gradients[e, 1, 1] = (x0 - x2) / twice_area
        gradients[e, 2, 0] = (y0 - y1) / twice_area
        gradients[e, 2, 1] = (x1 - x0) / twice_area

    return gradients, areas


@numba_util.jit()
def element_stiffness_matrices_from(gradients: np.ndarray, areas: np.ndarray) -> np.ndarray:
    """
    The local P1 stiffness matrix `K_e[i, j] = area * grad_i . grad_j` of every element.
    """
    matrices = np.zeros((areas.shape[0], 3, 3))

    for e in range(areas.shape[0]):
        for i in range(3):
            for j in range(3):
                matrices[e, i, j] = areas[e] * (
                    gradients[e, i, 0] * gradients[e, j, 0]
                    + gradients[e, i, 1] * gradients[e, j, 1]
                )

    return matrices


@numba_util.jit()
def element_mass_matrices_from(areas: np.ndarray, lumped: bool) -> np.ndarray:
    """
    The local P1 mass matrix of every element.

    The consistent mass is `(area / 12) * [[2, 1, 1], [1, 2, 1], [1, 1, 2]]`, the exact integral of the products of
    barycentric basis functions. The lumped mass is its row-sum diagonal, `area / 3` per vertex.
    """
    matrices = np.zeros((areas.shape[0], 3, 3))

    for e in range(areas.shape[0]):
        for i in range(3):
            if lumped:
                matrices[e, i, i] = areas[e] / 3.0
            else:
                for j in range(3):
                    if i == j:
                        matrices[e, i, j] = areas[e] / 6.0
                    else:
                        matrices[e, i, j] = areas[e] / 12.0

    return matrices


def sparse_operator_from(
    elements: np.ndarray, local_matrices: np.ndarray, total_nodes: int
) -> sparse.csr_matrix:
    """
    Sum the local matrices of every element into a global sparse operator.

    Entries are listed element by element in a fixed order and duplicates are summed during the COO to CSR
    conversion, so the assembled operator is bit-identical between runs.
    """
    rows = np.repeat(elements, 3, axis=1).reshape(-1)
    cols = np.tile(elements, (1, 3)).reshape(-1)

    operator = sparse.coo_matrix(
        (local_matrices.reshape(-1), (rows, cols)), shape=(total_nodes, total_nodes)
    ).tocsr()

    operator.sum_duplicates()
    operator.sort_indices()

    return operator


def restricted_operator_from(
    operator: sparse.csr_matrix, interior_nodes: np.ndarray
) -> sparse.csr_matrix:
    """
    Eliminate the Dirichlet nodes of a global operator by keeping only the rows and columns of interior nodes.
    """
    return operator[interior_nodes, :][:, interior_nodes].tocsr()


@numba_util.jit()
def field_gradients_from(
    values: np.ndarray, elements: np.ndarray, gradients: np.ndarray
) -> np.ndarray:
    """
    The constant (x,y) gradient on every element of the P1 field with the input values at every node.
    """
    field_gradients = np.zeros((elements.shape[0], 2))

    for e in range(elements.shape[0]):
        for k in range(3):
            value = values[elements[e, k]]
            field_gradients[e, 0] += value * gradients[e, k, 0]
            field_gradients[e, 1] += value * gradients[e, k, 1]

    return field_gradients


@numba_util.jit()
def element_bilinear_mass_from(
    values_0: np.ndarray, values_1: np.ndarray, areas: np.ndarray
) -> float:
    """
    The integral of the product of two fields which are linear on every element, given their values at the local
    vertices of every element as (total_elements, 3) arrays, using the consistent element mass.
    """
    total = 0.0

    for e in range(areas.shape[0]):
        for i in range(3):
            for j in range(3):
                if i == j:
                    weight = areas[e] / 6.0
                else:
                    weight = areas[e] / 12.0
                total += weight * values_0[e, i] * values_1[e, j]

    return total
