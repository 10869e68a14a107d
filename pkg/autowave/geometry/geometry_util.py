import numpy as np


def twice_signed_area_from(p0: np.ndarray, p1: np.ndarray, p2: np.ndarray) -> float:
    """
    Returns twice the signed area of the triangle (p0, p1, p2), which is positive when the vertices are ordered
    counterclockwise.
    """
    return float(
        (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1])
    )


def side_lengths_from(vertices: np.ndarray) -> np.ndarray:
    """
    The length of each side of a triangle, where entry `k` is the length of the side opposite vertex `k`.
    """
    return np.array(
        [
            np.linalg.norm(vertices[(k + 2) % 3] - vertices[(k + 1) % 3])
            for k in range(3)
        ]
    )


def side_tangent_and_normal_from(vertices: np.ndarray, side_index: int):
    """
    For the side opposite vertex `side_index` of a counterclockwise triangle, return the unit tangent (pointing
    from vertex `side_index + 1` to vertex `side_index + 2`) and the outward unit normal.

    For a counterclockwise boundary traversal the interior lies to the left, so the outward normal is the tangent
    rotated clockwise by 90 degrees.
    """
    p = vertices[(side_index + 1) % 3]
    q = vertices[(side_index + 2) % 3]

    tangent = (q - p) / np.linalg.norm(q - p)
    normal = np.array([tangent[1], -tangent[0]])

    return tangent, normal


def point_to_line_distances_from(
    points: np.ndarray, line_start: np.ndarray, line_end: np.ndarray
) -> np.ndarray:
    """
    The perpendicular distance of every (x,y) point in `points` to the infinite line through `line_start` and
    `line_end`.
    """
    points = np.atleast_2d(points)
    direction = line_end - line_start
    length = np.linalg.norm(direction)

    relative = points - line_start

    return np.abs(relative[:, 0] * direction[1] - relative[:, 1] * direction[0]) / length


def largest_angle_cosine_from(side_lengths: np.ndarray) -> float:
    """
    The cosine of the largest interior angle of a triangle with the input side lengths, via the law of cosines
    applied to the longest side.
    """
    c_index = int(np.argmax(side_lengths))
    c = side_lengths[c_index]
    a, b = np.delete(side_lengths, c_index)

    return float((a ** 2 + b ** 2 - c ** 2) / (2.0 * a * b))


def affine_map_from(source: np.ndarray, target: np.ndarray):
    """
    The affine map `x -> matrix @ x + offset` taking the three vertices of `source` onto the three vertices of
    `target` in order.

    Parameters
    ----------
    source
        The (3, 2) vertices of the triangle the map starts from.
    target
        The (3, 2) vertices of the triangle the map ends on.
    """
    source_edges = np.column_stack([source[1] - source[0], source[2] - source[0]])
    target_edges = np.column_stack([target[1] - target[0], target[2] - target[0]])

    matrix = target_edges @ np.linalg.inv(source_edges)
    offset = target[0] - matrix @ source[0]

    return matrix, offset
