import numpy as np
from typing import Callable, List, Optional, Tuple

from autowave.analytic.isosceles_mode import IsoscelesMode, isosceles_triangle
from autowave.discretization.nodal_field import NodalField, project_initial
from autowave.geometry.triangle import Triangle
from autowave.mesh.mesh import Mesh

from autowave import exc

RANDOM_MODES = [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


class Transplant:
    def __init__(self, func: Callable, target: Triangle):
        """
        Carries a function of the right isosceles triangle `0 <= y <= x <= pi` onto another triangle through the
        affine map between the two, so `Transplant(func, target)(x, y) = func(A^-1 (x, y))`.

        Affine maps take the boundary onto the boundary, so a function vanishing on the isosceles triangle's
        boundary vanishes on the target's boundary.
        """
        self.func = func

        matrix, offset = isosceles_triangle().affine_map_to(other=target)

        self.inverse = np.linalg.inv(matrix)
        self.offset = offset

    def __call__(self, x, y) -> np.ndarray:

        x = np.asarray(x, dtype="float")
        y = np.asarray(y, dtype="float")

        dx = x - self.offset[0]
        dy = y - self.offset[1]

        source_x = self.inverse[0, 0] * dx + self.inverse[0, 1] * dy
        source_y = self.inverse[1, 0] * dx + self.inverse[1, 1] * dy

        return self.func(source_x, source_y)


def eigenmode_initial_data_from(
    mesh: Mesh, mode: IsoscelesMode
) -> Tuple[NodalField, NodalField]:
    """
    The initial data `u0 = 0`, `u1 = lambda phi` of the standing wave of an isosceles mode, transplanted onto the
    mesh's triangle (which leaves it unchanged on the isosceles triangle itself).
    """
    velocity = Transplant(
        func=lambda x, y: mode.lambda_ * mode.phi_from(x=x, y=y), target=mesh.triangle
    )

    return NodalField.zeros(mesh=mesh), project_initial(mesh=mesh, func=velocity)


def random_smooth_functions_from(
    seed: Optional[int], modes: Optional[List[Tuple[int, int]]] = None
) -> Tuple[Callable, Callable]:
    """
    Two random combinations of isosceles modes, for the initial displacement and velocity, with coefficients drawn
    uniformly from `[-1, 1]` by a generator seeded with `seed`.
    """
    if modes is None:
        modes = RANDOM_MODES

    modes = [IsoscelesMode(m=m, n=n) for m, n in modes]

    if len(modes) == 0:
        raise exc.EmptyModeList("Random smooth initial data needs at least one mode")

    rng = np.random.default_rng(seed)

    displacement_coefficients = rng.uniform(-1.0, 1.0, len(modes))
    velocity_coefficients = rng.uniform(-1.0, 1.0, len(modes))

    def combination_from(coefficients):
        def func(x, y):
            return sum(
                coefficient * mode.phi_from(x=x, y=y)
                for coefficient, mode in zip(coefficients, modes)
            )

        return func

    return (
        combination_from(displacement_coefficients),
        combination_from(velocity_coefficients),
    )


def random_smooth_initial_data_from(
    mesh: Mesh, seed: Optional[int], modes: Optional[List[Tuple[int, int]]] = None
) -> Tuple[NodalField, NodalField]:
    """
    Smooth random initial data on the mesh's triangle: random combinations of isosceles modes, transplanted onto
    the triangle and interpolated at its interior nodes. The same seed gives the same data on every mesh.
    """
    displacement, velocity = random_smooth_functions_from(seed=seed, modes=modes)

    return (
        project_initial(mesh=mesh, func=Transplant(func=displacement, target=mesh.triangle)),
        project_initial(mesh=mesh, func=Transplant(func=velocity, target=mesh.triangle)),
    )


def bump_from(centre: Tuple[float, float], radius: float, amplitude: float = 1.0) -> Callable:
    """
    The smooth compactly supported bump `amplitude * exp(1 - 1 / (1 - r^2 / radius^2))` for `r < radius`, zero
    elsewhere, with `r` the distance to `centre`.
    """
    if not radius > 0.0:
        raise exc.ConfigException(f"A bump needs a positive radius, got {radius}")

    def func(x, y):
        r_sq = ((np.asarray(x) - centre[0]) ** 2 + (np.asarray(y) - centre[1]) ** 2) / radius ** 2
        inside = r_sq < 1.0
        safe = np.where(inside, r_sq, 0.0)
        return np.where(inside, amplitude * np.exp(1.0 - 1.0 / (1.0 - safe)), 0.0)

    return func


def bump_initial_data_from(
    mesh: Mesh, centre: Tuple[float, float], radius: float, amplitude: float = 1.0
) -> Tuple[NodalField, NodalField]:
    """
    A bump of initial displacement released from rest. The bump is cut off by the Dirichlet condition wherever its
    support crosses the boundary.
    """
    return (
        project_initial(mesh=mesh, func=bump_from(centre=centre, radius=radius, amplitude=amplitude)),
        NodalField.zeros(mesh=mesh),
    )
