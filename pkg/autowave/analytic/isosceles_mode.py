import numpy as np
from typing import Tuple

from autowave.analytic import quadrature_util
from autowave.geometry.triangle import Triangle

from autowave import exc


def isosceles_triangle() -> Triangle:
    """
    The right isosceles triangle `0 <= y <= x <= pi`, with side `A` the leg `x = pi`, side `B` the hypotenuse
    `y = x` and side `C` the leg `y = 0`.
    """
    return Triangle(vertices=[(0.0, 0.0), (np.pi, 0.0), (np.pi, np.pi)])


class IsoscelesMode:
    def __init__(self, m: int, n: int):
        """
        A Dirichlet eigenfunction of the right isosceles triangle `0 <= y <= x <= pi`,

            phi(x, y) = (2 / pi) (sin(m x) sin(n y) - sin(n x) sin(m y))

        with eigenvalue `lambda^2 = m^2 + n^2` and unit L2 norm on the triangle. The standing wave
        `u(t, x, y) = sin(lambda t) phi(x, y)` solves the wave equation with `u(0) = 0` and `u_t(0) = lambda phi`,
        and has energy `lambda^2`.

        Parameters
        ----------
        m, n
            Distinct positive integers labelling the mode.
        """
        m = int(m)
        n = int(n)

        if m < 1 or n < 1 or m == n:
            raise exc.ConfigException(
                f"An isosceles mode needs distinct positive integers, got (m, n) = ({m}, {n})"
            )

        self.m = m
        self.n = n
        self.triangle = isosceles_triangle()

    def __repr__(self):
        return f"IsoscelesMode(m={self.m}, n={self.n})"

    @property
    def normalization(self) -> float:
        return 2.0 / np.pi

    @property
    def lambda_sq(self) -> float:
        return float(self.m ** 2 + self.n ** 2)

    @property
    def lambda_(self) -> float:
        return float(np.sqrt(self.lambda_sq))

    @property
    def energy(self) -> float:
        return self.lambda_sq

    def check_in_domain(self, x: np.ndarray, y: np.ndarray):

        points = np.column_stack([np.ravel(x), np.ravel(y)])

        if not np.all(self.triangle.contains(points=points, tolerance=1.0e-12)):
            raise exc.OutsideDomain(
                "An isosceles mode is only defined on the triangle 0 <= y <= x <= pi"
            )

    def phi_from(self, x, y) -> np.ndarray:
        m, n = self.m, self.n

        return self.normalization * (
            np.sin(m * x) * np.sin(n * y) - np.sin(n * x) * np.sin(m * y)
        )

    def gradient_from(self, x, y) -> Tuple[np.ndarray, np.ndarray]:
        """
        The closed-form (x,y) partial derivatives of `phi`.
        """
        m, n = self.m, self.n

        phi_x = self.normalization * (
            m * np.cos(m * x) * np.sin(n * y) - n * np.cos(n * x) * np.sin(m * y)
        )
        phi_y = self.normalization * (
            n * np.sin(m * x) * np.cos(n * y) - m * np.sin(n * x) * np.cos(m * y)
        )

        return phi_x, phi_y

    def laplacian_from(self, x, y) -> np.ndarray:
        """
        The closed-form Laplacian of `phi`, summing its two second derivatives term by term.
        """
        m, n = self.m, self.n

        phi_xx = self.normalization * (
            -(m ** 2) * np.sin(m * x) * np.sin(n * y)
            + n ** 2 * np.sin(n * x) * np.sin(m * y)
        )
        phi_yy = self.normalization * (
            -(n ** 2) * np.sin(m * x) * np.sin(n * y)
            + m ** 2 * np.sin(n * x) * np.sin(m * y)
        )

        return phi_xx + phi_yy

    def mode_eval(self, t: float, x, y):
        """
        Evaluate the standing wave `u = sin(lambda t) phi` at time `t` and points `(x, y)` of the triangle.

        Returns
        -------
        u
            The displacement.
        u_t
            The velocity `lambda cos(lambda t) phi`.
        gradient
            The (x,y) gradient `sin(lambda t) grad phi`, as a tuple of two arrays.

        Raises
        ------
        exc.OutsideDomain
            If a point lies outside the closed triangle.
        """
        x = np.asarray(x, dtype="float")
        y = np.asarray(y, dtype="float")

        self.check_in_domain(x=x, y=y)

        phi = self.phi_from(x=x, y=y)
        phi_x, phi_y = self.gradient_from(x=x, y=y)

        sine = np.sin(self.lambda_ * t)

        return (
            sine * phi,
            self.lambda_ * np.cos(self.lambda_ * t) * phi,
            (sine * phi_x, sine * phi_y),
        )

    def normal_derivative_from(self, side: str, s) -> np.ndarray:
        """
        The outward normal derivative of `phi` on a side, at arclength `s` from the side's first (counterclockwise)
        endpoint.
        """
        start, end = self.triangle.side_endpoints(side)
        normal = self.triangle.outward_normal(side)

        tangent = (end - start) / np.linalg.norm(end - start)

        s = np.asarray(s, dtype="float")

        x = start[0] + s * tangent[0]
        y = start[1] + s * tangent[1]

        phi_x, phi_y = self.gradient_from(x=x, y=y)

        return phi_x * normal[0] + phi_y * normal[1]

    def side_flux_square_integral(self, side: str) -> float:
        """
        The integral of `|d phi / dn|^2` over a side, by composite Gauss-Legendre quadrature. Every side gives
        `2 lambda^2 / ell_side`, with `ell_side` the altitude onto the side.
        """
        return quadrature_util.gauss_legendre_integral_from(
            func=lambda s: self.normal_derivative_from(side=side, s=s) ** 2,
            lower=0.0,
            upper=self.triangle.side_length(side),
        )

    def equidistributed_flux_square(self, side: str) -> float:
        return 2.0 * self.lambda_sq / self.triangle.altitude(side)

    def mode_boundary_exact(self, side: str, T: float) -> float:
        """
        The exact boundary integral of the standing wave over a side and `[0, T]`,

            (T / ell_side) lambda^2 (1 - sin(2 T lambda) / (2 T lambda))
        """
        if not T > 0.0:
            raise exc.ObservabilityException(f"The final time must be positive, got {T}")

        lambda_ = self.lambda_

        return (
            T
            / self.triangle.altitude(side)
            * self.lambda_sq
            * (1.0 - np.sin(2.0 * T * lambda_) / (2.0 * T * lambda_))
        )

    def mode_boundary_quadrature(self, side: str, T: float) -> float:
        """
        The boundary integral of the standing wave over a side and `[0, T]`, by Gauss-Legendre quadrature in both
        time and arclength, an independent check of `mode_boundary_exact`.
        """
        time_integral = quadrature_util.gauss_legendre_integral_from(
            func=lambda t: np.sin(self.lambda_ * t) ** 2,
            lower=0.0,
            upper=T,
            panels=quadrature_util.oscillatory_panels_from(frequency=self.lambda_, T=T),
        )

        return time_integral * self.side_flux_square_integral(side=side)
