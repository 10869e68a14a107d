import numpy as np

from autowave.analytic import quadrature_util

from autowave import exc


class SquareMode:
    def __init__(self, n: int):
        """
        The standing wave `u(t, x, y) = sin(w t) (1 / pi) sin(x) sin(n y)`, `w = sqrt(1 + n^2)`, on the square
        `[0, 2 pi]^2` with Dirichlet conditions on all four edges.

        Its energy is `1 + n^2` while the flux it sends through the right edge `x = 2 pi` grows like `T / (2 pi)`
        whatever `n`, so no constant bounds the energy by the boundary integral uniformly over `n`: observability
        from one edge fails on a square.

        Parameters
        ----------
        n
            The positive integer vertical wavenumber.
        """
        n = int(n)

        if n < 1:
            raise exc.ConfigException(f"A square mode needs n >= 1, got {n}")

        self.n = n

    def __repr__(self):
        return f"SquareMode(n={self.n})"

    @property
    def side_length(self) -> float:
        return 2.0 * np.pi

    @property
    def frequency(self) -> float:
        return float(np.sqrt(1.0 + self.n ** 2))

    @property
    def energy(self) -> float:
        return float(1.0 + self.n ** 2)

    def displacement_from(self, t: float, x, y) -> np.ndarray:
        return np.sin(self.frequency * t) / np.pi * np.sin(x) * np.sin(self.n * y)

    def right_edge_flux_from(self, t, y) -> np.ndarray:
        """
        The outward normal derivative `u_x(t, 2 pi, y) = sin(w t) (1 / pi) sin(n y)` on the right edge.
        """
        return np.sin(self.frequency * t) / np.pi * np.cos(self.side_length) * np.sin(
            self.n * y
        )

    def boundary_integral_from(self, T: float) -> float:
        """
        The exact integral of the squared right edge flux over the edge and `[0, T]`,

            T / (2 pi) - sin(2 T w) / (4 pi w)
        """
        if not T > 0.0:
            raise exc.ObservabilityException(f"The final time must be positive, got {T}")

        w = self.frequency

        return T / (2.0 * np.pi) - np.sin(2.0 * T * w) / (4.0 * np.pi * w)

    def square_exact(self, T: float):
        """
        The right edge boundary integral, the energy and the boundary integral per unit energy.
        """
        boundary_integral = self.boundary_integral_from(T=T)

        return boundary_integral, self.energy, boundary_integral / self.energy

    def observability_ratio_from(self, T: float) -> float:
        """
        The ratio `ell * boundary_integral / (T * E)` with the right edge's altitude `ell = 2 pi`, which tends to
        `1 / (1 + n^2)` for large `T`.
        """
        return self.side_length * self.boundary_integral_from(T=T) / (T * self.energy)

    def square_quadrature_oracle(self, T: float) -> float:
        """
        The right edge boundary integral by direct quadrature of the squared flux: composite Gauss-Legendre in
        time and the periodic trapezoid rule (exact for `sin^2(n y)`) along the edge.
        """
        edge_integral = quadrature_util.periodic_trapezoid_integral_from(
            func=lambda y: (np.sin(self.n * y) / np.pi) ** 2,
            lower=0.0,
            upper=self.side_length,
            intervals=4 * self.n + 4,
        )

        time_integral = quadrature_util.gauss_legendre_integral_from(
            func=lambda t: np.sin(self.frequency * t) ** 2,
            lower=0.0,
            upper=T,
            panels=quadrature_util.oscillatory_panels_from(frequency=self.frequency, T=T),
        )

        return edge_integral * time_integral


def square_exact(n: int, T: float):
    return SquareMode(n=n).square_exact(T=T)


def square_quadrature_oracle(n: int, T: float) -> float:
    return SquareMode(n=n).square_quadrature_oracle(T=T)
