import numpy as np
from typing import Optional

from autowave.analytic import quadrature_util

from autowave import exc


class SineSeries1D:
    def __init__(self, length: float, a: np.ndarray, b: np.ndarray):
        """
        A solution of the 1D wave equation on `[0, length]` with Dirichlet conditions at both ends, as the finite
        sine series

            u(t, x) = sum_k (a_k cos(w_k t) + b_k sin(w_k t)) sin(w_k x),    w_k = k pi / length,

        for `k = 1, ..., len(a)`.

        Parameters
        ----------
        length
            The length of the interval.
        a
            The cosine coefficients, entry `k - 1` belonging to mode `k`.
        b
            The sine coefficients, entry `k - 1` belonging to mode `k`.
        """
        a = np.asarray(a, dtype="float").reshape(-1)
        b = np.asarray(b, dtype="float").reshape(-1)

        if not length > 0.0:
            raise exc.ConfigException(f"The interval length must be positive, got {length}")

        if a.shape != b.shape:
            raise exc.ConfigException(
                "A sine series needs the same number of cosine and sine coefficients"
            )

        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise exc.ConfigException("Sine series coefficients must be finite")

        self.length = float(length)
        self.a = a
        self.b = b

    @classmethod
    def from_coefficients(cls, length: float, coefficients) -> "SineSeries1D":
        """
        Create a series from `(k, a_k, b_k)` triples, modes which are not listed having zero coefficients.
        """
        coefficients = list(coefficients)

        total_modes = max([int(k) for k, _, _ in coefficients], default=0)

        a = np.zeros(total_modes)
        b = np.zeros(total_modes)

        for k, a_k, b_k in coefficients:
            if int(k) < 1:
                raise exc.ConfigException(f"Sine series modes start at k = 1, got {k}")
            a[int(k) - 1] += a_k
            b[int(k) - 1] += b_k

        return SineSeries1D(length=length, a=a, b=b)

    @classmethod
    def random_from(cls, length: float, modes: int, seed: Optional[int] = None) -> "SineSeries1D":
        """
        A series whose first `modes` cosine and sine coefficients are drawn uniformly from `[-1, 1]`.
        """
        rng = np.random.default_rng(seed)

        return SineSeries1D(
            length=length,
            a=rng.uniform(-1.0, 1.0, modes),
            b=rng.uniform(-1.0, 1.0, modes),
        )

    @property
    def total_modes(self) -> int:
        return self.a.shape[0]

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(1, self.total_modes + 1) * np.pi / self.length

    @property
    def signs(self) -> np.ndarray:
        """
        `(-1)^k`, the value of `cos(w_k length)`.
        """
        return np.where(np.arange(1, self.total_modes + 1) % 2 == 0, 1.0, -1.0)

    @property
    def energy(self) -> float:
        """
        The conserved energy `int_0^length |u_t|^2 + |u_x|^2 dx = sum_k (length / 2) w_k^2 (a_k^2 + b_k^2)`.
        """
        return float(
            np.sum(0.5 * self.length * self.frequencies ** 2 * (self.a ** 2 + self.b ** 2))
        )

    def displacement_from(self, t: float, x) -> np.ndarray:
        x = np.asarray(x, dtype="float")
        w = self.frequencies
        amplitudes = self.a * np.cos(w * t) + self.b * np.sin(w * t)
        return np.sin(np.multiply.outer(x, w)) @ amplitudes

    def energy_from(self, t: float) -> float:
        """
        The energy at time `t`, evaluated from the time derivatives of every mode amplitude. It equals `energy`
        for every `t`.
        """
        w = self.frequencies

        q = self.a * np.cos(w * t) + self.b * np.sin(w * t)
        p = w * (-self.a * np.sin(w * t) + self.b * np.cos(w * t))

        return float(np.sum(0.5 * self.length * (p ** 2 + w ** 2 * q ** 2)))

    def endpoint_flux_from(self, t) -> np.ndarray:
        """
        The Neumann data `u_x(t, length) = sum_k (-1)^k w_k (a_k cos(w_k t) + b_k sin(w_k t))`, vectorized over `t`.
        """
        t = np.asarray(t, dtype="float")
        w = self.frequencies

        phases = np.multiply.outer(t, w)

        return (np.cos(phases) * self.a + np.sin(phases) * self.b) @ (self.signs * w)

    def series_eval_1d(self, t: float):
        """
        The endpoint flux and the energy at time `t`.
        """
        return float(self.endpoint_flux_from(t=t)), self.energy_from(t=t)

    def boundary_integral_from(self, T: float) -> float:
        """
        The exact value of `int_0^T |u_x(t, length)|^2 dt`.

        The squared flux is a double sum of products of cosines and sines of the mode frequencies, every product
        of which is integrated in closed form after a product to sum identity.
        """
        if not T > 0.0:
            raise exc.ObservabilityException(f"The final time must be positive, got {T}")

        w = self.frequencies

        c = self.signs * w * self.a
        d = self.signs * w * self.b

        w_j = w[:, None]
        w_k = w[None, :]

        cos_difference = quadrature_util.integral_of_cosine_from(w_j - w_k, T)
        cos_sum = quadrature_util.integral_of_cosine_from(w_j + w_k, T)
        sin_difference = quadrature_util.integral_of_sine_from(w_k - w_j, T)
        sin_sum = quadrature_util.integral_of_sine_from(w_k + w_j, T)

        cos_cos = 0.5 * (cos_difference + cos_sum)
        sin_sin = 0.5 * (cos_difference - cos_sum)
        cos_sin = 0.5 * (sin_sum + sin_difference)

        return float(c @ cos_cos @ c + d @ sin_sin @ d + 2.0 * c @ cos_sin @ d)

    def boundary_integral_quadrature_from(self, T: float, intervals: Optional[int] = None) -> float:
        """
        The boundary integral by composite trapezoid quadrature of the squared endpoint flux, an independent check
        of `boundary_integral_from`.
        """
        return quadrature_util.trapezoid_integral_from(
            func=lambda t: self.endpoint_flux_from(t=t) ** 2,
            lower=0.0,
            upper=T,
            intervals=intervals,
        )

    def observability_ratio_from(self, T: float) -> float:
        """
        The endpoint observability ratio `length * boundary_integral / (T * E)`.

        Raises
        ------
        exc.ZeroEnergy
            If every coefficient is zero.
        """
        energy = self.energy

        if not energy > 0.0:
            raise exc.ZeroEnergy("The observability ratio of a zero series is undefined")

        return self.length * self.boundary_integral_from(T=T) / (T * energy)

    def radial_volume_term_from(self, t: float) -> float:
        """
        The volume term `2 int_0^length u_t (x u_x) dx` of the 1D commutator identity, in closed form.

        With `u_t = sum_j p_j sin(w_j x)` and `u_x = sum_k q_k w_k cos(w_k x)` it is
        `2 sum_jk p_j q_k w_k I_jk`, where `I_jk = int_0^length x sin(w_j x) cos(w_k x) dx` follows from
        `int_0^length x sin(c x) dx = -length (-1)^i / c` for `c = i pi / length`, `i != 0`.
        """
        w = self.frequencies
        k = np.arange(1, self.total_modes + 1)

        q = self.a * np.cos(w * t) + self.b * np.sin(w * t)
        p = w * (-self.a * np.sin(w * t) + self.b * np.cos(w * t))

        index_sum = k[:, None] + k[None, :]
        index_difference = k[:, None] - k[None, :]

        def x_sine_integral_from(index):
            sign = np.where(index % 2 == 0, 1.0, -1.0)
            safe = np.where(index == 0, 1, index)
            return np.where(
                index == 0, 0.0, -self.length * sign * self.length / (safe * np.pi)
            )

        integrals = 0.5 * (
            x_sine_integral_from(index_sum) + x_sine_integral_from(index_difference)
        )

        return float(2.0 * p @ integrals @ (q * w))
