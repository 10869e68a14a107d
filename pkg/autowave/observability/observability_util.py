import numpy as np
from scipy import integrate

from autowave import numba_util

from autowave import exc


def boundary_integral_from(times: np.ndarray, flux_squares: np.ndarray) -> float:
    """
    The time integral of the per-sample side integrals of `|du/dn|^2`, by the trapezoid rule over the samples.

    Parameters
    ----------
    times
        The uniformly spaced sample times.
    flux_squares
        The side integral of the squared flux at every sample time.

    Raises
    ------
    exc.EmptyTrajectory
        If there are no samples.
    """
    if times.shape[0] == 0:
        raise exc.EmptyTrajectory("A boundary integral needs at least one sample")

    if times.shape[0] == 1:
        return 0.0

    return float(integrate.trapezoid(flux_squares, times))


def observability_ratio_from(
    boundary_integral: float, T: float, E0: float, ell: float
) -> float:
    """
    The observability ratio `R = ell * boundary_integral / (T * E0)`, which tends to 1 like `L / T` on a triangle.

    Raises
    ------
    exc.ZeroEnergy
        If the energy is not positive.
    """
    if not E0 > 0.0:
        raise exc.ZeroEnergy(f"The observability ratio needs a positive energy, got {E0}")

    if not T > 0.0:
        raise exc.ObservabilityException(f"The observability ratio needs T > 0, got {T}")

    return ell * boundary_integral / (T * E0)


def commutator_residual_from(
    x_product_integral: float,
    T: float,
    E0: float,
    volume_term_0: float,
    volume_term_T: float,
) -> float:
    """
    The residual of the integrated commutator identity for the radial field `X`,

        int_0^T int_boundary (Xu)(du/dn) dS dt = T E(0) + [int_domain u_t u + 2 u_t (Xu) dV]_0^T

    given its boundary term (summed over all sides), energy and the volume term at both ends of the run.
    """
    return abs(x_product_integral - T * E0 - (volume_term_T - volume_term_0))


@numba_util.jit()
def radial_vertex_values_from(
    nodes: np.ndarray,
    elements: np.ndarray,
    field_gradients: np.ndarray,
    origin: np.ndarray,
) -> np.ndarray:
    """
    The values of `Xu = (p - origin) . grad u` at the three vertices of every element, where `grad u` is the
    element's constant gradient. `Xu` is linear on every element, so these values represent it exactly.
    """
    values = np.zeros((elements.shape[0], 3))

    for e in range(elements.shape[0]):
        for k in range(3):
            node = elements[e, k]
            values[e, k] = (nodes[node, 0] - origin[0]) * field_gradients[e, 0] + (
                nodes[node, 1] - origin[1]
            ) * field_gradients[e, 1]

    return values


@numba_util.jit()
def directional_derivative_norm_squared_from(
    field_gradients: np.ndarray, areas: np.ndarray, direction: np.ndarray
) -> float:
    """
    The squared L2 norm of the derivative of a P1 field along a unit direction, `sum_e area_e (grad u_e . d)^2`.
    """
    total = 0.0

    for e in range(areas.shape[0]):
        derivative = (
            field_gradients[e, 0] * direction[0] + field_gradients[e, 1] * direction[1]
        )
        total += areas[e] * derivative * derivative

    return total


def poincare_constant_from(longest_side: float) -> float:
    """
    The constant `L sqrt(e - 1)` bounding the L2 norm of a function vanishing on the boundary by the L2 norm of
    its derivative across a side.
    """
    return longest_side * np.sqrt(np.e - 1.0)


def radial_multiplier_envelope_constant() -> float:
    """
    The constant `C = 2 (sqrt(2) + sqrt(e - 1) / 2)` in `|R - 1| <= C L / T` that follows from bounding the volume
    terms of the radial multiplier identity with the Poincare inequality. Measured envelopes are smaller.
    """
    return 2.0 * (np.sqrt(2.0) + 0.5 * np.sqrt(np.e - 1.0))


def one_dimensional_envelope_from(length: float, T: float) -> float:
    """
    The bound `2 length / T` on `|R - 1|` for the endpoint observability ratio of the 1D wave equation on an
    interval of the input length.
    """
    return 2.0 * length / T


def sine_series_commutator_balance(series, T: float) -> float:
    """
    The residual of the 1D commutator identity for the field `x d/dx` on `[0, length]`,

        length int_0^T |u_x(t, length)|^2 dt = T E(0) + [2 int_0^length u_t (x u_x) dx]_0^T

    evaluated in closed form for a `SineSeries1D`. It vanishes up to rounding.
    """
    return abs(
        series.length * series.boundary_integral_from(T=T)
        - T * series.energy
        - (series.radial_volume_term_from(t=T) - series.radial_volume_term_from(t=0.0))
    )
