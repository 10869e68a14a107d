import numpy as np
from scipy import integrate
from typing import Callable, Optional, Tuple

from autoconf import conf


def gauss_legendre_from(
    lower: float,
    upper: float,
    panels: Optional[int] = None,
    points: Optional[int] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    The nodes and weights of composite Gauss-Legendre quadrature on `[lower, upper]`, which is cut into `panels`
    equal panels each integrated by a `points` point Gauss-Legendre rule.

    The panel and point counts default to the `[analytic] gauss_panels` and `gauss_points` config values.
    """
    if panels is None:
        panels = conf.instance["general"]["analytic"]["gauss_panels"]
    if points is None:
        points = conf.instance["general"]["analytic"]["gauss_points"]

    panels = int(panels)
    points = int(points)

    reference_nodes, reference_weights = np.polynomial.legendre.leggauss(points)

    edges = np.linspace(lower, upper, panels + 1)
    half_widths = 0.5 * (edges[1:] - edges[:-1])
    centres = 0.5 * (edges[1:] + edges[:-1])

    nodes = (centres[:, None] + half_widths[:, None] * reference_nodes[None, :]).reshape(-1)
    weights = (half_widths[:, None] * reference_weights[None, :]).reshape(-1)

    return nodes, weights


def gauss_legendre_integral_from(
    func: Callable,
    lower: float,
    upper: float,
    panels: Optional[int] = None,
    points: Optional[int] = None,
) -> float:
    """
    Integrate a vectorized function of one variable on `[lower, upper]` by composite Gauss-Legendre quadrature.
    """
    nodes, weights = gauss_legendre_from(
        lower=lower, upper=upper, panels=panels, points=points
    )

    return float(np.sum(weights * func(nodes)))


def trapezoid_integral_from(
    func: Callable, lower: float, upper: float, intervals: Optional[int] = None
) -> float:
    """
    Integrate a vectorized function of one variable on `[lower, upper]` by the composite trapezoid rule with
    `intervals` equal intervals, defaulting to the `[analytic] trapezoid_intervals` config value.
    """
    if intervals is None:
        intervals = conf.instance["general"]["analytic"]["trapezoid_intervals"]

    grid = np.linspace(lower, upper, int(intervals) + 1)

    return float(integrate.trapezoid(func(grid), grid))


def periodic_trapezoid_integral_from(
    func: Callable, lower: float, upper: float, intervals: int
) -> float:
    """
    Integrate a function which is periodic on `[lower, upper]` by the trapezoid rule, which is exact for
    trigonometric polynomials of degree below `intervals`.
    """
    grid = lower + (upper - lower) * np.arange(intervals) / intervals

    return float((upper - lower) / intervals * np.sum(func(grid)))


def integral_of_cosine_from(frequencies: np.ndarray, T: float) -> np.ndarray:
    """
    The integral of `cos(w t)` over `[0, T]` for every frequency `w`, equal to `T` for `w = 0`.
    """
    frequencies = np.asarray(frequencies, dtype="float")

    safe = np.where(frequencies == 0.0, 1.0, frequencies)

    return np.where(frequencies == 0.0, T, np.sin(safe * T) / safe)


def integral_of_sine_from(frequencies: np.ndarray, T: float) -> np.ndarray:
    """
    The integral of `sin(w t)` over `[0, T]` for every frequency `w`, equal to 0 for `w = 0`.
    """
    frequencies = np.asarray(frequencies, dtype="float")

    safe = np.where(frequencies == 0.0, 1.0, frequencies)

    return np.where(frequencies == 0.0, 0.0, (1.0 - np.cos(safe * T)) / safe)


def oscillatory_panels_from(frequency: float, T: float) -> int:
    """
    The number of Gauss-Legendre panels integrating `sin^2(frequency t)` over `[0, T]` to rounding: at least the
    `[analytic] gauss_panels` config value, and enough that every panel spans at most one radian of `frequency t`.
    """
    panels = int(conf.instance["general"]["analytic"]["gauss_panels"])

    return max(panels, int(np.ceil(abs(frequency) * T)))
