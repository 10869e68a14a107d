import copy
import logging
import numpy as np
import os
import pandas as pd
from os import path
from typing import List, Optional, Tuple

from autowave.analytic.initial_data import (
    bump_initial_data_from,
    eigenmode_initial_data_from,
    random_smooth_initial_data_from,
)
from autowave.analytic.isosceles_mode import IsoscelesMode
from autowave.analytic.sine_series_1d import SineSeries1D
from autowave.analytic.square_mode import SquareMode
from autowave.cli.experiment_config import (
    BUMP,
    EIGENMODE,
    ExperimentConfig,
)
from autowave.discretization.discrete_pair import DiscretePair
from autowave.discretization.nodal_field import NodalField
from autowave.geometry.side_frame import SideFrame
from autowave.mesh.mesh import Mesh
from autowave.observability.boundary_observer import poincare_check
from autowave.observability.report import COLUMNS, observe
from autowave.observability import observability_util
from autowave.plot.abstract_plotters import Output
from autowave.plot.trajectory_plotters import TrajectoryPlotter
from autowave.timestepper.settings import RunConfig

from autowave import exc

logger = logging.getLogger(__name__)

logger.setLevel(level="INFO")

PLOT_DATA_COLUMNS = [
    "t",
    "flux_square_A",
    "flux_square_B",
    "flux_square_C",
    "boundary_integral",
    "energy",
]

CONVERGENCE_COLUMNS = [
    "level",
    "h_max",
    "T",
    "E0",
    "boundary_integral",
    "ratio_error",
    "commutator_residual",
    "order_E0",
    "order_boundary_integral",
    "order_commutator_residual",
]

SQUARE_COLUMNS = [
    "n",
    "T",
    "boundary_integral",
    "E0",
    "ratio_per_energy",
    "ratio",
    "quadrature_oracle",
]

ONED_COLUMNS = [
    "T",
    "length",
    "boundary_integral",
    "E0",
    "ratio",
    "ratio_error",
    "envelope",
    "scaled_error",
    "trapezoid_oracle",
    "commutator_residual",
]

EIGEN_COLUMNS = [
    "m",
    "n",
    "side",
    "ell",
    "lambda_sq",
    "side_quadrature",
    "equidistributed",
    "T",
    "boundary_exact",
    "boundary_quadrature",
]

POINCARE_COLUMNS = ["trial", "side", "lhs", "rhs", "margin"]


def output_csv(data: pd.DataFrame, out_dir: str, filename: str) -> str:
    """
    Write a table to a CSV file with 17 significant digits, so the same data always gives the same bytes.
    """
    if not path.exists(out_dir):
        os.makedirs(out_dir)

    file_path = path.join(out_dir, filename)

    data.to_csv(file_path, index=False, float_format="%.17g")

    logger.info(f"Wrote {data.shape[0]} rows to {file_path}")

    return file_path


def initial_data_from(
    config: ExperimentConfig, mesh: Mesh, seed: int
) -> Tuple[NodalField, NodalField]:
    """
    The initial displacement and velocity selected by the config, interpolated on a mesh.
    """
    if config.initial_data == EIGENMODE:
        m, n = config.modes[0] if config.modes else (1, 2)
        return eigenmode_initial_data_from(mesh=mesh, mode=IsoscelesMode(m=m, n=n))

    if config.initial_data == BUMP:
        centre = config.bump_centre or tuple(np.mean(mesh.triangle.vertices, axis=0))
        return bump_initial_data_from(
            mesh=mesh,
            centre=centre,
            radius=config.bump_radius,
            amplitude=config.bump_amplitude,
        )

    return random_smooth_initial_data_from(mesh=mesh, seed=seed)


def run_config_from(config: ExperimentConfig, T: float) -> RunConfig:
    try:
        return RunConfig(
            T=T, cfl_safety=config.cfl_safety, sample_stride=config.sample_stride
        )
    except exc.TimestepperException as e:
        raise exc.ConfigException(str(e))


def levels_and_times_from(config: ExperimentConfig) -> Tuple[List[int], List[float]]:

    levels = config.levels or [4]
    T_values = config.T_values_from() or [10.0]

    return levels, T_values


def plot_data_from(trajectory) -> pd.DataFrame:
    """
    The per-sample boundary data of a run, for plotting outside the package.
    """
    columns = {"t": trajectory.times}

    for label in ("A", "B", "C"):
        columns[f"flux_square_{label}"] = trajectory.flux_squares.get(
            label, np.zeros(trajectory.total_samples)
        )

    return pd.DataFrame(columns)


def cmd_simulate(
    config: ExperimentConfig,
    out_dir: str,
    seed: Optional[int] = None,
    plot: bool = False,
) -> pd.DataFrame:
    """
    Simulate the wave equation from the config's initial data for every (level, T) pair and write one report row
    per run to `simulate.csv`, plus the per-sample data of every run to a `plot_data_*.csv` file.

    Raises
    ------
    exc.ZeroEnergy
        If the initial data has zero energy, before any step is taken.
    """
    seed = config.seed if seed is None else seed

    triangle = config.triangle
    levels, T_values = levels_and_times_from(config=config)

    rows = []

    for level in levels:

        mesh = Mesh.uniform(triangle=triangle, level=level)
        pair = DiscretePair.from_mesh(mesh=mesh, lumped=True)

        u0, u1 = initial_data_from(config=config, mesh=mesh, seed=seed)

        for T in T_values:

            report, trajectory = observe(
                u0=u0,
                u1=u1,
                pair=pair,
                side=config.side,
                run_config=run_config_from(config=config, T=T),
            )

            rows.append(report.row)

            plot_data = plot_data_from(trajectory=trajectory)
            plot_data["boundary_integral"] = trajectory.cumulative_boundary_integral_from(
                side=config.side
            )
            plot_data["energy"] = trajectory.energies

            suffix = f"level_{level}_T_{T:.6g}"

            output_csv(
                data=plot_data[PLOT_DATA_COLUMNS],
                out_dir=out_dir,
                filename=f"plot_data_{suffix}.csv",
            )

            if plot:
                TrajectoryPlotter(
                    trajectory=trajectory,
                    side=config.side,
                    ell=report.ell,
                    output=Output(output_path=out_dir),
                ).subplot_trajectory(suffix=suffix)

    data = pd.DataFrame(rows, columns=COLUMNS)

    output_csv(data=data, out_dir=out_dir, filename="simulate.csv")

    return data


def observed_orders_from(values: np.ndarray, h_values: np.ndarray, successive: bool) -> np.ndarray:
    """
    The observed convergence order of a quantity over a sequence of meshes.

    For a quantity converging to an unknown limit the order is estimated from successive differences,
    `log(|q_{k-1} - q_{k-2}| / |q_k - q_{k-1}|) / log(h_{k-1} / h_k)`; for a quantity converging to zero (a
    residual) it is `log(q_{k-1} / q_k) / log(h_{k-1} / h_k)`.
    """
    orders = np.full(values.shape[0], np.nan)

    with np.errstate(divide="ignore", invalid="ignore"):

        if successive:
            differences = np.abs(np.diff(values))
            for k in range(2, values.shape[0]):
                orders[k] = np.log(differences[k - 2] / differences[k - 1]) / np.log(
                    h_values[k - 1] / h_values[k]
                )
        else:
            magnitudes = np.abs(values)
            for k in range(1, values.shape[0]):
                orders[k] = np.log(magnitudes[k - 1] / magnitudes[k]) / np.log(
                    h_values[k - 1] / h_values[k]
                )

    return orders


def cmd_convergence(
    config: ExperimentConfig, out_dir: str, seed: Optional[int] = None
) -> pd.DataFrame:
    """
    Run the config's experiment over its levels and tabulate the observed convergence orders of the interpolated
    energy, the boundary integral and the commutator residual, writing `convergence.csv`.

    Raises
    ------
    exc.TooFewLevels
        If fewer than three levels are given.
    """
    if len(config.levels) < 3:
        raise exc.TooFewLevels(
            f"A convergence study needs at least three levels, got {len(config.levels)}"
        )

    levels = sorted(config.levels)

    sorted_config = copy.copy(config)
    sorted_config.levels = levels

    data = cmd_simulate(
        config=sorted_config,
        out_dir=out_dir,
        seed=seed,
    )

    tables = []

    for T, runs in data.groupby("T", sort=False):

        runs = runs.sort_values("level")

        h_values = runs["h_max"].to_numpy()

        table = pd.DataFrame(
            {
                "level": runs["level"].to_numpy(),
                "h_max": h_values,
                "T": runs["T"].to_numpy(),
                "E0": runs["E0"].to_numpy(),
                "boundary_integral": runs["boundary_integral"].to_numpy(),
                "ratio_error": np.abs(runs["ratio"].to_numpy() - 1.0),
                "commutator_residual": runs["commutator_residual"].to_numpy(),
            }
        )

        table["order_E0"] = observed_orders_from(
            values=table["E0"].to_numpy(), h_values=h_values, successive=True
        )
        table["order_boundary_integral"] = observed_orders_from(
            values=table["boundary_integral"].to_numpy(), h_values=h_values, successive=True
        )
        table["order_commutator_residual"] = observed_orders_from(
            values=table["commutator_residual"].to_numpy(), h_values=h_values, successive=False
        )

        tables.append(table)

    table = pd.concat(tables, ignore_index=True)[CONVERGENCE_COLUMNS]

    output_csv(data=table, out_dir=out_dir, filename="convergence.csv")

    return table


def cmd_square_demo(config: ExperimentConfig, out_dir: str) -> pd.DataFrame:
    """
    Tabulate the closed-form right edge boundary integral of the square standing waves of the config's `n` values
    at every final time, with the quadrature oracle alongside, writing `square_demo.csv`. A final time `T = kL` is
    read as a multiple of the square's side `2 pi`.

    Raises
    ------
    exc.EmptyModeList
        If no `n` is given.
    """
    if len(config.n_list) == 0:
        raise exc.EmptyModeList("The square demo needs at least one value of n")

    T_values = [
        value * 2.0 * np.pi if in_longest_sides else value
        for value, in_longest_sides in config.T_list
    ] or [10.0]

    rows = []

    for n in config.n_list:

        mode = SquareMode(n=n)

        for T in T_values:

            boundary_integral, E0, ratio_per_energy = mode.square_exact(T=T)

            rows.append(
                {
                    "n": n,
                    "T": T,
                    "boundary_integral": boundary_integral,
                    "E0": E0,
                    "ratio_per_energy": ratio_per_energy,
                    "ratio": mode.observability_ratio_from(T=T),
                    "quadrature_oracle": mode.square_quadrature_oracle(T=T),
                }
            )

    data = pd.DataFrame(rows, columns=SQUARE_COLUMNS)

    output_csv(data=data, out_dir=out_dir, filename="square_demo.csv")

    return data


def series_from(config: ExperimentConfig, seed: int) -> SineSeries1D:

    if config.coefficients:
        return SineSeries1D.from_coefficients(
            length=config.length, coefficients=config.coefficients
        )

    return SineSeries1D.random_from(
        length=config.length, modes=config.random_modes, seed=seed
    )


def cmd_oned_demo(
    config: ExperimentConfig, out_dir: str, seed: Optional[int] = None
) -> pd.DataFrame:
    """
    Tabulate the closed-form endpoint boundary integral of a 1D sine series at every final time, its ratio error
    against the `2 length / T` envelope and a trapezoid quadrature oracle, writing `oned_demo.csv`.

    The series is given by `coefficient` lines, or drawn at random when there are none. A multiple of the longest
    side `T = kL` is read as a multiple of the interval length.
    """
    seed = config.seed if seed is None else seed

    series = series_from(config=config, seed=seed)

    T_values = [
        value * series.length if in_lengths else value
        for value, in_lengths in config.T_list
    ] or [10.0 * series.length]

    rows = []

    for T in T_values:

        boundary_integral = series.boundary_integral_from(T=T)

        if series.energy > 0.0:
            ratio = series.observability_ratio_from(T=T)
        else:
            ratio = np.nan

        rows.append(
            {
                "T": T,
                "length": series.length,
                "boundary_integral": boundary_integral,
                "E0": series.energy,
                "ratio": ratio,
                "ratio_error": abs(ratio - 1.0),
                "envelope": observability_util.one_dimensional_envelope_from(
                    length=series.length, T=T
                ),
                "scaled_error": abs(ratio - 1.0) * T / series.length,
                "trapezoid_oracle": series.boundary_integral_quadrature_from(T=T),
                "commutator_residual": observability_util.sine_series_commutator_balance(
                    series=series, T=T
                ),
            }
        )

    data = pd.DataFrame(rows, columns=ONED_COLUMNS)

    output_csv(data=data, out_dir=out_dir, filename="oned_demo.csv")

    return data


def cmd_eigen_demo(config: ExperimentConfig, out_dir: str) -> pd.DataFrame:
    """
    For every isosceles mode and side, tabulate the side quadrature of `|d phi / dn|^2` against
    `2 lambda^2 / ell_side`, and the exact boundary integral of the standing wave at every final time against its
    quadrature, writing `eigen_demo.csv`.

    Raises
    ------
    exc.EmptyModeList
        If no mode is given.
    """
    if len(config.modes) == 0:
        raise exc.EmptyModeList("The eigen demo needs at least one mode")

    modes = [IsoscelesMode(m=m, n=n) for m, n in config.modes]

    triangle = modes[0].triangle

    T_values = config.T_values_from(triangle=triangle) or [10.0]

    rows = []

    for mode in modes:
        for side in triangle.labels:

            side_quadrature = mode.side_flux_square_integral(side=side)

            for T in T_values:
                rows.append(
                    {
                        "m": mode.m,
                        "n": mode.n,
                        "side": side,
                        "ell": triangle.altitude(side),
                        "lambda_sq": mode.lambda_sq,
                        "side_quadrature": side_quadrature,
                        "equidistributed": mode.equidistributed_flux_square(side=side),
                        "T": T,
                        "boundary_exact": mode.mode_boundary_exact(side=side, T=T),
                        "boundary_quadrature": mode.mode_boundary_quadrature(side=side, T=T),
                    }
                )

    data = pd.DataFrame(rows, columns=EIGEN_COLUMNS)

    output_csv(data=data, out_dir=out_dir, filename="eigen_demo.csv")

    return data


def poincare_trials_from(
    pair: DiscretePair, trials: int, seed: int
) -> pd.DataFrame:
    """
    Check the Poincare inequality for `trials` random constrained fields, with values drawn uniformly from
    `[-1, 1]` at every interior node, in the frame of every side.

    Raises
    ------
    exc.InvalidTrials
        If `trials` is not positive.
    """
    if trials < 1:
        raise exc.InvalidTrials(f"The Poincare check needs at least one trial, got {trials}")

    triangle = pair.mesh.triangle

    frames = [SideFrame.from_triangle(triangle=triangle, side=side) for side in triangle.labels]

    rng = np.random.default_rng(seed)

    rows = []

    for trial in range(trials):

        field = NodalField(
            values=rng.uniform(-1.0, 1.0, pair.total_interior_nodes), mesh=pair.mesh
        )

        for frame in frames:

            lhs, rhs = poincare_check(field=field, pair=pair, frame=frame)

            rows.append(
                {"trial": trial, "side": frame.side, "lhs": lhs, "rhs": rhs, "margin": rhs - lhs}
            )

    return pd.DataFrame(rows, columns=POINCARE_COLUMNS)


def cmd_poincare(
    config: ExperimentConfig, out_dir: str, seed: Optional[int] = None
) -> pd.DataFrame:
    """
    Check the Poincare inequality for random fields on the config's triangle at its first level (level 5 when
    none is given), writing `poincare.csv`.
    """
    seed = config.seed if seed is None else seed

    if config.trials < 1:
        raise exc.InvalidTrials(
            f"The Poincare check needs at least one trial, got {config.trials}"
        )

    level = config.levels[0] if config.levels else 5

    mesh = Mesh.uniform(triangle=config.triangle, level=level)
    pair = DiscretePair.from_mesh(mesh=mesh)

    data = poincare_trials_from(pair=pair, trials=config.trials, seed=seed)

    output_csv(data=data, out_dir=out_dir, filename="poincare.csv")

    if np.any(data["margin"] < 0.0):
        logger.warning("The Poincare inequality failed for at least one field")

    return data
