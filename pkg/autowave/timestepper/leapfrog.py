import logging
import numpy as np
from typing import Optional

from autoconf import conf

from autowave.discretization.discrete_pair import DiscretePair
from autowave.discretization.nodal_field import NodalField
from autowave.timestepper.settings import RunConfig
from autowave.timestepper.trajectory import Trajectory
from autowave.timestepper.wave_state import WaveState

from autowave import exc

logger = logging.getLogger(__name__)

logger.setLevel(level="INFO")


def largest_eigenvalue_from(pair: DiscretePair) -> float:
    """
    An estimate of the largest generalized eigenvalue of the stiffness and lumped mass, by power iteration on
    `M^-1 K` from a seeded random start, returned as the final Rayleigh quotient inflated by the
    `[timestepper] power_inflation` factor.
    """
    iterations = int(conf.instance["general"]["timestepper"]["power_iterations"])
    inflation = float(conf.instance["general"]["timestepper"]["power_inflation"])
    seed = int(conf.instance["general"]["timestepper"]["power_seed"])

    x = np.random.default_rng(seed).uniform(-1.0, 1.0, pair.total_interior_nodes)

    for _ in range(iterations):
        x = pair.acceleration_from(values=x)
        x /= np.linalg.norm(x)

    rayleigh = float(x @ (pair.stiffness @ x)) / float(x @ (pair.mass_lumped * x))

    return inflation * rayleigh


def cfl_dt_from(pair: DiscretePair, safety: Optional[float] = None) -> float:
    """
    The leapfrog time step `safety * 2 / sqrt(lambda_max)`, where `lambda_max` bounds the generalized eigenvalues
    of the stiffness and lumped mass. Leapfrog is stable for any time step below `2 / sqrt(lambda_max)`.

    Parameters
    ----------
    pair
        The operators being stepped.
    safety
        The fraction in (0, 1] of the stability limit, defaulting to the `[timestepper] cfl_safety` config value.
    """
    if safety is None:
        safety = conf.instance["general"]["timestepper"]["cfl_safety"]

    if not 0.0 < float(safety) <= 1.0:
        raise exc.TimestepperException(
            f"The CFL safety factor must lie in (0, 1], got {safety}"
        )

    return float(safety) * 2.0 / np.sqrt(largest_eigenvalue_from(pair=pair))


def check_lumped(pair: DiscretePair):
    if not pair.lumped:
        raise exc.TimestepperException(
            "Leapfrog stepping needs the lumped mass, assemble the pair with lumped=True"
        )


def step(state: WaveState, pair: DiscretePair, dt: Optional[float] = None) -> WaveState:
    """
    Advance a state by one leapfrog step:

        u_{n+1} = u_n + dt v_{n+1/2}
        v_{n+3/2} = v_{n+1/2} - dt M^-1 K u_{n+1}

    Parameters
    ----------
    state
        The state at `t_n`, whose velocity is staggered to `t_n + dt / 2`.
    pair
        The operators of the semi-discrete wave equation, with lumped mass.
    dt
        The time step, by default the one the state is staggered for.

    Raises
    ------
    exc.NumericalFailure
        If the step produces a non-finite value.
    """
    check_lumped(pair=pair)

    if dt is not None:
        state = state.with_time_step(pair=pair, dt=dt)

    dt = state.dt

    u = state.u.values + dt * state.v.values
    v = state.v.values - dt * pair.acceleration_from(values=u)

    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise exc.NumericalFailure(f"Non-finite values after the step to t = {state.t + dt}")

    return WaveState(
        t=state.t + dt,
        u=state.u.with_new_values(values=u),
        v=state.v.with_new_values(values=v),
        dt=dt,
    )


def energy_from(state: WaveState, pair: DiscretePair) -> float:
    """
    The discrete energy `v_n^T M v_n + u_n^T K u_n` of a state, with its velocity synchronized to the time of the
    displacement. No factor of 1/2 is included.
    """
    velocity = state.synchronized_velocity_from(pair=pair).values
    u = state.u.values

    return pair.mass_norm_squared_from(values=velocity) + pair.stiffness_norm_squared_from(
        values=u
    )


def conserved_energy_from(state: WaveState, pair: DiscretePair) -> float:
    """
    The energy leapfrog conserves exactly, `v_{n-1/2}^T M v_{n+1/2} + u_n^T K u_n`, which agrees with
    `energy_from` up to terms of order `dt^2`.
    """
    check_lumped(pair=pair)

    previous = state.previous_velocity_from(pair=pair).values

    return float(previous @ (pair.mass_lumped * state.v.values)) + (
        pair.stiffness_norm_squared_from(values=state.u.values)
    )


def initial_energy_from(u0: NodalField, u1: NodalField, pair: DiscretePair) -> float:
    """
    The energy `u1^T M_c u1 + u0^T K u0` of the discrete initial data, reported with the consistent mass `M_c`
    whatever mass the time stepper uses.
    """
    return float(u1.values @ (pair.mass_consistent @ u1.values)) + pair.stiffness_norm_squared_from(
        values=u0.values
    )


def run(
    u0: NodalField,
    u1: NodalField,
    pair: DiscretePair,
    run_config: RunConfig,
    observer=None,
) -> Trajectory:
    """
    Run leapfrog from the initial data `(u0, u1)` to the final time of `run_config`, sampling the conserved energy
    and the observer's boundary functionals every `sample_stride` steps (including `t = 0` and the final time).

    The observer, when input, must have a `sample_from(values, acceleration)` method taking the interior
    displacement values and their acceleration `M_L^-1 K u`, and returning two dictionaries mapping every side
    label to the flux square integral and the radial product integral of that side.

    Raises
    ------
    exc.NumericalFailure
        If a non-finite displacement is detected, checked every `[timestepper] nan_check_interval` steps and at the
        final step.
    """
    check_lumped(pair=pair)

    dt_max = cfl_dt_from(pair=pair, safety=run_config.cfl_safety)

    total_steps, dt = run_config.steps_from(dt_max=dt_max)

    stride = run_config.sample_stride
    nan_check_interval = int(conf.instance["general"]["timestepper"]["nan_check_interval"])

    logger.info(
        f"Leapfrog run to T = {run_config.T}: dt = {dt:.6g} (CFL limit {dt_max:.6g}), {total_steps} steps"
    )

    first_state = WaveState.initial_from(u0=u0, u1=u1, pair=pair, dt=dt)

    mass = pair.mass_lumped

    u = first_state.u.values.copy()
    acceleration = pair.acceleration_from(values=u)
    v = first_state.v.values.copy()
    v_previous = v + dt * acceleration

    total_samples = total_steps // stride + 1

    times = np.zeros(total_samples)
    energies = np.zeros(total_samples)

    flux_squares = None
    x_products = None

    def record(sample_index: int, step_index: int):

        nonlocal flux_squares, x_products

        times[sample_index] = step_index * dt
        energies[sample_index] = float(v_previous @ (mass * v)) + float(
            u @ (mass * acceleration)
        )

        if observer is None:
            return

        sample_flux_squares, sample_x_products = observer.sample_from(
            values=u, acceleration=acceleration
        )

        if flux_squares is None:
            flux_squares = {side: np.zeros(total_samples) for side in sample_flux_squares}
            x_products = {side: np.zeros(total_samples) for side in sample_x_products}

        for side, value in sample_flux_squares.items():
            flux_squares[side][sample_index] = value
        for side, value in sample_x_products.items():
            x_products[side][sample_index] = value

    record(sample_index=0, step_index=0)

    for step_index in range(1, total_steps + 1):

        u = u + dt * v
        acceleration = pair.acceleration_from(values=u)
        v_previous = v
        v = v - dt * acceleration

        if step_index % nan_check_interval == 0 or step_index == total_steps:
            if not np.all(np.isfinite(u)):
                raise exc.NumericalFailure(
                    f"Non-finite displacement at step {step_index} (t = {step_index * dt})"
                )

        if step_index % stride == 0:
            record(sample_index=step_index // stride, step_index=step_index)

    final_state = WaveState(
        t=run_config.T,
        u=u0.with_new_values(values=u),
        v=u1.with_new_values(values=v),
        dt=dt,
    )

    trajectory = Trajectory(
        times=times,
        energies=energies,
        flux_squares=flux_squares or {},
        x_products=x_products or {},
        u0=u0,
        u1=u1,
        first_state=first_state,
        final_state=final_state,
        E0=initial_energy_from(u0=u0, u1=u1, pair=pair),
        sample_stride=stride,
    )

    logger.info(
        f"Leapfrog run finished: relative energy drift {trajectory.energy_drift:.3e}"
    )

    return trajectory
