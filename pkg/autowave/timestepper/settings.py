import copy
import math
from typing import Optional, Tuple

from autoconf import conf

from autowave import exc


class RunConfig:
    def __init__(
        self,
        T: float,
        dt: Optional[float] = None,
        cfl_safety: Optional[float] = None,
        sample_stride: Optional[int] = None,
    ):
        """
        The settings of one leapfrog run of the wave equation.

        If `dt` is not input it is chosen from the CFL restriction of the mesh with the `cfl_safety` factor. In
        both cases the number of steps is the smallest multiple of `sample_stride` covering `[0, T]`, and the time
        step is shrunk to `T / n_steps` so that the last step lands exactly on `T`.

        Parameters
        ----------
        T
            The final time of the run.
        dt
            An upper bound on the time step, defaulting to the CFL time step.
        cfl_safety
            The fraction in (0, 1] of the stability limit used for the CFL time step, defaulting to the
            `[timestepper] cfl_safety` config value.
        sample_stride
            The number of steps between samples of the boundary functionals, defaulting to the `[timestepper]
            sample_stride` config value.
        """
        if cfl_safety is None:
            cfl_safety = conf.instance["general"]["timestepper"]["cfl_safety"]

        if sample_stride is None:
            sample_stride = conf.instance["general"]["timestepper"]["sample_stride"]

        if not T > 0.0:
            raise exc.TimestepperException(f"The final time T must be positive, got {T}")

        if dt is not None and not dt > 0.0:
            raise exc.TimestepperException(f"The time step must be positive, got {dt}")

        if not 0.0 < float(cfl_safety) <= 1.0:
            raise exc.TimestepperException(
                f"The CFL safety factor must lie in (0, 1], got {cfl_safety}"
            )

        if int(sample_stride) < 1:
            raise exc.TimestepperException(
                f"The sample stride must be at least 1, got {sample_stride}"
            )

        self.T = float(T)
        self.dt = dt
        self.cfl_safety = float(cfl_safety)
        self.sample_stride = int(sample_stride)

    def steps_from(self, dt_max: float) -> Tuple[int, float]:
        """
        The number of steps and the effective time step of a run whose time step may not exceed `dt_max`.
        """
        if self.dt is not None:
            dt_max = min(dt_max, self.dt)

        stride = self.sample_stride

        total_steps = max(int(math.ceil(self.T / dt_max)), 1)
        total_steps = stride * int(math.ceil(total_steps / stride))

        return total_steps, self.T / total_steps

    def modify_T(self, T: float) -> "RunConfig":

        if not T > 0.0:
            raise exc.TimestepperException(f"The final time T must be positive, got {T}")

        settings = copy.copy(self)
        settings.T = float(T)
        return settings
