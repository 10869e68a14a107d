from autowave.discretization.discrete_pair import DiscretePair
from autowave.discretization.nodal_field import NodalField

from autowave import exc


class WaveState:
    def __init__(self, t: float, u: NodalField, v: NodalField, dt: float):
        """
        The state of a leapfrog run at time `t_n = t`.

        The displacement `u` is known at `t_n` and the velocity `v` half a step later, at `t_n + dt / 2`, which is
        how the leapfrog scheme staggers them. The velocity at `t_n` itself is recovered by
        `synchronized_velocity_from`.

        Parameters
        ----------
        t
            The time of the displacement.
        u
            The displacement at time `t`.
        v
            The velocity at time `t + dt / 2`.
        dt
            The time step the velocity is staggered by.
        """
        if t < 0.0:
            raise exc.TimestepperException(f"A wave state time must be non-negative, got {t}")

        if u.values.shape != v.values.shape:
            raise exc.DimensionMismatch(
                "The displacement and velocity of a wave state must have the same shape"
            )

        self.t = t
        self.u = u
        self.v = v
        self.dt = dt

    @classmethod
    def initial_from(
        cls, u0: NodalField, u1: NodalField, pair: DiscretePair, dt: float
    ) -> "WaveState":
        """
        The leapfrog state at `t = 0` for initial displacement `u0` and initial velocity `u1`, using the second
        order half step `v_{1/2} = u1 - (dt / 2) M^-1 K u0`.
        """
        pair.check_values(values=u0.values)
        pair.check_values(values=u1.values)

        acceleration = pair.acceleration_from(values=u0.values)

        return WaveState(
            t=0.0,
            u=u0,
            v=u1.with_new_values(values=u1.values - 0.5 * dt * acceleration),
            dt=dt,
        )

    def synchronized_velocity_from(self, pair: DiscretePair) -> NodalField:
        """
        The velocity at the time of the displacement, `v_n = v_{n+1/2} + (dt / 2) M^-1 K u_n`.
        """
        acceleration = pair.acceleration_from(values=self.u.values)

        return self.v.with_new_values(values=self.v.values + 0.5 * self.dt * acceleration)

    def previous_velocity_from(self, pair: DiscretePair) -> NodalField:
        """
        The velocity half a step before the displacement, `v_{n-1/2} = v_{n+1/2} + dt M^-1 K u_n`.
        """
        acceleration = pair.acceleration_from(values=self.u.values)

        return self.v.with_new_values(values=self.v.values + self.dt * acceleration)

    def reversed_from(self, pair: DiscretePair) -> "WaveState":
        """
        The state which retraces this run backwards: stepping it `n` times returns the displacement of `n` steps
        ago. Its staggered velocity is minus the velocity half a step before `t`.
        """
        return WaveState(
            t=self.t, u=self.u, v=-self.previous_velocity_from(pair=pair), dt=self.dt
        )

    def with_time_step(self, pair: DiscretePair, dt: float) -> "WaveState":
        """
        The same state with its velocity re-staggered for a different time step.
        """
        if dt == self.dt:
            return self

        acceleration = pair.acceleration_from(values=self.u.values)

        values = self.v.values + 0.5 * (self.dt - dt) * acceleration

        return WaveState(t=self.t, u=self.u, v=self.v.with_new_values(values=values), dt=dt)
