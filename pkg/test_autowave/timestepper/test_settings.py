import pytest

import autowave as aw

from autowave import exc


class TestRunConfig:
    def test__defaults_from_config(self):

        run_config = aw.RunConfig(T=2.0)

        assert run_config.dt is None
        assert run_config.cfl_safety == pytest.approx(0.5, 1.0e-12)
        assert run_config.sample_stride == 1

    def test__invalid_values__raise_exception(self):

        with pytest.raises(exc.TimestepperException):
            aw.RunConfig(T=0.0)

        with pytest.raises(exc.TimestepperException):
            aw.RunConfig(T=1.0, dt=-0.1)

        with pytest.raises(exc.TimestepperException):
            aw.RunConfig(T=1.0, cfl_safety=1.5)

        with pytest.raises(exc.TimestepperException):
            aw.RunConfig(T=1.0, sample_stride=0)

    def test__steps_from__last_step_lands_on_T_and_stride_divides_steps(self):

        run_config = aw.RunConfig(T=1.0, sample_stride=3)

        total_steps, dt = run_config.steps_from(dt_max=0.3)

        assert total_steps == 6
        assert dt == pytest.approx(1.0 / 6.0, 1.0e-12)

    def test__steps_from__input_dt_caps_the_cfl_step(self):

        run_config = aw.RunConfig(T=1.0, dt=0.125)

        assert run_config.steps_from(dt_max=0.3) == (8, 0.125)
        assert run_config.steps_from(dt_max=0.1)[0] == 10

    def test__modify_T__copy_with_new_final_time(self):

        run_config = aw.RunConfig(T=1.0, sample_stride=2)

        modified = run_config.modify_T(T=5.0)

        assert modified.T == 5.0
        assert modified.sample_stride == 2
        assert run_config.T == 1.0

        with pytest.raises(exc.TimestepperException):
            run_config.modify_T(T=-1.0)
