import numpy as np
import pytest

import autowave as aw

from autowave import exc


class TestConstructor:
    def test__invalid_labels__raise_exception(self):

        with pytest.raises(exc.ConfigException):
            aw.IsoscelesMode(m=2, n=2)

        with pytest.raises(exc.ConfigException):
            aw.IsoscelesMode(m=0, n=3)

    def test__eigenvalue_and_energy(self, mode_1_2):

        assert mode_1_2.lambda_sq == 5.0
        assert mode_1_2.lambda_ == pytest.approx(np.sqrt(5.0), 1.0e-12)
        assert mode_1_2.energy == 5.0


class TestPhi:
    def test__vanishes_on_every_side(self, mode_1_2):

        s = np.linspace(0.0, np.pi, 17)

        assert mode_1_2.phi_from(x=np.full(17, np.pi), y=s) == pytest.approx(np.zeros(17), abs=1.0e-12)
        assert mode_1_2.phi_from(x=s, y=s) == pytest.approx(np.zeros(17), abs=1.0e-12)
        assert mode_1_2.phi_from(x=s, y=np.zeros(17)) == pytest.approx(np.zeros(17), abs=1.0e-12)

    def test__laplacian_is_minus_eigenvalue_times_phi(self):

        mode = aw.IsoscelesMode(m=2, n=5)

        x = np.array([0.5, 1.2, 2.9, 3.0])
        y = np.array([0.1, 1.0, 0.4, 2.5])

        assert mode.laplacian_from(x=x, y=y) == pytest.approx(
            -mode.lambda_sq * mode.phi_from(x=x, y=y), 1.0e-10
        )

    def test__gradient_matches_finite_differences(self, mode_1_2):

        x, y, h = 2.0, 0.7, 1.0e-6

        phi_x, phi_y = mode_1_2.gradient_from(x=x, y=y)

        assert phi_x == pytest.approx(
            (mode_1_2.phi_from(x + h, y) - mode_1_2.phi_from(x - h, y)) / (2.0 * h), 1.0e-6
        )
        assert phi_y == pytest.approx(
            (mode_1_2.phi_from(x, y + h) - mode_1_2.phi_from(x, y - h)) / (2.0 * h), 1.0e-6
        )

    def test__unit_l2_norm(self, mode_1_2):

        def inner(x):
            return aw.util.quadrature.gauss_legendre_integral_from(
                func=lambda y: mode_1_2.phi_from(x=np.full(y.shape, x), y=y) ** 2,
                lower=0.0,
                upper=x,
                panels=8,
            )

        norm_squared = aw.util.quadrature.gauss_legendre_integral_from(
            func=lambda xs: np.array([inner(x) for x in xs]),
            lower=0.0,
            upper=np.pi,
            panels=8,
        )

        assert norm_squared == pytest.approx(1.0, 1.0e-10)


class TestModeEval:
    def test__standing_wave_and_its_derivatives(self, mode_1_2):

        u, u_t, (u_x, u_y) = mode_1_2.mode_eval(t=0.3, x=[2.0], y=[1.0])

        lambda_ = mode_1_2.lambda_
        phi = mode_1_2.phi_from(x=2.0, y=1.0)
        phi_x, phi_y = mode_1_2.gradient_from(x=2.0, y=1.0)

        assert u[0] == pytest.approx(np.sin(0.3 * lambda_) * phi, 1.0e-12)
        assert u_t[0] == pytest.approx(lambda_ * np.cos(0.3 * lambda_) * phi, 1.0e-12)
        assert u_x[0] == pytest.approx(np.sin(0.3 * lambda_) * phi_x, 1.0e-12)
        assert u_y[0] == pytest.approx(np.sin(0.3 * lambda_) * phi_y, 1.0e-12)

    def test__point_outside_triangle__raises_exception(self, mode_1_2):

        with pytest.raises(exc.OutsideDomain):
            mode_1_2.mode_eval(t=0.0, x=[0.5], y=[1.0])


class TestBoundary:
    def test__flux_square_equidistributed_over_sides(self):

        for m, n in [(1, 2), (2, 5), (3, 4)]:

            mode = aw.IsoscelesMode(m=m, n=n)

            for side in ("A", "B", "C"):
                assert mode.side_flux_square_integral(side=side) == pytest.approx(
                    mode.equidistributed_flux_square(side=side), 1.0e-8
                )

    def test__equidistributed_values(self, mode_1_2):

        assert mode_1_2.equidistributed_flux_square(side="A") == pytest.approx(10.0 / np.pi, 1.0e-12)
        assert mode_1_2.equidistributed_flux_square(side="B") == pytest.approx(
            10.0 * np.sqrt(2.0) / np.pi, 1.0e-12
        )

    def test__boundary_integral__exact_matches_quadrature(self, mode_1_2):

        for side in ("A", "B", "C"):
            assert mode_1_2.mode_boundary_exact(side=side, T=7.3) == pytest.approx(
                mode_1_2.mode_boundary_quadrature(side=side, T=7.3), 1.0e-8
            )

    def test__boundary_integral__invalid_time__raises_exception(self, mode_1_2):

        with pytest.raises(exc.ObservabilityException):
            mode_1_2.mode_boundary_exact(side="A", T=0.0)
