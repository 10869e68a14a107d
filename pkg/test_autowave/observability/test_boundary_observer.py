import numpy as np
import pytest

import autowave as aw

from autowave import exc


@pytest.fixture(name="right_pair_level_3")
def make_right_pair_level_3(right_triangle):
    return aw.DiscretePair.from_mesh(mesh=aw.Mesh.uniform(triangle=right_triangle, level=3))


class TestNeumannTrace:
    def test__linear_field__exact_on_every_side(self, right_pair_level_3):

        field = aw.interpolate_full(mesh=right_pair_level_3.mesh, func=lambda x, y: x)

        assert aw.neumann_trace(field=field, pair=right_pair_level_3, side="B") == pytest.approx(
            np.full(8, -1.0), 1.0e-10
        )
        assert aw.neumann_trace(field=field, pair=right_pair_level_3, side="C") == pytest.approx(
            np.zeros(8), abs=1.0e-10
        )
        assert aw.neumann_trace(field=field, pair=right_pair_level_3, side="A") == pytest.approx(
            np.full(8, 1.0 / np.sqrt(2.0)), 1.0e-10
        )

    def test__state_field_and_values_agree(self, pair_level_3, bump_data_level_3):

        u0, u1 = bump_data_level_3

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A")

        state = aw.WaveState(t=0.0, u=u0, v=u1, dt=0.1)

        trace = observer.neumann_trace_from(field=u0, side="C")

        assert observer.neumann_trace_from(field=state, side="C") == pytest.approx(trace, 1.0e-12)
        assert observer.neumann_trace_from(field=u0.values, side="C") == pytest.approx(
            trace, 1.0e-12
        )

    def test__field_on_separately_built_equal_mesh__accepted(self, pair_level_3, acute_triangle):

        mesh = aw.Mesh.uniform(triangle=acute_triangle, level=3)

        assert mesh is not pair_level_3.mesh

        field = aw.interpolate_full(mesh=mesh, func=lambda x, y: 2.0 * x - y)

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A")

        assert observer.neumann_trace_from(field=field, side="A") == pytest.approx(
            observer.neumann_trace_from(
                field=aw.interpolate_full(mesh=pair_level_3.mesh, func=lambda x, y: 2.0 * x - y),
                side="A",
            ),
            1.0e-12,
        )

    def test__field_on_other_mesh__raises_exception(self, pair_level_3, mesh_level_2):

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A")

        field = aw.NodalField.zeros(mesh=mesh_level_2)

        with pytest.raises(exc.DimensionMismatch):
            observer.neumann_trace_from(field=field, side="A")

    def test__invalid_side__raises_exception(self, pair_level_3, bump_data_level_3):

        u0, _ = bump_data_level_3

        with pytest.raises(exc.InvalidSide):
            aw.neumann_trace(field=u0, pair=pair_level_3, side="D")


class TestSideIntegrals:
    def test__x_product_on_framed_side_is_ell_times_flux_square(
        self, pair_level_3, bump_data_level_3
    ):

        u0, _ = bump_data_level_3

        for side in ("A", "B", "C"):

            observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side=side)

            assert observer.x_product_from(field=u0, side=side) == pytest.approx(
                observer.frame.ell * observer.flux_square_from(field=u0, side=side), 1.0e-10
            )

    def test__x_product_on_sides_through_origin_vanishes(
        self, pair_level_3, bump_data_level_3
    ):

        u0, _ = bump_data_level_3

        frame = aw.SideFrame.from_triangle(triangle=pair_level_3.mesh.triangle, side="A")

        observer = aw.BoundaryObserver(pair=pair_level_3, frame=frame)

        scale = sum(observer.flux_square_from(field=u0, side=side) for side in ("A", "B", "C"))

        assert scale > 0.0

        for side in ("B", "C"):
            assert abs(
                aw.x_product_on_side(field=u0, pair=pair_level_3, frame=frame, side=side)
            ) < 1.0e-10 * scale

    def test__sample_from__matches_single_side_integrals(self, pair_level_3, bump_data_level_3):

        u0, _ = bump_data_level_3

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="B")

        flux_squares, x_products = observer.sample_from(values=u0.values)

        assert sorted(flux_squares) == ["A", "B", "C"]

        for side in ("A", "B", "C"):
            assert flux_squares[side] == pytest.approx(
                observer.flux_square_from(field=u0, side=side), 1.0e-12
            )
            assert x_products[side] == pytest.approx(
                observer.x_product_from(field=u0, side=side), 1.0e-12, abs=1.0e-14
            )

        element_observer = aw.BoundaryObserver.from_pair(
            pair=pair_level_3, side="B", flux_recovery="element"
        )

        element_flux_squares, _ = element_observer.sample_from(values=u0.values)

        trace = element_observer.neumann_trace_from(field=u0, side="B")
        lengths = element_observer.restrictions["B"].lengths

        assert element_flux_squares["B"] == pytest.approx(np.sum(trace ** 2 * lengths), 1.0e-12)

    def test__sample_from__run_acceleration_matches_recomputed(
        self, pair_level_3, bump_data_level_3
    ):

        u0, _ = bump_data_level_3

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="B")

        acceleration = pair_level_3.acceleration_from(values=u0.values)

        assert observer.sample_from(values=u0.values, acceleration=acceleration)[0] == pytest.approx(
            observer.sample_from(values=u0.values)[0], 1.0e-12
        )

    @pytest.mark.parametrize("flux_recovery", ["element", "variational"])
    def test__x_product_identities_hold_for_both_recoveries(
        self, pair_level_3, bump_data_level_3, flux_recovery
    ):

        u0, _ = bump_data_level_3

        observer = aw.BoundaryObserver.from_pair(
            pair=pair_level_3, side="A", flux_recovery=flux_recovery
        )

        flux_squares, x_products = observer.sample_from(values=u0.values)

        assert x_products["A"] == pytest.approx(observer.frame.ell * flux_squares["A"], 1.0e-10)

        for side in ("B", "C"):
            assert abs(x_products[side]) < 1.0e-10 * sum(flux_squares.values())

    def test__unconstrained_field__uses_element_recovery(self, pair_level_3, bump_data_level_3):

        u0, _ = bump_data_level_3

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A")
        element_observer = aw.BoundaryObserver.from_pair(
            pair=pair_level_3, side="A", flux_recovery="element"
        )

        unconstrained = aw.NodalField(
            values=u0.full_values, mesh=pair_level_3.mesh, constrained=False
        )

        assert observer.flux_square_from(field=unconstrained, side="C") == pytest.approx(
            element_observer.flux_square_from(field=u0, side="C"), 1.0e-12
        )

    def test__invalid_flux_recovery__raises_exception(self, pair_level_3):

        with pytest.raises(exc.InvalidFluxRecovery):
            aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A", flux_recovery="nodal")


class TestVariationalTrace:
    def test__linear_in_field_and_zero_at_corners(self, pair_level_3, bump_data_level_3):

        u0, _ = bump_data_level_3

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A")

        for side in ("A", "B", "C"):

            trace = observer.variational_trace_from(field=u0, side=side)

            assert trace.shape == (9,)
            assert trace[0] == 0.0
            assert trace[-1] == 0.0
            assert observer.variational_trace_from(field=u0 * 3.0, side=side) == pytest.approx(
                3.0 * trace, 1.0e-12, abs=1.0e-14
            )

    def test__eigenmode_trace_converges_to_normal_derivative(self):

        mode = aw.IsoscelesMode(m=1, n=2)
        triangle = aw.isosceles_triangle()

        trace_errors = []
        flux_errors = []

        for level in (3, 4, 5):

            mesh = aw.Mesh.uniform(triangle=triangle, level=level)
            pair = aw.DiscretePair.from_mesh(mesh=mesh)

            field = aw.NodalField.via_function_from(mesh=mesh, func=mode.phi_from)

            observer = aw.BoundaryObserver.from_pair(
                pair=pair, side="B", flux_recovery="variational"
            )

            trace_error = 0.0
            flux_error = 0.0

            for side in ("A", "B", "C"):

                start, _ = triangle.side_endpoints(side)

                nodes = mesh.nodes[observer.side_nodes[side]]
                arclengths = np.sqrt(np.sum((nodes - start) ** 2, axis=1))

                exact = mode.normal_derivative_from(side=side, s=arclengths)

                trace = observer.variational_trace_from(field=field, side=side)

                trace_error = max(
                    trace_error, np.max(np.abs(trace - exact)) / np.max(np.abs(exact))
                )

                exact_flux_square = mode.side_flux_square_integral(side=side)

                flux_error = max(
                    flux_error,
                    abs(observer.flux_square_from(field=field, side=side) - exact_flux_square)
                    / exact_flux_square,
                )

            trace_errors.append(trace_error)
            flux_errors.append(flux_error)

        assert trace_errors[0] > trace_errors[1] > trace_errors[2]
        assert flux_errors[0] > flux_errors[1] > flux_errors[2]
        assert trace_errors[2] < 0.05
        assert flux_errors[2] < 0.05


class TestVolumeTerm:
    def test__zero_velocity__zero_volume_term(self, pair_level_3, bump_data_level_3):

        u0, u1 = bump_data_level_3

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A")

        assert observer.volume_term_from(displacement=u0, velocity=u1) == 0.0

    def test__radial_term_is_minus_half_norm_for_velocity_equal_displacement(
        self, pair_level_3, bump_data_level_3
    ):

        u0, _ = bump_data_level_3

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A")

        # For a field vanishing on the boundary, 2 int u (Xu) = -2 int u^2 in two dimensions.
        norm_squared = pair_level_3.l2_norm_from(field=u0) ** 2

        assert observer.volume_term_from(displacement=u0, velocity=u0) == pytest.approx(
            norm_squared - 2.0 * norm_squared, 1.0e-10
        )

    def test__commutator_balance__needs_observed_trajectory(
        self, pair_level_3, bump_data_level_3
    ):

        u0, u1 = bump_data_level_3

        trajectory = aw.leapfrog.run(
            u0=u0, u1=u1, pair=pair_level_3, run_config=aw.RunConfig(T=0.2)
        )

        observer = aw.BoundaryObserver.from_pair(pair=pair_level_3, side="A")

        with pytest.raises(exc.EmptyTrajectory):
            observer.commutator_balance_from(trajectory=trajectory)


class TestPoincare:
    def test__random_fields_satisfy_inequality(self, pair_level_3):

        rng = np.random.default_rng(7)

        for _ in range(20):

            field = aw.NodalField(
                values=rng.uniform(-1.0, 1.0, pair_level_3.total_interior_nodes),
                mesh=pair_level_3.mesh,
            )

            for side in ("A", "B", "C"):

                frame = aw.SideFrame.from_triangle(triangle=pair_level_3.mesh.triangle, side=side)

                lhs, rhs = aw.poincare_check(field=field, pair=pair_level_3, frame=frame)

                assert 0.0 < lhs <= rhs
