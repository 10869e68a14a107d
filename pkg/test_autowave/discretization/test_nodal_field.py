import numpy as np
import pytest

import autowave as aw

from autowave import exc


class TestConstructor:
    def test__constrained__one_value_per_interior_node(self, mesh_level_2):

        field = aw.NodalField(values=np.array([1.0, 2.0, 3.0]), mesh=mesh_level_2)

        assert len(field) == 3
        assert field.constrained is True

    def test__wrong_shape__raises_exception(self, mesh_level_2):

        with pytest.raises(exc.DimensionMismatch):
            aw.NodalField(values=np.ones(4), mesh=mesh_level_2)

        with pytest.raises(exc.DimensionMismatch):
            aw.NodalField(values=np.ones(3), mesh=mesh_level_2, constrained=False)

    def test__non_finite_values__raises_exception(self, mesh_level_2):

        with pytest.raises(exc.NonFiniteSample):
            aw.NodalField(values=np.array([1.0, np.inf, 0.0]), mesh=mesh_level_2)


class TestFullValues:
    def test__dirichlet_nodes_hold_zero(self, mesh_level_2):

        field = aw.NodalField(values=np.array([1.0, 2.0, 3.0]), mesh=mesh_level_2)

        full = field.full_values

        assert full.shape == (15,)
        assert full[mesh_level_2.interior_nodes] == pytest.approx(np.array([1.0, 2.0, 3.0]), 1.0e-12)
        assert np.all(full[~mesh_level_2.interior_node_mask] == 0.0)

    def test__unconstrained__values_unchanged(self, mesh_level_2):

        field = aw.interpolate_full(mesh=mesh_level_2, func=lambda x, y: x + y)

        assert field.full_values == pytest.approx(
            mesh_level_2.nodes[:, 0] + mesh_level_2.nodes[:, 1], 1.0e-12
        )


class TestViaFunction:
    def test__project_initial__samples_interior_nodes(self, mesh_level_2):

        field = aw.project_initial(mesh=mesh_level_2, func=lambda x, y: 2.0 * x - y)

        nodes = mesh_level_2.nodes[mesh_level_2.interior_nodes]

        assert field.values == pytest.approx(2.0 * nodes[:, 0] - nodes[:, 1], 1.0e-12)

    def test__constant_function__broadcast(self, mesh_level_2):

        field = aw.project_initial(mesh=mesh_level_2, func=lambda x, y: 4.0)

        assert field.values == pytest.approx(np.full(3, 4.0), 1.0e-12)

    def test__non_finite_function__raises_exception(self, mesh_level_2):

        with pytest.raises(exc.NonFiniteSample):
            aw.project_initial(mesh=mesh_level_2, func=lambda x, y: np.log(x - x))


class TestArithmetic:
    def test__add_subtract_scale(self, mesh_level_2):

        a = aw.NodalField(values=np.array([1.0, 2.0, 3.0]), mesh=mesh_level_2)
        b = aw.NodalField(values=np.array([1.0, 1.0, 1.0]), mesh=mesh_level_2)

        assert (a + b).values == pytest.approx(np.array([2.0, 3.0, 4.0]), 1.0e-12)
        assert (a - b).values == pytest.approx(np.array([0.0, 1.0, 2.0]), abs=1.0e-12)
        assert (2.0 * a).values == pytest.approx(np.array([2.0, 4.0, 6.0]), 1.0e-12)
        assert (-a).values == pytest.approx(np.array([-1.0, -2.0, -3.0]), 1.0e-12)
