import numpy as np
import pytest

import autowave as aw
from autowave.observability.report import COLUMNS

from autowave import exc


class TestObserve:
    def test__report_of_bump_run(self, pair_level_3, bump_data_level_3):

        u0, u1 = bump_data_level_3

        report, trajectory = aw.observe(
            u0=u0, u1=u1, pair=pair_level_3, side="A", run_config=aw.RunConfig(T=0.5)
        )

        assert report.side == "A"
        assert report.level == 3
        assert report.T == pytest.approx(0.5, 1.0e-12)
        assert report.E0 > 0.0
        assert report.boundary_integral >= 0.0
        assert report.frame_classification == "acute"
        assert report.ratio == pytest.approx(
            report.ell * report.boundary_integral / (report.T * report.E0), 1.0e-12
        )
        assert report.ratio_error == pytest.approx(abs(report.ratio - 1.0), 1.0e-12)
        assert set(report.x_products) == {"A", "B", "C"}
        assert report.energy_drift < 1.0e-6

        assert trajectory.times[0] == 0.0
        assert trajectory.times[-1] == pytest.approx(0.5, 1.0e-12)

    def test__row_keyed_by_columns(self, pair_level_3, bump_data_level_3):

        u0, u1 = bump_data_level_3

        report, _ = aw.observe(
            u0=u0, u1=u1, pair=pair_level_3, side="B", run_config=aw.RunConfig(T=0.25)
        )

        row = report.row

        assert list(row.keys()) == COLUMNS
        assert row["side"] == "B"
        assert row["x_prod_B"] == report.x_products["B"]

    def test__x_product_of_framed_side_is_ell_times_flux(
        self, pair_level_3, bump_data_level_3
    ):

        u0, u1 = bump_data_level_3

        report, _ = aw.observe(
            u0=u0, u1=u1, pair=pair_level_3, side="C", run_config=aw.RunConfig(T=0.5)
        )

        assert report.x_products["C"] == pytest.approx(
            report.ell * report.boundary_integral, 1.0e-8
        )

    def test__zero_initial_data__raises_exception(self, pair_level_3, mesh_level_3):

        zeros = aw.NodalField.zeros(mesh=mesh_level_3)

        with pytest.raises(exc.ZeroEnergy):
            aw.observe(
                u0=zeros,
                u1=zeros,
                pair=pair_level_3,
                side="A",
                run_config=aw.RunConfig(T=1.0),
            )

    def test__invalid_side__raises_exception(self, pair_level_3, bump_data_level_3):

        u0, u1 = bump_data_level_3

        with pytest.raises(exc.InvalidSide):
            aw.observe(
                u0=u0, u1=u1, pair=pair_level_3, side="D", run_config=aw.RunConfig(T=0.5)
            )
