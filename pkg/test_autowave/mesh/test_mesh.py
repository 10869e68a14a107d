import numpy as np
import os
from os import path
import shutil
import pytest

import autowave as aw

from autowave import exc

test_path = path.join("{}".format(path.dirname(path.realpath(__file__))), "files")


class TestUniform:
    def test__counts_follow_level(self, right_triangle):

        for level in range(4):

            mesh = aw.Mesh.uniform(triangle=right_triangle, level=level)

            divisions = 2 ** level

            assert mesh.total_nodes == (divisions + 1) * (divisions + 2) // 2
            assert mesh.total_elements == divisions ** 2
            assert mesh.boundary_edges.shape[0] == 3 * divisions
            assert mesh.total_interior_nodes == (divisions - 1) * (divisions - 2) // 2

    def test__level_0__single_element_no_interior_nodes(self, right_triangle):

        mesh = aw.Mesh.uniform(triangle=right_triangle, level=0)

        assert mesh.elements.tolist() == [[0, 1, 2]]
        assert mesh.total_interior_nodes == 0

    def test__element_areas__positive_and_sum_to_triangle_area(self, mesh_level_3):

        areas = mesh_level_3.element_areas

        assert np.all(areas > 0.0)
        assert np.sum(areas) == pytest.approx(mesh_level_3.triangle.area, 1.0e-12)
        assert areas == pytest.approx(np.full(64, 3.0 / 64.0), 1.0e-12)

    def test__edge_lengths(self, mesh_level_2):

        assert mesh_level_2.h_min == pytest.approx(0.25, 1.0e-12)
        assert mesh_level_2.h_max == pytest.approx(np.sqrt(2.0) / 4.0, 1.0e-12)

    def test__interior_nodes__strictly_inside(self, mesh_level_3):

        triangle = mesh_level_3.triangle

        interior = mesh_level_3.nodes[mesh_level_3.interior_nodes]

        for side in triangle.labels:

            start, _ = triangle.side_endpoints(side)

            distances = (start - interior) @ triangle.outward_normal(side)

            assert np.all(distances > 1.0e-12)

    def test__level_out_of_range__raises_exception(self, right_triangle):

        with pytest.raises(exc.LevelTooLarge):
            aw.Mesh.uniform(triangle=right_triangle, level=13)

        with pytest.raises(exc.LevelTooLarge):
            aw.Mesh.uniform(triangle=right_triangle, level=-1)

    def test__refinement__nested_nodes_and_halved_h_max(self, acute_triangle):

        coarse = aw.Mesh.uniform(triangle=acute_triangle, level=2)

        for level in range(3, 6):

            fine = aw.Mesh.uniform(triangle=acute_triangle, level=level)

            distances = np.min(
                np.sum((coarse.nodes[:, None, :] - fine.nodes[None, :, :]) ** 2, axis=2),
                axis=1,
            )

            assert np.max(distances) < 1.0e-24
            assert fine.h_max == pytest.approx(0.5 * coarse.h_max, 1.0e-12)
            assert fine.h_min == pytest.approx(0.5 * coarse.h_min, 1.0e-12)

            coarse = fine


class TestMatches:
    def test__separately_built_meshes_match(self, acute_triangle):

        mesh_0 = aw.Mesh.uniform(triangle=acute_triangle, level=3)
        mesh_1 = aw.Mesh.uniform(triangle=acute_triangle, level=3)

        assert mesh_0 is not mesh_1
        assert mesh_0.matches(mesh_1)
        assert mesh_1.matches(mesh_0)

    def test__other_level_or_triangle__no_match(self, acute_triangle, right_triangle):

        mesh = aw.Mesh.uniform(triangle=acute_triangle, level=3)

        assert not mesh.matches(aw.Mesh.uniform(triangle=acute_triangle, level=2))
        assert not mesh.matches(aw.Mesh.uniform(triangle=right_triangle, level=3))


class TestBoundary:
    def test__every_side_has_equal_share_of_edges(self, mesh_level_3):

        for side in ("A", "B", "C"):
            assert np.sum(mesh_level_3.boundary_sides == side) == 8

    def test__restriction__lengths_sum_to_side_length(self, mesh_level_3):

        for side in ("A", "B", "C"):

            restriction = mesh_level_3.boundary_restriction_from(side=side)

            assert restriction.total_edges == 8
            assert restriction.total_length == pytest.approx(
                mesh_level_3.triangle.side_length(side), 1.0e-12
            )

    def test__restriction__normals_are_outward_normal_of_side(self, mesh_level_3):

        for side in ("A", "B", "C"):

            restriction = mesh_level_3.boundary_restriction_from(side=side)

            normal = mesh_level_3.triangle.outward_normal(side)

            assert restriction.normals == pytest.approx(
                np.tile(normal, (8, 1)), 1.0e-10
            )

    def test__restriction__edges_ordered_along_side_and_chained(self, mesh_level_2):

        restriction = mesh_level_2.boundary_restriction_from(side="A")

        assert restriction.edges[1:, 0].tolist() == restriction.edges[:-1, 1].tolist()

        start, end = mesh_level_2.triangle.side_endpoints("A")

        assert mesh_level_2.nodes[restriction.edges[0, 0]] == pytest.approx(start, 1.0e-12)
        assert mesh_level_2.nodes[restriction.edges[-1, 1]] == pytest.approx(end, 1.0e-12)

    def test__adjacent_element_contains_edge(self, mesh_level_2):

        restriction = mesh_level_2.boundary_restriction_from(side="B")

        for edge, element in zip(restriction.edges, restriction.elements):
            assert set(edge.tolist()) <= set(mesh_level_2.elements[element].tolist())

    def test__invalid_side__raises_exception(self, mesh_level_2):

        with pytest.raises(exc.InvalidSide):
            mesh_level_2.boundary_restriction_from(side="Z")


class TestOutputToText:
    def test__tables_written_and_overwrite_checked(self, mesh_level_2):

        file_path = path.join(test_path, "mesh.txt")

        if path.exists(test_path):
            shutil.rmtree(test_path)

        mesh_level_2.output_to_text(file_path=file_path)

        with open(file_path) as f:
            lines = f.read().splitlines()

        assert lines[0] == "# nodes 15"
        assert "# elements 16" in lines
        assert "# boundary 12" in lines
        assert len(lines) == 3 + 15 + 16 + 12

        with pytest.raises(FileExistsError):
            mesh_level_2.output_to_text(file_path=file_path)

        mesh_level_2.output_to_text(file_path=file_path, overwrite=True)

        shutil.rmtree(test_path)
