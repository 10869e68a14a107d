import os
from os import path

import pytest
from matplotlib import pyplot

from autoconf import conf
from autowave import fixtures

directory = path.dirname(path.realpath(__file__))


@pytest.fixture(autouse=True)
def set_config_path(request):
    conf.instance.push(
        new_path=path.join(directory, "config"),
        output_path=path.join(directory, "output"),
    )


class PlotPatch:
    def __init__(self):
        self.paths = []

    def __call__(self, path, *args, **kwargs):
        self.paths.append(path)


@pytest.fixture(name="plot_patch")
def make_plot_patch(monkeypatch):
    plot_patch = PlotPatch()
    monkeypatch.setattr(pyplot, "savefig", plot_patch)
    return plot_patch


@pytest.fixture(autouse=True, scope="session")
def remove_logs():
    yield
    for d, _, files in os.walk(directory):
        for file in files:
            if file.endswith(".log"):
                os.remove(path.join(d, file))


############
# AutoWave #
############

# Geometry #


@pytest.fixture(name="right_triangle")
def make_right_triangle():
    return fixtures.make_right_triangle()


@pytest.fixture(name="acute_triangle")
def make_acute_triangle():
    return fixtures.make_acute_triangle()


@pytest.fixture(name="obtuse_triangle")
def make_obtuse_triangle():
    return fixtures.make_obtuse_triangle()


@pytest.fixture(name="isosceles_triangle")
def make_isosceles_triangle():
    return fixtures.make_isosceles_triangle()


# Meshes #


@pytest.fixture(name="mesh_level_2")
def make_mesh_level_2():
    return fixtures.make_mesh_level_2()


@pytest.fixture(name="mesh_level_3")
def make_mesh_level_3():
    return fixtures.make_mesh_level_3()


@pytest.fixture(name="isosceles_mesh_level_4")
def make_isosceles_mesh_level_4():
    return fixtures.make_isosceles_mesh_level_4()


# Discretization #


@pytest.fixture(name="pair_level_3")
def make_pair_level_3():
    return fixtures.make_pair_level_3()


@pytest.fixture(name="isosceles_pair_level_4")
def make_isosceles_pair_level_4():
    return fixtures.make_isosceles_pair_level_4()


@pytest.fixture(name="bump_data_level_3")
def make_bump_data_level_3():
    return fixtures.make_bump_data_level_3()


# Runs and oracles #


@pytest.fixture(name="run_config")
def make_run_config():
    return fixtures.make_run_config()


@pytest.fixture(name="mode_1_2")
def make_mode_1_2():
    return fixtures.make_mode_1_2()


@pytest.fixture(name="sine_series")
def make_sine_series():
    return fixtures.make_sine_series()
