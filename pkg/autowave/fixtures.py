import numpy as np

import autowave as aw


def make_right_triangle():
    return aw.Triangle.from_vertices((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))


def make_acute_triangle():
    return aw.Triangle.from_vertices((0.0, 0.0), (3.0, 0.0), (1.0, 2.0))


def make_obtuse_triangle():
    return aw.Triangle.from_vertices((0.0, 0.0), (3.0, 0.0), (-1.0, 1.0))


def make_isosceles_triangle():
    return aw.isosceles_triangle()


def make_mesh_level_2():
    return aw.Mesh.uniform(triangle=make_right_triangle(), level=2)


def make_mesh_level_3():
    return aw.Mesh.uniform(triangle=make_acute_triangle(), level=3)


def make_isosceles_mesh_level_4():
    return aw.Mesh.uniform(triangle=make_isosceles_triangle(), level=4)


def make_pair_level_3():
    return aw.DiscretePair.from_mesh(mesh=make_mesh_level_3())


def make_isosceles_pair_level_4():
    return aw.DiscretePair.from_mesh(mesh=make_isosceles_mesh_level_4())


def make_mode_1_2():
    return aw.IsoscelesMode(m=1, n=2)


def make_bump_data_level_3():
    return aw.bump_initial_data_from(
        mesh=make_mesh_level_3(), centre=(1.3, 0.7), radius=1.0, amplitude=1.0
    )


def make_run_config():
    return aw.RunConfig(T=1.0)


def make_sine_series():
    return aw.SineSeries1D(
        length=np.pi, a=np.array([1.0, 0.0, 0.5]), b=np.array([0.0, 0.3, 0.0])
    )
