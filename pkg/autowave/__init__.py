from autoconf import conf

conf.instance.register(__file__)

from . import exc
from . import util
from .geometry.triangle import Triangle
from .geometry.side_frame import SideFrame
from .mesh.mesh import BoundaryRestriction, Mesh
from .discretization.nodal_field import NodalField, interpolate_full, project_initial
from .discretization.discrete_pair import DiscretePair
from .timestepper.settings import RunConfig
from .timestepper.wave_state import WaveState
from .timestepper.trajectory import Trajectory
from .timestepper import leapfrog
from .analytic.isosceles_mode import IsoscelesMode, isosceles_triangle
from .analytic.sine_series_1d import SineSeries1D
from .analytic.square_mode import SquareMode, square_exact, square_quadrature_oracle
from .analytic.initial_data import (
    Transplant,
    bump_initial_data_from,
    eigenmode_initial_data_from,
    random_smooth_initial_data_from,
)
from .observability.radial_field import RadialField
from .observability.boundary_observer import (
    BoundaryObserver,
    neumann_trace,
    poincare_check,
    x_product_on_side,
)
from .observability.report import ObservabilityReport, observe
from . import plot
from .cli.experiment_config import ExperimentConfig

__version__ = "2026.10.18.1"
