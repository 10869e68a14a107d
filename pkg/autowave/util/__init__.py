from autowave.geometry import geometry_util as geometry
from autowave.mesh import mesh_util as mesh
from autowave.discretization import discretization_util as discretization
from autowave.observability import observability_util as observability
from autowave.analytic import quadrature_util as quadrature
