from autowave.discretization.nodal_field import (
    NodalField,
    interpolate_full,
    project_initial,
)
from autowave.discretization.discrete_pair import DiscretePair
