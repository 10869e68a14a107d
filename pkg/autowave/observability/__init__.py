from autowave.observability.radial_field import RadialField
from autowave.observability.boundary_observer import (
    BoundaryObserver,
    neumann_trace,
    poincare_check,
    x_product_on_side,
)
from autowave.observability.report import ObservabilityReport, observe
