from autowave.analytic.isosceles_mode import IsoscelesMode, isosceles_triangle
from autowave.analytic.sine_series_1d import SineSeries1D
from autowave.analytic.square_mode import (
    SquareMode,
    square_exact,
    square_quadrature_oracle,
)
from autowave.analytic.initial_data import (
    Transplant,
    bump_initial_data_from,
    eigenmode_initial_data_from,
    random_smooth_initial_data_from,
)
