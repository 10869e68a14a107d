from autowave.plot.abstract_plotters import Output
from autowave.plot.trajectory_plotters import TrajectoryPlotter
