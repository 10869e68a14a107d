from autowave.timestepper.settings import RunConfig
from autowave.timestepper.wave_state import WaveState
from autowave.timestepper.trajectory import Trajectory
from autowave.timestepper import leapfrog
