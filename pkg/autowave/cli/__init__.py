from autowave.cli.experiment_config import ExperimentConfig
from autowave.cli import commands
