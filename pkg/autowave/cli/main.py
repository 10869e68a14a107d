import argparse
import logging
import sys
from typing import List, Optional

from autoconf import conf

from autowave.cli import commands
from autowave.cli.experiment_config import ExperimentConfig

from autowave import exc

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_FAILURE = 3

VERBS = ("simulate", "convergence", "square-demo", "oned-demo", "eigen-demo", "poincare")


def parser_from() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(
        prog="autowave",
        description="Simulate the Dirichlet wave equation on triangles and check boundary observability.",
    )
    parser.add_argument("verb", choices=VERBS, help="The experiment to run.")
    parser.add_argument(
        "--config", type=str, default=None, help="Path to an experiment config (key = value lines)."
    )
    parser.add_argument(
        "--out",
        type=str,
        default=None,
        help="Output directory for CSV files, overriding the config's output key.",
    )
    parser.add_argument(
        "--seed", type=int, default=None, help="Seed of random data, overriding the config's seed."
    )
    parser.add_argument(
        "--plot", action="store_true", help="Also write static figures of every simulate run."
    )

    return parser


def run(verb: str, config: ExperimentConfig, out_dir: str, seed: Optional[int], plot: bool):

    if verb == "simulate":
        return commands.cmd_simulate(config=config, out_dir=out_dir, seed=seed, plot=plot)
    if verb == "convergence":
        return commands.cmd_convergence(config=config, out_dir=out_dir, seed=seed)
    if verb == "square-demo":
        return commands.cmd_square_demo(config=config, out_dir=out_dir)
    if verb == "oned-demo":
        return commands.cmd_oned_demo(config=config, out_dir=out_dir, seed=seed)
    if verb == "eigen-demo":
        return commands.cmd_eigen_demo(config=config, out_dir=out_dir)
    return commands.cmd_poincare(config=config, out_dir=out_dir, seed=seed)


def main(argv: Optional[List[str]] = None) -> int:
    """
    The `autowave` command line entry point, returning the exit code: 0 on success, 2 for an invalid config or
    zero energy initial data and 3 when a run produces non-finite values.
    """
    args = parser_from().parse_args(argv)

    logging.basicConfig(
        level=str(conf.instance["general"]["output"]["log_level"]).upper(),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )

    try:

        if args.config is None:
            config = ExperimentConfig()
        else:
            config = ExperimentConfig.from_file(file_path=args.config)

        out_dir = args.out or config.output or "output"

        run(verb=args.verb, config=config, out_dir=out_dir, seed=args.seed, plot=args.plot)

    except (exc.ConfigException, exc.ZeroEnergy, exc.MeshException, exc.GeometryException) as e:
        logger.error(str(e))
        return EXIT_CONFIG_ERROR
    except exc.NumericalFailure as e:
        logger.error(str(e))
        return EXIT_NUMERICAL_FAILURE

    return EXIT_SUCCESS


if __name__ == "__main__":
    sys.exit(main())
