import argparse
import sys

from app.core.enums import ExitCode, Subcommand
from app.core.exceptions import ValidationException
from app.main import ExperimentRunner, write_result
from app.models.experiment import ExperimentConfig
from app.utils import config_from_dict, get_preset, load_config


def _config(args: argparse.Namespace) -> ExperimentConfig:
    if (args.config is None) == (args.preset is None):
        raise ValidationException("give exactly one of --config and --preset")
    config = load_config(args.config) if args.config else get_preset(args.preset)

    data = config.model_dump(mode="json")
    if args.trials is not None:
        data["trials"] = args.trials
    if args.seed is not None:
        data["base_seed"] = args.seed
    if args.size_cap is not None:
        data["caps"].update(delta=args.size_cap, treewidth=args.size_cap)
    if args.k:
        data["coloring_k"] = args.k
    if args.epsilon is not None:
        data["epsilon"] = args.epsilon
    return config_from_dict(data, "command line")


def experiment(args: argparse.Namespace) -> ExitCode:
    config = _config(args)
    result = ExperimentRunner(workers=args.workers).run(config)
    target = write_result(result, args.output)
    sys.stdout.write(f"{target}\n")
    return ExitCode.SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(Subcommand.experiment.value, help="Run an experiment sweep")
    parser.add_argument("--config", help="JSON or YAML experiment config")
    parser.add_argument("--preset", help="Preset name")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--seed", type=int, help="Base seed")
    parser.add_argument("--k", type=int, nargs="+", help="Coloring k values")
    parser.add_argument("--epsilon", type=float)
    parser.add_argument("--size-cap", type=int, help="Cap for exact four-point delta and treewidth")
    parser.add_argument("--workers", type=int, help="Worker processes, RIG_THREADS by default")
    parser.add_argument("-o", "--output", help="Results root directory, RESULTS_DIR by default")
    parser.set_defaults(handler=experiment)
