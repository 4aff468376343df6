import argparse

from app.algorithms.hyperbolicity import check_k_special_bipartite, hyperbolicity_report
from app.algorithms.sparsity import sparsity_report
from app.commands.common import add_graph_source, add_output, load_graph, require_positive, write_model
from app.core.enums import ExitCode, Subcommand
from app.core.exceptions import InvalidQueryException, ValidationException
from app.models.reports import BipartitePathQuery
from app.modules.graph_io import open_text
from app.modules.logger import rig_logger
from settings import get_settings

settings = get_settings()


def analyze(args: argparse.Namespace) -> ExitCode:
    loaded = load_graph(args)
    if loaded.b is None:
        rig_logger.info("[Analyze] no bipartite graph given, max attribute degree reported as 0")
    report = sparsity_report(loaded.g, loaded.b, args.thresholds)
    write_model(report, args.output)
    return ExitCode.SUCCESS


def _read_query(path: str) -> BipartitePathQuery:
    with open_text(path) as f:
        text = f.read()
    try:
        return BipartitePathQuery.model_validate_json(text)
    except ValueError as e:
        raise InvalidQueryException(f"invalid query in {path}: {e}") from e


def hyperbolicity(args: argparse.Namespace) -> ExitCode:
    require_positive("size-cap", args.size_cap)
    if args.query:
        loaded = load_graph(args)
        if loaded.b is None:
            raise ValidationException("--query needs --bipartite")
        write_model(check_k_special_bipartite(loaded.b, _read_query(args.query)), args.output)
        return ExitCode.SUCCESS
    size_cap = args.size_cap if args.size_cap is not None else settings.DELTA_SIZE_CAP
    report = hyperbolicity_report(load_graph(args).g, size_cap, strict=True)
    write_model(report, args.output, exclude_none=True)
    return ExitCode.SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(Subcommand.analyze.value, help="Sparsity report of a graph")
    add_graph_source(parser)
    parser.add_argument("--thresholds", type=int, nargs="*", default=[], help="Degree-tail thresholds")
    add_output(parser)
    parser.set_defaults(handler=analyze)

    parser = subparsers.add_parser(Subcommand.hyperbolicity.value, help="Four-point delta and special-path certificate")
    add_graph_source(parser)
    parser.add_argument("--size-cap", type=int, help="Largest giant component for the exact four-point delta")
    parser.add_argument("--query", help="JSON k-special bipartite path query, checked against --bipartite")
    add_output(parser)
    parser.set_defaults(handler=hyperbolicity)
