import argparse
import csv
import io

from app.algorithms.coloring import low_tw_coloring, verify_coloring
from app.commands.common import add_graph_source, add_output, load_graph, require_positive, write_model
from app.core.enums import ExitCode, Subcommand
from app.core.exceptions import MismatchedResultException, VerificationFailedException
from app.models.reports import ColoringResult
from app.modules.graph_io import open_text, write_text
from app.modules.logger import rig_logger


def _verification_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, help="Sampled class subsets per i")
    parser.add_argument("--size-cap", type=int, help="Largest component for exact treewidth")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the subset sampler")


def _verify(g, result: ColoringResult, args: argparse.Namespace) -> ColoringResult:
    require_positive("samples", args.samples)
    require_positive("size-cap", args.size_cap)
    records = verify_coloring(g, result, samples=args.samples, size_cap=args.size_cap, seed=args.seed)
    return result.model_copy(update={"verification": records})


def _summary_csv(result: ColoringResult) -> str:
    row = result.summary_row()
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(row), lineterminator="\n")
    writer.writeheader()
    writer.writerow(row)
    return buffer.getvalue()


def _failures(result: ColoringResult) -> int:
    return sum(not record.passed for record in result.verification)


def color(args: argparse.Namespace) -> ExitCode:
    g = load_graph(args).g
    result = low_tw_coloring(g, args.k)
    if args.verify:
        result = _verify(g, result, args)
    write_model(result, args.output)
    if args.csv:
        write_text(_summary_csv(result), args.csv)
    rig_logger.info(f"[Color] k={result.k} colors={result.num_colors} rounds={result.augmentation_rounds}")
    if _failures(result):
        raise VerificationFailedException(f"{_failures(result)} verification records failed")
    return ExitCode.SUCCESS


def verify(args: argparse.Namespace) -> ExitCode:
    g = load_graph(args).g
    with open_text(args.coloring) as f:
        text = f.read()
    try:
        stored = ColoringResult.model_validate_json(text)
    except ValueError as e:
        raise MismatchedResultException(f"invalid coloring in {args.coloring}: {e}") from e
    result = _verify(g, stored, args)
    write_model(result, args.output)
    failures = _failures(result)
    if failures:
        raise VerificationFailedException(f"{failures} of {len(result.verification)} verification records failed")
    return ExitCode.SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(Subcommand.color.value, help="Low-treewidth coloring")
    add_graph_source(parser)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--verify", action="store_true", help="Attach verification records")
    parser.add_argument("--csv", help="Also write the summary row n,k,num_colors,rounds as CSV")
    _verification_options(parser)
    add_output(parser)
    parser.set_defaults(handler=color)

    parser = subparsers.add_parser(Subcommand.verify.value, help="Verify a stored coloring")
    add_graph_source(parser)
    parser.add_argument("--coloring", required=True, help="ColoringResult JSON")
    _verification_options(parser)
    add_output(parser)
    parser.set_defaults(handler=verify)
