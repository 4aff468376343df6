import argparse

from app.algorithms.model import derive_params, project, sample_bipartite
from app.commands.common import add_output
from app.core.enums import ExitCode, Subcommand
from app.core.exceptions import ValidationException
from app.models.params import ModelParams
from app.modules.graph_io import read_bipartite, write_bipartite, write_graph
from app.modules.logger import rig_logger


def _params(args: argparse.Namespace) -> ModelParams:
    raw = args.m is not None or args.p is not None
    scaling = any(v is not None for v in (args.alpha, args.beta, args.gamma))
    if raw == scaling:
        raise ValidationException("give either --m and --p or --alpha, --beta and --gamma")
    if raw:
        if args.m is None or args.p is None:
            raise ValidationException("--m and --p must be given together")
        return ModelParams(n=args.n, m=args.m, p=args.p, seed=args.seed).check()
    if None in (args.alpha, args.beta, args.gamma):
        raise ValidationException("--alpha, --beta and --gamma must be given together")
    return derive_params(args.alpha, args.beta, args.gamma, args.n, args.seed)


def generate(args: argparse.Namespace) -> ExitCode:
    params = _params(args)
    b = sample_bipartite(params)
    write_bipartite(b, args.output)
    rig_logger.info(
        f"[Generate] n={params.n} m={params.m} p={params.p:.6g} seed={params.seed} "
        f"clamped={params.p_clamped} incidences={b.edge_count} (expected {params.expected_edge_count:.1f})"
    )
    return ExitCode.SUCCESS


def project_command(args: argparse.Namespace) -> ExitCode:
    g = project(read_bipartite(args.bipartite))
    write_graph(g, args.output)
    rig_logger.info(f"[Project] {g.n_vertices} vertices, {g.edge_count} edges")
    return ExitCode.SUCCESS


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(Subcommand.generate.value, help="Sample a bipartite node-attribute graph")
    parser.add_argument("--n", type=int, required=True, help="Number of nodes")
    parser.add_argument("--m", type=int, help="Number of attributes")
    parser.add_argument("--p", type=float, help="Incidence probability")
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--beta", type=float)
    parser.add_argument("--gamma", type=float)
    parser.add_argument("--seed", type=int, default=0)
    add_output(parser)
    parser.set_defaults(handler=generate)

    parser = subparsers.add_parser(Subcommand.project.value, help="Project a bipartite graph to its intersection graph")
    parser.add_argument("--bipartite", required=True, help="Bipartite file")
    add_output(parser)
    parser.set_defaults(handler=project_command)
