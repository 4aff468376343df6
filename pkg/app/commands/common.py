import argparse
from typing import NamedTuple

from pydantic import BaseModel

from app.algorithms.model import project
from app.core.dataclasses import BipartiteGraph, IntersectionGraph
from app.core.exceptions import ValidationException
from app.modules.graph_io import STDIO_PATH, read_bipartite, read_graph, write_text


class LoadedGraph(NamedTuple):
    g: IntersectionGraph
    b: BipartiteGraph | None


def add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", default=STDIO_PATH, help="Output path, '-' for stdout (default)")


def add_graph_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", help="Graph file")
    source.add_argument("--bipartite", help="Bipartite file, projected before use")


def load_graph(args: argparse.Namespace) -> LoadedGraph:
    """
    Reads the intersection graph named by --graph or --bipartite.

    Returns:
        LoadedGraph: The graph, and the bipartite graph when one was given
    """
    if args.bipartite:
        b = read_bipartite(args.bipartite)
        return LoadedGraph(g=project(b), b=b)
    return LoadedGraph(g=read_graph(args.graph), b=None)


def write_model(model: BaseModel, path: str, **dump_options) -> None:
    write_text(model.model_dump_json(indent=2, by_alias=True, **dump_options), path)


def require_positive(name: str, value: int | None) -> None:
    if value is not None and value < 1:
        raise ValidationException(f"--{name} must be >= 1, got {value}")
