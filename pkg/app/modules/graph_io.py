"""
Text file formats for bipartite and intersection graphs.

    bipartite <n> <m>          graph <n>
    a <attribute> <node>       e <u> <v>      (u < v)

Writers emit records in canonical order, so identical graphs give identical files.
A path of "-" reads from stdin or writes to stdout.
"""

import sys
from collections.abc import Iterator
from contextlib import contextmanager
from typing import TextIO

from app.core.dataclasses import BipartiteGraph, IntersectionGraph
from app.core.exceptions import ValidationException
from app.modules.logger import rig_logger

STDIO_PATH = "-"


@contextmanager
def open_text(path: str, mode: str = "r") -> Iterator[TextIO]:
    """
    Opens an ASCII text file, or stdin/stdout for "-".

    Raises:
        ValidationException: If the file is missing, unreadable, a directory or not ASCII
    """
    try:
        if path == STDIO_PATH:
            yield sys.stdin if "r" in mode else sys.stdout
            return
        with open(path, mode, encoding="ascii", newline="\n") as f:
            yield f
    except FileNotFoundError as e:
        raise ValidationException(f"file not found: {path}") from e
    except OSError as e:
        raise ValidationException(f"cannot open {path}: {e.strerror or e}") from e
    except UnicodeError as e:
        raise ValidationException(f"{path}: not an ASCII text file ({e})") from e


def _records(f: TextIO, path: str) -> Iterator[tuple[int, list[str]]]:
    for number, line in enumerate(f, start=1):
        fields = line.split()
        if fields:
            yield number, fields


def _parse_ints(fields: list[str], path: str, number: int) -> list[int]:
    try:
        values = [int(x) for x in fields]
    except ValueError as e:
        raise ValidationException(f"{path}:{number}: expected integers, got {' '.join(fields)!r}") from e
    if any(v < 0 for v in values):
        raise ValidationException(f"{path}:{number}: negative index")
    return values


def _header(records: Iterator[tuple[int, list[str]]], path: str, kind: str, arity: int) -> list[int]:
    first = next(records, None)
    if first is None:
        raise ValidationException(f"{path}: empty file, expected a '{kind}' header")
    number, fields = first
    if fields[0] != kind or len(fields) != arity + 1:
        raise ValidationException(f"{path}:{number}: expected header '{kind}' with {arity} sizes")
    return _parse_ints(fields[1:], path, number)


def read_bipartite(path: str) -> BipartiteGraph:
    """
    Reads a bipartite file.

    Args:
        path (str): File path or "-"

    Returns:
        BipartiteGraph: Parsed graph

    Raises:
        ValidationException: On a malformed header, record, out-of-range index or duplicate incidence
    """
    with open_text(path) as f:
        records = _records(f, path)
        n, m = _header(records, path, "bipartite", 2)
        attributes, nodes, seen = [], [], set()
        for number, fields in records:
            if fields[0] != "a" or len(fields) != 3:
                raise ValidationException(f"{path}:{number}: expected 'a <attribute> <node>'")
            attribute, node = _parse_ints(fields[1:], path, number)
            if attribute >= m or node >= n:
                raise ValidationException(f"{path}:{number}: index out of range for bipartite {n} {m}")
            if (attribute, node) in seen:
                raise ValidationException(f"{path}:{number}: duplicate incidence")
            seen.add((attribute, node))
            attributes.append(attribute)
            nodes.append(node)
    rig_logger.debug(f"[Graph IO] read bipartite {n}x{m} with {len(nodes)} incidences from {path}")
    return BipartiteGraph.from_incidences(n, m, nodes, attributes)


def read_graph(path: str) -> IntersectionGraph:
    """
    Reads a graph file.

    Args:
        path (str): File path or "-"

    Returns:
        IntersectionGraph: Parsed graph

    Raises:
        ValidationException: On a malformed header or record, u >= v, out-of-range endpoints or duplicate edges
    """
    with open_text(path) as f:
        records = _records(f, path)
        (n,) = _header(records, path, "graph", 1)
        edges, seen = [], set()
        for number, fields in records:
            if fields[0] != "e" or len(fields) != 3:
                raise ValidationException(f"{path}:{number}: expected 'e <u> <v>'")
            u, v = _parse_ints(fields[1:], path, number)
            if u >= v:
                raise ValidationException(f"{path}:{number}: edges must satisfy u < v")
            if v >= n:
                raise ValidationException(f"{path}:{number}: vertex out of range for graph {n}")
            if (u, v) in seen:
                raise ValidationException(f"{path}:{number}: duplicate edge")
            seen.add((u, v))
            edges.append((u, v))
    rig_logger.debug(f"[Graph IO] read graph on {n} vertices with {len(edges)} edges from {path}")
    return IntersectionGraph.from_edges(n, edges)


def write_bipartite(b: BipartiteGraph, path: str) -> None:
    with open_text(path, "w") as f:
        f.write(f"bipartite {b.n_nodes} {b.n_attributes}\n")
        for attribute, node in b.incidences():
            f.write(f"a {attribute} {node}\n")


def write_graph(g: IntersectionGraph, path: str) -> None:
    with open_text(path, "w") as f:
        f.write(f"graph {g.n_vertices}\n")
        for u, v in g.edges():
            f.write(f"e {u} {v}\n")


def write_text(text: str, path: str) -> None:
    """Writes a report (JSON or CSV text) with a trailing newline."""
    with open_text(path, "w") as f:
        f.write(text if text.endswith("\n") else text + "\n")
