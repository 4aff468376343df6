"""
Shared graph algorithms over IntersectionGraph: peeling, components,
BFS distances and a small-instance maximum clique oracle.
"""

import heapq
from collections.abc import Iterable

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from app.core.dataclasses import ComponentLabeling, CoreDecomposition, IntersectionGraph
from app.core.exceptions import CapExceededException
from settings import get_settings

settings = get_settings()

UNREACHABLE = np.iinfo(np.uint32).max


def core_decomposition(g: IntersectionGraph) -> CoreDecomposition:
    """
    Min-degree peeling; ties go to the lowest vertex index.

    Args:
        g (IntersectionGraph): Graph

    Returns:
        CoreDecomposition: Removal order, core numbers and degeneracy
    """
    n = g.n_vertices
    adjacency = [g.neighbors(v).tolist() for v in range(n)]
    degree = g.degrees.astype(np.int64).tolist()
    removed = [False] * n
    heap = [(degree[v], v) for v in range(n)]
    heapq.heapify(heap)

    order = []
    core_number = np.zeros(n, dtype=np.int64)
    level = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        level = max(level, d)
        core_number[v] = level
        order.append(v)
        for u in adjacency[v]:
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))

    degeneracy = int(core_number.max()) if n else 0
    return CoreDecomposition(order=np.asarray(order, dtype=np.int64), core_number=core_number, degeneracy=degeneracy)


def components(g: IntersectionGraph) -> ComponentLabeling:
    """
    Connected components, numbered by their smallest vertex.

    Args:
        g (IntersectionGraph): Graph

    Returns:
        ComponentLabeling: Labels, sizes and the giant component id
    """
    if g.n_vertices == 0:
        empty = np.empty(0, dtype=np.int64)
        return ComponentLabeling(label=empty, sizes=empty, giant=-1)
    _, raw = csgraph.connected_components(g.csr(), directed=False)
    _, first_seen = np.unique(raw, return_index=True)
    rank = np.empty(len(first_seen), dtype=np.int64)
    rank[np.argsort(first_seen)] = np.arange(len(first_seen))
    label = rank[raw]
    sizes = np.bincount(label)
    return ComponentLabeling(label=label, sizes=sizes, giant=int(np.argmax(sizes)))


def _to_distances(raw: np.ndarray) -> np.ndarray:
    distances = np.full(raw.shape, UNREACHABLE, dtype=np.uint32)
    finite = np.isfinite(raw)
    distances[finite] = raw[finite].astype(np.uint32)
    return distances


def bfs_distances(g: IntersectionGraph, source: int) -> np.ndarray:
    """
    Unweighted shortest-path distances from source.

    Args:
        g (IntersectionGraph): Graph
        source (int): Source vertex

    Returns:
        np.ndarray: uint32 distances, UNREACHABLE for other components

    Raises:
        IndexError: If source is out of range
    """
    if not 0 <= source < g.n_vertices:
        raise IndexError(f"source {source} out of range [0, {g.n_vertices})")
    raw = csgraph.shortest_path(g.csr(), directed=False, unweighted=True, indices=source)
    return _to_distances(raw)


def all_pairs_distances(g: IntersectionGraph) -> np.ndarray:
    """Dense uint32 distance matrix with the UNREACHABLE sentinel."""
    if g.n_vertices == 0:
        return np.empty((0, 0), dtype=np.uint32)
    raw = csgraph.shortest_path(g.csr(), directed=False, unweighted=True)
    return _to_distances(raw)


def induced_subgraph(g: IntersectionGraph, vertices: Iterable[int]) -> tuple[IntersectionGraph, np.ndarray]:
    """
    Subgraph induced by vertices, relabeled 0..k-1 in increasing original order.

    Args:
        g (IntersectionGraph): Graph
        vertices (Iterable[int]): Vertices to keep

    Returns:
        tuple[IntersectionGraph, np.ndarray]: Subgraph and original id of each new vertex
    """
    kept = np.unique(np.asarray(list(vertices) if not isinstance(vertices, np.ndarray) else vertices, dtype=np.int64))
    sub = g.csr()[kept][:, kept]
    return IntersectionGraph.from_csr(sub), kept


def remove_vertices(g: IntersectionGraph, vertices: Iterable[int]) -> IntersectionGraph:
    """Graph on the same vertex set with every edge at the given vertices deleted."""
    mask = np.ones(g.n_vertices, dtype=np.int8)
    mask[np.asarray(list(vertices), dtype=np.int64)] = 0
    keep = sparse.diags(mask)
    return IntersectionGraph.from_csr(keep @ g.csr() @ keep)


def brute_force_max_clique(g: IntersectionGraph, size_cap: int | None = None) -> int:
    """
    Exact clique number by branch and bound on neighborhood bitsets.

    Args:
        g (IntersectionGraph): Graph
        size_cap (int | None): Largest allowed |V|, CLIQUE_SIZE_CAP by default

    Returns:
        int: omega(G), 0 for the empty graph

    Raises:
        CapExceededException: If |V| exceeds size_cap
    """
    cap = settings.CLIQUE_SIZE_CAP if size_cap is None else size_cap
    if g.n_vertices > cap:
        raise CapExceededException("maximum clique", g.n_vertices, cap)

    masks = [sum(1 << int(u) for u in g.neighbors(v)) for v in range(g.n_vertices)]
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            expand(size + 1, candidates & masks[v])

    expand(0, (1 << g.n_vertices) - 1)
    return best


def to_networkx(g: IntersectionGraph) -> nx.Graph:
    """Copy of g as a networkx graph on vertices 0..n-1."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n_vertices))
    graph.add_edges_from(g.edges())
    return graph
