from fractions import Fraction
from itertools import combinations, permutations

import networkx as nx
import numpy as np

from app.core.dataclasses import BipartiteGraph, IntersectionGraph


def from_nx(graph: nx.Graph) -> IntersectionGraph:
    graph = nx.convert_node_labels_to_integers(graph, ordering="sorted")
    return IntersectionGraph.from_edges(graph.number_of_nodes(), list(graph.edges()))


def path_graph(n: int) -> IntersectionGraph:
    return IntersectionGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> IntersectionGraph:
    return IntersectionGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> IntersectionGraph:
    return IntersectionGraph.from_edges(n, list(combinations(range(n), 2)))


def theta_graph(arm_lengths: list[int]) -> IntersectionGraph:
    """Hubs 0 and 1 joined by internally disjoint paths with the given numbers of edges."""
    edges, next_vertex = [], 2
    for length in arm_lengths:
        if length == 1:
            edges.append((0, 1))
            continue
        arm = [0] + list(range(next_vertex, next_vertex + length - 1)) + [1]
        next_vertex += length - 1
        edges.extend(zip(arm, arm[1:]))
    return IntersectionGraph.from_edges(next_vertex, edges)


def random_tree(n: int, seed: int) -> IntersectionGraph:
    rng = np.random.default_rng(seed)
    if n <= 2:
        return path_graph(n)
    return from_nx(nx.from_prufer_sequence(rng.integers(0, n, size=n - 2).tolist()))


def random_corpus(count: int, max_vertices: int, seed: int = 0) -> list[IntersectionGraph]:
    """Seeded G(n, p) graphs with 4 <= n <= max_vertices and varied densities."""
    rng = np.random.default_rng(seed)
    corpus = []
    for i in range(count):
        n = int(rng.integers(4, max_vertices + 1))
        p = float(rng.uniform(0.15, 0.7))
        corpus.append(from_nx(nx.gnp_random_graph(n, p, seed=seed * 100003 + i)))
    return corpus


def bipartite(n: int, m: int, attributes: dict[int, list[int]]) -> BipartiteGraph:
    pairs = [(a, v) for a, nodes in attributes.items() for v in nodes]
    return BipartiteGraph.from_incidences(n, m, [v for _, v in pairs], [a for a, _ in pairs])


def brute_force_density(g: IntersectionGraph):
    """Maximum |E(S)|/|S| over nonempty S by subset enumeration."""
    n = g.n_vertices
    masks = [sum(1 << int(u) for u in g.neighbors(v)) for v in range(n)]
    best = Fraction(0)
    for subset in range(1, 1 << n):
        members = [v for v in range(n) if subset >> v & 1]
        edges = sum((masks[v] & subset).bit_count() for v in members) // 2
        best = max(best, Fraction(edges, len(members)))
    return best


def brute_force_treewidth(graph: nx.Graph) -> int:
    """Minimum over elimination orders of the largest eliminated degree."""
    nodes = list(graph.nodes)
    if graph.number_of_edges() == 0:
        return 0
    best = len(nodes)
    for order in permutations(nodes):
        adjacency = {v: set(graph.neighbors(v)) for v in nodes}
        width = 0
        for v in order:
            nbrs = adjacency.pop(v)
            width = max(width, len(nbrs))
            if width >= best:
                break
            for u in nbrs:
                adjacency[u] |= nbrs - {u}
                adjacency[u].discard(v)
        best = min(best, width)
    return best
