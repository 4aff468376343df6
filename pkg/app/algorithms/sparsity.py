"""
Structural sparsity measurements: attribute degrees, exact depth-0 grad
(densest subgraph), degree tails and neighborhood concentration.
"""

import math
from collections import Counter
from collections.abc import Iterable, Sequence
from fractions import Fraction

import networkx as nx
import numpy as np

from app.algorithms.graph_core import core_decomposition
from app.core.dataclasses import BipartiteGraph, IntersectionGraph
from app.core.exceptions import InvalidParameterException
from app.models.reports import ConcentrationCheck, DegreeTailPoint, SparsityReport
from app.modules.logger import rig_logger

_SOURCE = "source"
_SINK = "sink"


def attribute_degree_stats(b: BipartiteGraph) -> tuple[int, dict[int, int]]:
    """
    Maximum attribute degree and the full attribute degree histogram.

    Args:
        b (BipartiteGraph): Bipartite graph

    Returns:
        tuple[int, dict[int, int]]: (max degree, {degree: number of attributes})
    """
    degrees = b.attribute_degrees
    histogram = dict(sorted(Counter(degrees.tolist()).items()))
    return int(degrees.max()) if len(degrees) else 0, histogram


def attribute_degree_bound(alpha: float, c: float = 1.0) -> float:
    """
    Attribute degree that is exceeded with probability O(n^-c) when alpha > 1.

    Args:
        alpha (float): Attribute-count exponent, must exceed 1
        c (float): Confidence exponent, at least 1

    Returns:
        float: 2(alpha + c)/(alpha - 1)
    """
    if alpha <= 1:
        raise InvalidParameterException(f"attribute degree bound needs alpha > 1, got {alpha}")
    if c < 1:
        raise InvalidParameterException(f"c must be >= 1, got {c}")
    return 2 * (alpha + c) / (alpha - 1)


def _edges_inside(adjacency: list[list[int]], members: np.ndarray, n: int) -> int:
    inside = np.zeros(n, dtype=bool)
    inside[members] = True
    return sum(int(inside[adjacency[v]].sum()) for v in members.tolist()) // 2


def _peel_start(g: IntersectionGraph, adjacency: list[list[int]], order: np.ndarray) -> tuple[Fraction, np.ndarray]:
    """Densest suffix of the degeneracy peel, the classic 2-approximation."""
    n = g.n_vertices
    removed = np.zeros(n, dtype=bool)
    edges = g.edge_count
    best, best_start = Fraction(edges, n), 0
    for i, v in enumerate(order[:-1].tolist()):
        edges -= int((~removed[adjacency[v]]).sum())
        removed[v] = True
        density = Fraction(edges, n - i - 1)
        if density > best:
            best, best_start = density, i + 1
    return best, np.sort(order[best_start:])


def _improving_set(adjacency: list[list[int]], core: np.ndarray, target: Fraction) -> np.ndarray | None:
    """
    Vertex set inside core with density strictly above target, via one min cut.

    With target = a/b, the cut network has source->v capacity M, v->sink capacity
    M + 2a - b*deg(v) and capacity b on both arcs of each edge, M = b*|E(core)|.
    A cut with source side S costs M|core| + 2(a|S| - b|E(S)|), so any cut below
    M|core| exposes a denser set.

    Args:
        adjacency (list[list[int]]): Neighbor lists of the whole graph
        core (np.ndarray): Candidate vertices
        target (Fraction): Density to beat

    Returns:
        np.ndarray | None: Sorted improving set, or None if target is optimal on core
    """
    a, b = target.numerator, target.denominator
    inside = np.zeros(len(adjacency), dtype=bool)
    inside[core] = True
    local_degree = {v: int(inside[adjacency[v]].sum()) for v in core.tolist()}
    big = b * sum(local_degree.values()) // 2

    network = nx.DiGraph()
    network.add_node(_SOURCE)
    network.add_node(_SINK)
    for v, deg in local_degree.items():
        network.add_edge(_SOURCE, v, capacity=big)
        network.add_edge(v, _SINK, capacity=big + 2 * a - b * deg)
        for u in adjacency[v]:
            if inside[u]:
                network.add_edge(v, u, capacity=b)

    cut_value, (source_side, _) = nx.minimum_cut(network, _SOURCE, _SINK)
    if cut_value >= big * len(local_degree):
        return None
    members = np.array(sorted(v for v in source_side if v != _SOURCE), dtype=np.int64)
    return members if len(members) else None


def densest_subgraph(g: IntersectionGraph) -> tuple[Fraction, np.ndarray]:
    """
    Exact maximum density |E(H)|/|V(H)| over nonempty subgraphs H.

    Starts from the best peeling suffix and improves by min cuts until no denser
    set exists. The densest subgraph has minimum degree at least its density, so
    every search is restricted to the ceil(current density)-core.

    Args:
        g (IntersectionGraph): Graph

    Returns:
        tuple[Fraction, np.ndarray]: Density and a sorted witness vertex set
    """
    if g.n_vertices == 0:
        return Fraction(0), np.empty(0, dtype=np.int64)

    adjacency = [g.neighbors(v).tolist() for v in range(g.n_vertices)]
    decomposition = core_decomposition(g)
    best, witness = _peel_start(g, adjacency, decomposition.order)

    rounds = 0
    while True:
        core = np.flatnonzero(decomposition.core_number >= math.ceil(best))
        improving = _improving_set(adjacency, core, best)
        if improving is None:
            break
        rounds += 1
        best = Fraction(_edges_inside(adjacency, improving, g.n_vertices), len(improving))
        witness = improving

    rig_logger.debug(f"[Sparsity] densest subgraph {best} on {len(witness)} vertices after {rounds} improvements")
    return best, witness


def degree_tail(g: IntersectionGraph, thresholds: Sequence[int]) -> list[float]:
    """
    Fraction of vertices with degree at least d, for each threshold d.

    Args:
        g (IntersectionGraph): Graph
        thresholds (Sequence[int]): Nonnegative degree thresholds

    Returns:
        list[float]: One fraction per threshold

    Raises:
        InvalidParameterException: On negative thresholds
    """
    if any(d < 0 for d in thresholds):
        raise InvalidParameterException(f"thresholds must be nonnegative, got {list(thresholds)}")
    if g.n_vertices == 0:
        return [0.0 for _ in thresholds]
    degrees = g.degrees
    return [float(np.count_nonzero(degrees >= d)) / g.n_vertices for d in thresholds]


def concentration_check(b: BipartiteGraph, s: Iterable[int], p: float, epsilon: float) -> ConcentrationCheck:
    """
    Compares |N_B(S)| against (1 ± epsilon)·|S|·m·p.

    Args:
        b (BipartiteGraph): Bipartite graph
        s (Iterable[int]): Node subset
        p (float): Incidence probability the expectation is taken under
        epsilon (float): Tolerance in (0, 1)

    Returns:
        ConcentrationCheck: Observed and expected sizes with both bound flags

    Raises:
        InvalidParameterException: If epsilon is outside (0, 1)
        IndexError: If a node is out of range
    """
    if not 0 < epsilon < 1:
        raise InvalidParameterException(f"epsilon must lie in (0, 1), got {epsilon}")
    subset = np.unique(np.fromiter(s, dtype=np.int64))
    if subset.size and (subset[0] < 0 or subset[-1] >= b.n_nodes):
        raise IndexError(f"subset contains nodes outside [0, {b.n_nodes})")
    observed = len(np.unique(b.incidence[subset].indices)) if subset.size else 0
    expected = len(subset) * b.n_attributes * p
    return ConcentrationCheck(
        subset_size=len(subset),
        observed=observed,
        expected=expected,
        epsilon=epsilon,
        within_lower=observed >= (1 - epsilon) * expected,
        within_upper=observed <= (1 + epsilon) * expected,
    )


def random_concentration_check(
    b: BipartiteGraph, p: float, subset_size: int, epsilon: float, rng: np.random.Generator
) -> ConcentrationCheck:
    """Concentration check on a uniformly random node subset of the given size."""
    if not 0 < subset_size <= b.n_nodes:
        raise InvalidParameterException(f"subset size must lie in [1, {b.n_nodes}], got {subset_size}")
    subset = rng.choice(b.n_nodes, size=subset_size, replace=False)
    return concentration_check(b, subset, p, epsilon)


def sparsity_report(
    g: IntersectionGraph, b: BipartiteGraph | None = None, thresholds: Sequence[int] = ()
) -> SparsityReport:
    """
    Degeneracy, attribute-degree clique bound, exact grad0 and degree tail of one graph.

    Args:
        g (IntersectionGraph): Intersection graph
        b (BipartiteGraph | None): Underlying bipartite graph, if known
        thresholds (Sequence[int]): Degree-tail thresholds

    Returns:
        SparsityReport: Report; attribute fields are 0 when b is None
    """
    decomposition = core_decomposition(g)
    max_attribute_degree = attribute_degree_stats(b)[0] if b is not None else 0
    grad0, witness = densest_subgraph(g)
    tail = degree_tail(g, thresholds)
    return SparsityReport(
        degeneracy=decomposition.degeneracy,
        max_attribute_degree=max_attribute_degree,
        clique_lower_bound=max_attribute_degree,
        grad0_num=grad0.numerator,
        grad0_den=grad0.denominator,
        degree_tail=[DegreeTailPoint(threshold=d, fraction=f) for d, f in zip(thresholds, tail)],
        n_vertices=g.n_vertices,
        edge_count=g.edge_count,
        witness_size=len(witness),
    )
