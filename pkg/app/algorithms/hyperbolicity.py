"""
Metric tree-likeness: exact four-point delta on a component and the
k-special path machinery that certifies a slim-triangle lower bound of floor(k/4).

The two quantities answer different definitions of hyperbolicity and are
reported side by side, never merged.
"""

from collections.abc import Iterable
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple

import networkx as nx
import numpy as np
from scipy.sparse.csgraph import breadth_first_order

from app.algorithms.graph_core import (
    UNREACHABLE,
    all_pairs_distances,
    bfs_distances,
    components,
    induced_subgraph,
    remove_vertices,
)
from app.algorithms.model import project, restrict
from app.core.dataclasses import BipartiteGraph, ComponentLabeling, IntersectionGraph
from app.core.enums import SpecialPathCondition
from app.core.exceptions import (
    CapExceededException,
    DisconnectedGraphException,
    InvalidParameterException,
    InvalidQueryException,
)
from app.models.reports import BipartitePathCheck, BipartitePathQuery, HyperbolicityReport
from app.modules.logger import rig_logger
from settings import get_settings

settings = get_settings()


class ExposedGraph(NamedTuple):
    graph: IntersectionGraph
    labeling: ComponentLabeling
    nodes: np.ndarray


def _component_graph(g: IntersectionGraph, component: int | None) -> IntersectionGraph:
    labeling = components(g)
    if component is None:
        if labeling.count > 1:
            raise DisconnectedGraphException(
                f"graph has {labeling.count} components; choose one for the four-point delta"
            )
        return g
    sub, _ = induced_subgraph(g, labeling.members(component))
    return sub


def _far_apart_mask(g: IntersectionGraph, dist: np.ndarray) -> np.ndarray:
    """
    Pairs (u, v) such that no neighbor of u is farther from v and no neighbor of v is farther from u.

    Args:
        g (IntersectionGraph): Connected graph with at least two vertices
        dist (np.ndarray): Its distance matrix

    Returns:
        np.ndarray: Boolean matrix of far-apart pairs
    """
    farthest = np.maximum.reduceat(dist[g.indices], g.indptr[:-1], axis=0)
    return (farthest <= dist) & (farthest.T <= dist)


def _twice_delta(g: IntersectionGraph, dist: np.ndarray) -> int:
    """
    Twice the four-point delta of a connected graph by the far-apart pair scan.

    Pairs are visited by decreasing distance; each is combined with every pair
    seen before it. A quadruple whose largest pairing is {(x, y), (z, w)} has
    L1 - L2 <= min(d(x, y), d(z, w)), so the scan stops once the current pair
    distance cannot beat the best value. Far-apart pairs suffice to attain the maximum.

    Args:
        g (IntersectionGraph): Connected graph
        dist (np.ndarray): Its distance matrix

    Returns:
        int: 2 * delta
    """
    n = g.n_vertices
    if n < 4:
        return 0
    full = dist.astype(np.int64)
    far = _far_apart_mask(g, dist)
    rows, cols = np.nonzero(np.triu(far, k=1))
    lengths = full[rows, cols]
    order = np.argsort(-lengths, kind="stable")
    xs, ys, ds = rows[order], cols[order], lengths[order]

    best = 0
    for idx in range(1, len(ds)):
        if ds[idx] <= best:
            break
        a, b = xs[idx], ys[idx]
        cs, es = xs[:idx], ys[:idx]
        s1 = ds[idx] + ds[:idx]
        s2 = full[a, cs] + full[b, es]
        s3 = full[a, es] + full[b, cs]
        top = np.maximum(np.maximum(s1, s2), s3)
        low = np.minimum(np.minimum(s1, s2), s3)
        middle = s1 + s2 + s3 - top - low
        best = max(best, int((top - middle).max()))
    return best


def four_point_delta(g: IntersectionGraph, component: int | None = None, size_cap: int | None = None) -> Fraction:
    """
    Exact four-point delta: max over quadruples of (L1 - L2)/2.

    Args:
        g (IntersectionGraph): Graph
        component (int | None): Component id (see components); required if g is disconnected
        size_cap (int | None): Largest allowed component, DELTA_SIZE_CAP by default

    Returns:
        Fraction: delta, a multiple of 1/2

    Raises:
        CapExceededException: If the component is larger than size_cap
        DisconnectedGraphException: If component is None and g is disconnected
    """
    cap = settings.DELTA_SIZE_CAP if size_cap is None else size_cap
    sub = _component_graph(g, component)
    if sub.n_vertices > cap:
        raise CapExceededException("four-point delta", sub.n_vertices, cap)
    if sub.n_vertices < 4:
        return Fraction(0)
    twice = _twice_delta(sub, all_pairs_distances(sub))
    rig_logger.debug(f"[Hyperbolicity] four-point delta {twice}/2 on {sub.n_vertices} vertices")
    return Fraction(twice, 2)


def four_point_delta_naive(g: IntersectionGraph, size_cap: int | None = None) -> Fraction:
    """
    Exhaustive quadruple enumeration; the oracle for four_point_delta.

    Args:
        g (IntersectionGraph): Connected graph
        size_cap (int | None): Largest allowed graph, NAIVE_DELTA_CAP by default

    Returns:
        Fraction: delta

    Raises:
        CapExceededException: If g is larger than size_cap
        DisconnectedGraphException: If g is disconnected
    """
    cap = settings.NAIVE_DELTA_CAP if size_cap is None else size_cap
    if g.n_vertices > cap:
        raise CapExceededException("naive four-point delta", g.n_vertices, cap)
    dist = all_pairs_distances(g).astype(np.int64)
    if np.any(dist == UNREACHABLE):
        raise DisconnectedGraphException("naive four-point delta needs a connected graph")
    best = 0
    for x, y, z, w in combinations(range(g.n_vertices), 4):
        sums = sorted((dist[x, y] + dist[z, w], dist[x, z] + dist[y, w], dist[x, w] + dist[y, z]))
        best = max(best, int(sums[2] - sums[1]))
    return Fraction(best, 2)


def capped_giant(g: IntersectionGraph, size_cap: int | None = None) -> IntersectionGraph:
    """
    Giant component, or the first size_cap of its vertices in BFS order from its smallest vertex.

    The result is always connected, so four_point_delta applies to it directly.

    Args:
        g (IntersectionGraph): Graph
        size_cap (int | None): Largest result, DELTA_SIZE_CAP by default

    Returns:
        IntersectionGraph: Connected induced subgraph (empty when g is)
    """
    cap = settings.DELTA_SIZE_CAP if size_cap is None else size_cap
    labeling = components(g)
    if labeling.count == 0:
        return g
    members = labeling.members(labeling.giant)
    if len(members) > cap:
        order = breadth_first_order(g.csr(), int(members[0]), directed=False, return_predecessors=False)
        members = order[:cap]
    sub, _ = induced_subgraph(g, members)
    return sub


def certificate_from_special_path(k: int) -> int:
    """
    Slim-triangle hyperbolicity lower bound certified by a k-special path.

    Args:
        k (int): Number of edges of the special path

    Returns:
        int: floor(k / 4)
    """
    if k < 1:
        raise InvalidParameterException(f"k must be >= 1, got {k}")
    return k // 4


def _walk(adjacency: list[list[int]], degree: np.ndarray, seen: np.ndarray, prev: int, cur: int):
    segment = []
    while degree[cur] == 2 and not seen[cur]:
        seen[cur] = True
        segment.append(cur)
        a, b = adjacency[cur]
        prev, cur = cur, (b if a == prev else a)
    return segment, cur


def find_k_special_paths(g: IntersectionGraph) -> list[tuple[int, list[int]]]:
    """
    Maximal paths with all internal vertices of degree 2 that lie on a cycle.

    Degree-2 vertices are grouped into maximal chains. A chain closing into a
    pure cycle gives one path around it (first and last vertex equal). An open
    chain between x and y is special when x == y (a cycle hanging at x) or when
    its edges are not bridges, i.e. x and y stay connected once the chain
    interior is deleted.

    Args:
        g (IntersectionGraph): Graph

    Returns:
        list[tuple[int, list[int]]]: (k, path) pairs by decreasing k, k = number of edges
    """
    degree = g.degrees
    adjacency = [g.neighbors(v).tolist() for v in range(g.n_vertices)]
    seen = np.zeros(g.n_vertices, dtype=bool)
    bridges = None
    found = []

    for start in np.flatnonzero(degree == 2).tolist():
        if seen[start]:
            continue
        seen[start] = True
        left, right = adjacency[start]
        forward, y = _walk(adjacency, degree, seen, start, right)
        if y == start:
            cycle = [start] + forward
            pivot = cycle.index(min(cycle))
            cycle = cycle[pivot:] + cycle[:pivot]
            if cycle[1] > cycle[-1]:
                cycle = [cycle[0]] + cycle[:0:-1]
            found.append((len(cycle), cycle + [cycle[0]]))
            continue
        backward, x = _walk(adjacency, degree, seen, start, left)
        interior = backward[::-1] + [start] + forward
        path = [x] + interior + [y]
        if x != y:
            if bridges is None:
                bridges = {frozenset(edge) for edge in nx.bridges(nx.Graph(list(g.edges())))}
            if frozenset((x, interior[0])) in bridges:
                continue
        found.append((len(path) - 1, path))

    found.sort(key=lambda item: (-item[0], item[1]))
    return found


def is_k_special_path(g: IntersectionGraph, path: list[int]) -> bool:
    """
    Checks the k-special path definition directly, by deletion and BFS.

    Args:
        g (IntersectionGraph): Graph
        path (list[int]): v_1..v_{k+1}; v_1 == v_{k+1} encodes the closed case

    Returns:
        bool: True if path is a k-special path of g
    """
    if len(path) < 2:
        return False
    if any(not g.has_edge(u, v) for u, v in zip(path, path[1:])):
        return False
    interior = path[1:-1]
    if len(set(interior)) != len(interior) or any(g.degrees[v] != 2 for v in interior):
        return False
    x, y = path[0], path[-1]
    if x in interior or y in interior:
        return False
    if x == y:
        return len(path) >= 4
    return bool(bfs_distances(remove_vertices(g, interior), x)[y] != UNREACHABLE)


def exposed_giant(
    b: BipartiteGraph, excluded_nodes: Iterable[int], excluded_attributes: Iterable[int]
) -> ExposedGraph:
    """
    Projection of B restricted to (V minus X) x (A minus Y), with its components.

    Args:
        b (BipartiteGraph): Bipartite graph
        excluded_nodes (Iterable[int]): X
        excluded_attributes (Iterable[int]): Y

    Returns:
        ExposedGraph: Graph on V minus X (relabeled), its labeling, and the original node ids
    """
    x = np.unique(np.fromiter(excluded_nodes, dtype=np.int64))
    y = np.unique(np.fromiter(excluded_attributes, dtype=np.int64))
    full = project(restrict(b, x, y))
    kept = np.setdiff1d(np.arange(b.n_nodes), x)
    graph, nodes = induced_subgraph(full, kept)
    return ExposedGraph(graph=graph, labeling=components(graph), nodes=nodes)


def _validate_query(b: BipartiteGraph, q: BipartitePathQuery) -> None:
    path = q.path
    if len(path) < 3 or len(path) % 2 == 0:
        raise InvalidQueryException(f"path needs an odd number >= 3 of vertices, got {len(path)}")
    if any(not 0 <= v < b.n_nodes for v in q.x):
        raise InvalidQueryException("X contains indices outside the node set")
    if any(not 0 <= a < b.n_attributes for a in q.y):
        raise InvalidQueryException("Y contains indices outside the attribute set")
    attributes, nodes = path[0::2], path[1::2]
    if any(not 0 <= a < b.n_attributes for a in attributes) or any(not 0 <= v < b.n_nodes for v in nodes):
        raise InvalidQueryException("path index out of range")
    if len(set(attributes)) != len(attributes) or len(set(nodes)) != len(nodes):
        raise InvalidQueryException("path repeats a vertex")
    y = set(q.y)
    if attributes[0] in y or attributes[-1] in y:
        raise InvalidQueryException("path endpoints must lie in A minus Y")
    if any(a not in y for a in attributes[1:-1]):
        raise InvalidQueryException("interior attributes of the path must lie in Y")
    if any(v not in set(q.x) for v in nodes):
        raise InvalidQueryException("path nodes must lie in X")


def check_k_special_bipartite(b: BipartiteGraph, q: BipartitePathQuery) -> BipartitePathCheck:
    """
    Checks a k-special bipartite path on (X, Y, C) condition by condition.

    Args:
        b (BipartiteGraph): Bipartite graph
        q (BipartitePathQuery): Candidate path and index sets

    Returns:
        BipartitePathCheck: Verdict naming the first failing condition

    Raises:
        InvalidQueryException: If the query is structurally invalid
    """
    _validate_query(b, q)
    path, x = q.path, set(q.x)
    k = q.k
    v = [None] + path  # 1-based view: v[1] .. v[2k-1]

    def neighbors_of(i: int) -> set[int]:
        if i % 2:
            return set(b.attribute_neighbors(v[i]).tolist())
        return set(b.node_neighbors(v[i]).tolist())

    def fail(condition: SpecialPathCondition, details: str) -> BipartitePathCheck:
        return BipartitePathCheck(accepted=False, failed_condition=condition, details=details)

    for i in range(1, 2 * k - 1):
        attribute, node = (v[i], v[i + 1]) if i % 2 else (v[i + 1], v[i])
        if node not in set(b.attribute_neighbors(attribute).tolist()):
            return fail(SpecialPathCondition.STRUCTURE, f"v_{i} and v_{i + 1} are not adjacent in B")

    last = 2 * k - 1
    if neighbors_of(1) & x != {v[2]}:
        return fail(SpecialPathCondition.ENDPOINT_NEIGHBORS, "N_B(v_1) ∩ X differs from {v_2}")
    if neighbors_of(last) & x != {v[last - 1]}:
        return fail(SpecialPathCondition.ENDPOINT_NEIGHBORS, f"N_B(v_{last}) ∩ X differs from {{v_{last - 1}}}")

    for i in range(1, k - 1):
        if neighbors_of(2 * i + 1) != {v[2 * i], v[2 * i + 2]}:
            return fail(SpecialPathCondition.ATTRIBUTE_NEIGHBORS, f"N_B(v_{2 * i + 1}) differs from its path neighbors")

    attribute_degrees = b.attribute_degrees
    for i in range(1, k):
        shared = {a for a in neighbors_of(2 * i) if attribute_degrees[a] >= 2}
        if shared != {v[2 * i - 1], v[2 * i + 1]}:
            return fail(SpecialPathCondition.NODE_NEIGHBORS, f"v_{2 * i} shares attributes off the path")

    exposed = exposed_giant(b, q.x, q.y)
    if not 0 <= q.component < exposed.labeling.count:
        raise InvalidQueryException(f"component {q.component} does not exist in the exposed graph")
    members = set(exposed.nodes[exposed.labeling.members(q.component)].tolist())
    if not (neighbors_of(1) & members) or not (neighbors_of(last) & members):
        return fail(SpecialPathCondition.COMPONENT, "an endpoint has no neighbor in C")

    return BipartitePathCheck(accepted=True)


def hyperbolicity_report(
    g: IntersectionGraph, size_cap: int | None = None, strict: bool = False
) -> HyperbolicityReport:
    """
    Four-point delta of the giant component (when within the cap) and the best special-path certificate.

    Args:
        g (IntersectionGraph): Graph
        size_cap (int | None): Cap for the four-point delta
        strict (bool): Raise instead of leaving the delta out when the giant is over the cap

    Returns:
        HyperbolicityReport: Report with separate delta and certificate fields
    """
    labeling = components(g)
    component_size = int(labeling.sizes[labeling.giant]) if labeling.count else 0
    delta_num = None
    if labeling.count:
        try:
            delta_num = int(four_point_delta(g, labeling.giant, size_cap) * 2)
        except CapExceededException as e:
            if strict:
                raise
            rig_logger.info(f"[Hyperbolicity] four-point delta skipped: {e}")

    special = find_k_special_paths(g)
    if not special:
        return HyperbolicityReport(delta_num=delta_num, component_size=component_size)
    k, path = special[0]
    return HyperbolicityReport(
        delta_num=delta_num,
        component_size=component_size,
        special_k=k,
        certificate=certificate_from_special_path(k),
        witness=path,
    )
