"""
Treewidth tests used to verify low-treewidth colorings on small induced subgraphs.
"""

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_fill_in

from app.core.enums import TreewidthStatus
from app.core.exceptions import CapExceededException
from settings import get_settings

settings = get_settings()


def is_forest(graph: nx.Graph) -> bool:
    """Treewidth <= 1 test; the null graph counts as a forest."""
    if graph.number_of_nodes() == 0:
        return True
    return nx.is_forest(graph)


def treewidth_at_most_two(graph: nx.Graph) -> bool:
    """
    Series-parallel reduction: delete vertices of degree <= 1 and suppress
    vertices of degree 2 (joining their neighbors) until nothing applies.

    Args:
        graph (nx.Graph): Simple graph

    Returns:
        bool: True iff the graph reduces to nothing, i.e. has treewidth <= 2
    """
    adjacency = {v: set(graph.neighbors(v)) for v in graph.nodes}
    pending = [v for v, nbrs in adjacency.items() if len(nbrs) <= 2]
    while pending:
        v = pending.pop()
        if v not in adjacency or len(adjacency[v]) > 2:
            continue
        nbrs = adjacency.pop(v)
        for u in nbrs:
            adjacency[u].discard(v)
        if len(nbrs) == 2:
            u, w = nbrs
            adjacency[u].add(w)
            adjacency[w].add(u)
        pending.extend(u for u in nbrs if len(adjacency[u]) <= 2)
    return not adjacency


def _eliminate_simplicial(adjacency: dict[int, set[int]]) -> int:
    """
    Removes simplicial vertices in place; returns the largest degree removed.

    A simplicial vertex v gives tw(G) = max(deg(v), tw(G - v)).
    """
    lower = 0
    changed = True
    while changed:
        changed = False
        for v in list(adjacency):
            nbrs = adjacency[v]
            if all(w in adjacency[u] for u in nbrs for w in nbrs if u != w):
                lower = max(lower, len(nbrs))
                for u in nbrs:
                    adjacency[u].discard(v)
                del adjacency[v]
                changed = True
    return lower


def _q_size(subset: int, v: int, masks: list[int]) -> int:
    """|Q(S, v)|: vertices outside S + v reachable from v through S."""
    visited = 1 << v
    frontier = [v]
    outside = 0
    while frontier:
        u = frontier.pop()
        nbrs = masks[u]
        outside |= nbrs & ~subset
        inner = nbrs & subset & ~visited
        visited |= inner
        while inner:
            low = inner & -inner
            frontier.append(low.bit_length() - 1)
            inner ^= low
    outside &= ~(1 << v)
    return outside.bit_count()


def _dp_treewidth(adjacency: dict[int, set[int]], upper: int) -> int:
    """
    Exact treewidth by dynamic programming over elimination prefixes:
    TW(S + v) = min over v of max(TW(S), |Q(S, v)|), pruned at the upper bound.

    Args:
        adjacency (dict[int, set[int]]): Connected graph
        upper (int): Known upper bound on its treewidth

    Returns:
        int: Treewidth
    """
    index = {v: i for i, v in enumerate(sorted(adjacency))}
    masks = [0] * len(index)
    for v, nbrs in adjacency.items():
        masks[index[v]] = sum(1 << index[u] for u in nbrs)
    size = len(index)
    full = (1 << size) - 1

    level = {0: -1}
    for _ in range(size):
        following: dict[int, int] = {}
        for subset, width in level.items():
            for v in range(size):
                if subset >> v & 1:
                    continue
                value = max(width, _q_size(subset, v, masks))
                if value >= upper:
                    continue
                grown = subset | (1 << v)
                if value < following.get(grown, upper):
                    following[grown] = value
        if not following:
            return upper
        level = following
    return level.get(full, upper)


def exact_treewidth(graph: nx.Graph, size_cap: int | None = None) -> int:
    """
    Exact treewidth: simplicial reductions, then DP on each remaining component.

    Args:
        graph (nx.Graph): Simple graph
        size_cap (int | None): Largest component handed to the DP, TREEWIDTH_SIZE_CAP by default

    Returns:
        int: Treewidth (0 for edgeless graphs)

    Raises:
        CapExceededException: If a reduced component exceeds size_cap
    """
    cap = settings.TREEWIDTH_SIZE_CAP if size_cap is None else size_cap
    width = 0
    for nodes in nx.connected_components(graph):
        adjacency = {v: set(graph.neighbors(v)) for v in nodes}
        width = max(width, _eliminate_simplicial(adjacency))
        if not adjacency:
            continue
        rest = graph.subgraph(adjacency)
        for part in nx.connected_components(rest):
            if len(part) > cap:
                raise CapExceededException("exact treewidth", len(part), cap)
            piece = rest.subgraph(part)
            upper, _ = treewidth_min_fill_in(piece)
            if upper <= width:
                continue
            width = max(width, _dp_treewidth({v: set(piece.neighbors(v)) for v in part}, upper))
    return width


def measure_treewidth(graph: nx.Graph, bound: int, size_cap: int | None = None) -> tuple[int | None, TreewidthStatus]:
    """
    Decides whether tw(graph) <= bound with the cheapest sufficient test.

    Forest and series-parallel checks are exact; a min-fill elimination of
    width <= bound certifies the bound. A bound <= 2 fails as soon as the graph
    is not series-parallel. Otherwise the exact DP runs when every reduced
    component fits under the cap.

    Args:
        graph (nx.Graph): Induced subgraph to test
        bound (int): Claimed treewidth bound
        size_cap (int | None): Cap for the exact DP

    Returns:
        tuple[int | None, TreewidthStatus]: Measured value (exact, certified upper
        bound, or lower bound) and how it was obtained; None when skipped
    """
    if graph.number_of_edges() == 0:
        return 0, TreewidthStatus.EXACT
    if is_forest(graph):
        return 1, TreewidthStatus.EXACT
    if treewidth_at_most_two(graph):
        return 2, TreewidthStatus.EXACT
    upper, _ = treewidth_min_fill_in(graph)
    if upper <= bound:
        return upper, TreewidthStatus.CERTIFIED
    if upper == 3:
        return 3, TreewidthStatus.EXACT
    if bound <= 2:
        # not series-parallel, so tw >= 3 > bound
        return 3, TreewidthStatus.LOWER_BOUND
    try:
        return exact_treewidth(graph, size_cap), TreewidthStatus.EXACT
    except CapExceededException:
        return None, TreewidthStatus.SKIPPED
