"""
Low-treewidth colorings through transitive-fraternal augmentation.

Each round orients the current graph along its degeneracy order, every arc
pointing from the later-peeled endpoint to the earlier one, so in-degrees are
bounded by the degeneracy. It then adds an edge for every two in-neighbors
of a common vertex (fraternal) and for every directed 2-path (transitive).
The final coloring is greedy along the degeneracy order of the augmented graph.
"""

from itertools import combinations
from math import comb

import numpy as np

from app.algorithms.graph_core import core_decomposition, induced_subgraph, to_networkx
from app.algorithms.treewidth import measure_treewidth
from app.core.dataclasses import IntersectionGraph
from app.core.enums import TreewidthStatus
from app.core.exceptions import InvalidParameterException, MismatchedResultException
from app.models.reports import ColoringResult, VerificationRecord
from app.modules.logger import rig_logger
from settings import get_settings

settings = get_settings()


def augmentation_rounds(k: int) -> int:
    """One class needs a proper coloring only; each further class needs one more round."""
    return max(k - 2, 0)


def augment(g: IntersectionGraph, rounds: int) -> IntersectionGraph:
    """
    Applies the given number of transitive-fraternal augmentation rounds.

    Args:
        g (IntersectionGraph): Graph
        rounds (int): Number of rounds

    Returns:
        IntersectionGraph: Supergraph of g on the same vertices
    """
    current = g
    for r in range(rounds):
        position = core_decomposition(current).position
        adjacency = [current.neighbors(v).tolist() for v in range(current.n_vertices)]
        incoming = [[u for u in adjacency[v] if position[u] > position[v]] for v in range(current.n_vertices)]

        added = []
        for w in range(current.n_vertices):
            added.extend(combinations(incoming[w], 2))
            for u in incoming[w]:
                added.extend((x, w) for x in incoming[u] if x != w)
        if not added:
            break
        current = IntersectionGraph.from_edges(current.n_vertices, list(current.edges()) + added)
        rig_logger.debug(f"[Coloring] round {r + 1}: {current.edge_count} edges")
    return current


def greedy_coloring(g: IntersectionGraph, order: np.ndarray) -> np.ndarray:
    """
    Smallest-free-color greedy, visiting vertices from the end of order to its start.

    Args:
        g (IntersectionGraph): Graph
        order (np.ndarray): Degeneracy (removal) order

    Returns:
        np.ndarray: Color per vertex
    """
    colors = np.full(g.n_vertices, -1, dtype=np.int64)
    for v in order[::-1].tolist():
        used = {int(c) for c in colors[g.neighbors(v)] if c >= 0}
        color = 0
        while color in used:
            color += 1
        colors[v] = color
    return colors


def low_tw_coloring(g: IntersectionGraph, k: int) -> ColoringResult:
    """
    Coloring in which any i < k color classes are meant to induce treewidth <= i.

    Args:
        g (IntersectionGraph): Graph
        k (int): Target parameter, at least 1

    Returns:
        ColoringResult: Proper coloring of g (verification left empty)

    Raises:
        InvalidParameterException: If k < 1
    """
    if k < 1:
        raise InvalidParameterException(f"k must be >= 1, got {k}")
    rounds = augmentation_rounds(k)
    augmented = augment(g, rounds)
    colors = greedy_coloring(augmented, core_decomposition(augmented).order)
    num_colors = len(np.unique(colors))
    rig_logger.debug(f"[Coloring] k={k}: {num_colors} colors after {rounds} rounds")
    return ColoringResult(k=k, num_colors=num_colors, colors=colors.tolist(), augmentation_rounds=rounds)


def _class_subsets(palette: list[int], i: int, samples: int, rng: np.random.Generator) -> list[tuple[int, ...]]:
    """All i-subsets of the palette when there are at most samples of them, else samples random ones."""
    if comb(len(palette), i) <= samples:
        return list(combinations(palette, i))
    return [tuple(sorted(rng.choice(palette, size=i, replace=False).tolist())) for _ in range(samples)]


def verify_coloring(
    g: IntersectionGraph,
    result: ColoringResult,
    samples: int | None = None,
    size_cap: int | None = None,
    seed: int = 0,
) -> list[VerificationRecord]:
    """
    Checks the treewidth claim on sampled unions of i < k color classes.

    Args:
        g (IntersectionGraph): Graph the coloring was computed for
        result (ColoringResult): Coloring to check
        samples (int | None): Subsets per i, VERIFY_SAMPLES by default
        size_cap (int | None): Cap for exact treewidth, TREEWIDTH_SIZE_CAP by default
        seed (int): Seed of the subset sampler

    Returns:
        list[VerificationRecord]: One record per checked subset

    Raises:
        MismatchedResultException: If the coloring does not cover exactly the vertices of g
    """
    if len(result.colors) != g.n_vertices:
        raise MismatchedResultException(
            f"coloring has {len(result.colors)} entries but the graph has {g.n_vertices} vertices"
        )
    samples = settings.VERIFY_SAMPLES if samples is None else samples
    colors = np.asarray(result.colors, dtype=np.int64)
    palette = sorted(set(result.colors))
    rng = np.random.default_rng(seed)

    records = []
    for i in range(1, min(result.k, len(palette) + 1)):
        for subset in _class_subsets(palette, i, samples, rng):
            members = np.flatnonzero(np.isin(colors, subset))
            induced, _ = induced_subgraph(g, members)
            measured, status = measure_treewidth(to_networkx(induced), i, size_cap)
            if status == TreewidthStatus.SKIPPED:
                passed = True
            else:
                passed = status != TreewidthStatus.LOWER_BOUND and measured <= i
            records.append(
                VerificationRecord(
                    class_subset=list(subset),
                    induced_size=len(members),
                    claimed_bound=i,
                    measured_treewidth=measured,
                    status=status,
                    passed=passed,
                )
            )
    failures = sum(not record.passed for record in records)
    if failures:
        rig_logger.warning(f"[Coloring] {failures} of {len(records)} verification records failed (k={result.k})")
    return records
