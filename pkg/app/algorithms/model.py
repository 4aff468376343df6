"""
Random intersection graph model G(n, m, p).

Every node/attribute pair of the bipartite graph B is an incidence
independently with probability p; two nodes are adjacent in the
intersection graph iff they share an attribute.
"""

import math

import numpy as np

from app.core.dataclasses import BipartiteGraph, IntersectionGraph
from app.core.exceptions import InvalidParameterException
from app.models.params import ModelParams
from app.modules.logger import rig_logger
from settings import get_settings

settings = get_settings()

# cells of the dense Bernoulli matrix drawn per batch (32 MiB of float64)
DENSE_CELL_BATCH = 1 << 22
# guards floor() against values like 28.999999999999996
FLOOR_TOLERANCE = 1e-9


def derive_params(alpha: float, beta: float, gamma: float, n: int, seed: int = 0) -> ModelParams:
    """
    Derives raw (n, m, p) from the scaling triple.

    m = floor(beta * n^alpha) (at least 1) and p = min(1, gamma * n^(-(1+alpha)/2)).

    Args:
        alpha (float): Attribute-count exponent
        beta (float): Attribute-count multiplier
        gamma (float): Edge-probability multiplier
        n (int): Number of nodes
        seed (int): Generator seed

    Returns:
        ModelParams: Parameters with the scaling triple and the clamping flag recorded

    Raises:
        InvalidParameterException: On non-positive inputs
    """
    for name, value in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not value > 0:
            raise InvalidParameterException(f"{name} must be positive, got {value}")
    if n < 1:
        raise InvalidParameterException(f"n must be >= 1, got {n}")

    m = max(1, math.floor(beta * n**alpha + FLOOR_TOLERANCE))
    raw_p = gamma * n ** (-(1 + alpha) / 2)
    p_clamped = raw_p > 1.0
    p = 1.0 if p_clamped else raw_p
    if p_clamped:
        rig_logger.debug(f"[Model] p={raw_p} clamped to 1 (alpha={alpha}, gamma={gamma}, n={n})")
    return ModelParams(n=n, m=m, p=p, seed=seed, alpha=alpha, beta=beta, gamma=gamma, p_clamped=p_clamped).check()


def _sparse_positions(rng: np.random.Generator, total: int, p: float) -> np.ndarray:
    """
    Successful indices of a Bernoulli(p) process on [0, total) by geometric gap skipping.

    Args:
        rng (np.random.Generator): Seeded generator
        total (int): Length of the pair index space
        p (float): Success probability, 0 < p < 1

    Returns:
        np.ndarray: Increasing pair indices
    """
    batch = max(1024, int(total * p * 1.1) + 16)
    chunks = []
    current = -1
    while True:
        steps = current + np.cumsum(rng.geometric(p, size=batch))
        inside = steps[steps < total]
        chunks.append(inside)
        if len(inside) < batch:
            break
        current = int(inside[-1])
    return np.concatenate(chunks)


def _dense_positions(rng: np.random.Generator, n: int, m: int, p: float) -> tuple[np.ndarray, np.ndarray]:
    # whole rows per batch; the draws are the same for any batch size
    batch = max(1, DENSE_CELL_BATCH // m)
    nodes, attributes = [], []
    for start in range(0, n, batch):
        rows = min(batch, n - start)
        hit_rows, hit_cols = np.nonzero(rng.random((rows, m)) < p)
        nodes.append(hit_rows + start)
        attributes.append(hit_cols)
    return np.concatenate(nodes), np.concatenate(attributes)


def sample_bipartite(params: ModelParams) -> BipartiteGraph:
    """
    Samples the bipartite node/attribute graph.

    For p below SPARSE_SAMPLING_THRESHOLD the incidences are drawn by geometric
    gap skipping over the n·m pair index space (pair index = node·m + attribute),
    otherwise by one uniform draw per pair. Both paths are reproducible for a
    fixed seed, but they produce different graphs for the same seed.

    Args:
        params (ModelParams): Model parameters

    Returns:
        BipartiteGraph: Sampled graph

    Raises:
        InvalidParameterException: If params violate their invariants
    """
    params.check()
    n, m, p = params.n, params.m, params.p
    rng = np.random.default_rng(params.seed)

    if p == 0.0:
        nodes = attributes = np.empty(0, dtype=np.int64)
    elif p < settings.SPARSE_SAMPLING_THRESHOLD:
        positions = _sparse_positions(rng, n * m, p)
        nodes, attributes = np.divmod(positions, m)
    else:
        nodes, attributes = _dense_positions(rng, n, m, p)

    b = BipartiteGraph.from_incidences(n, m, nodes, attributes)
    rig_logger.debug(f"[Model] sampled n={n} m={m} p={p:.3g} seed={params.seed}: {b.edge_count} incidences")
    return b


def project(b: BipartiteGraph) -> IntersectionGraph:
    """
    Projects B onto its nodes: u ~ v iff they share an attribute.

    Args:
        b (BipartiteGraph): Bipartite graph

    Returns:
        IntersectionGraph: Simple graph on the node set
    """
    shared = b.incidence @ b.transposed
    return IntersectionGraph.from_csr(shared)


def restrict(b: BipartiteGraph, excluded_nodes: np.ndarray, excluded_attributes: np.ndarray) -> BipartiteGraph:
    """
    Keeps only incidences in (V minus excluded_nodes) x (A minus excluded_attributes).

    Indices are not renumbered, so excluded nodes stay as isolated vertices.

    Args:
        b (BipartiteGraph): Bipartite graph
        excluded_nodes (np.ndarray): Node indices to drop
        excluded_attributes (np.ndarray): Attribute indices to drop

    Returns:
        BipartiteGraph: Restricted graph on the same index sets
    """
    coo = b.incidence.tocoo()
    keep = ~np.isin(coo.row, excluded_nodes) & ~np.isin(coo.col, excluded_attributes)
    return BipartiteGraph.from_incidences(b.n_nodes, b.n_attributes, coo.row[keep], coo.col[keep])
