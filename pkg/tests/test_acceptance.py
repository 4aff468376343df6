"""
End-to-end statistical checks at desk scale. Deselected by default, run with ``pytest -m slow``.
"""

import math
from fractions import Fraction

import pytest

from app.algorithms.coloring import low_tw_coloring, verify_coloring
from app.algorithms.graph_core import components, core_decomposition, induced_subgraph
from app.algorithms.hyperbolicity import (
    certificate_from_special_path,
    find_k_special_paths,
    four_point_delta,
    four_point_delta_naive,
)
from app.algorithms.model import derive_params, project, sample_bipartite
from app.algorithms.sparsity import densest_subgraph
from app.core.enums import MeasurementNames
from app.main import ExperimentRunner
from app.utils import get_preset
from tests.utils import brute_force_density, cycle_graph, random_corpus, random_tree, theta_graph

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def corpus():
    return random_corpus(200, 12, seed=2024)


def _run(name: str, **update):
    config = get_preset(name)
    if update:
        config = config.model_copy(update=update)
    return ExperimentRunner(show_progress=False).run(config)


def test_dense_regime_degeneracy_grows_polynomially():
    result = _run("degen-alpha-0.5")
    ratio = result.cell(16000, "degeneracy").median / result.cell(1000, "degeneracy").median
    assert 1.5 <= ratio <= 3.5


def test_sparse_regime_degeneracy_stays_flat():
    result = _run("degen-alpha-1.5", measurements=[MeasurementNames.degeneracy, MeasurementNames.max_attr_degree])
    assert result.cell(8000, "degeneracy").median <= result.cell(500, "degeneracy").median + 2
    for n in result.config.n_values:
        values = result.cell(n, "max_attr_degree").values
        assert sum(v <= 10 for v in values) >= 9


def test_coloring_sizes_flatten():
    result = _run("fig-expdata-desk", n_values=[1000, 8000], measurements=[MeasurementNames.coloring_k], coloring_k=[2, 3])
    for k in (2, 3):
        column = f"coloring_k{k}"
        assert result.cell(8000, column).median <= 1.5 * result.cell(1000, column).median


@pytest.mark.parametrize("k", [2, 3])
def test_colorings_of_sampled_graphs_verify(k):
    for seed in range(10):
        g = project(sample_bipartite(derive_params(1.5, 0.1, 5, 2000, seed=seed)))
        records = verify_coloring(g, low_tw_coloring(g, k), samples=100, seed=seed)
        assert all(record.passed for record in records)


def test_four_point_delta_matches_enumeration(corpus):
    for g in corpus:
        labeling = components(g)
        for component in range(labeling.count):
            sub, _ = induced_subgraph(g, labeling.members(component))
            assert four_point_delta(g, component) == four_point_delta_naive(sub)
    assert four_point_delta(cycle_graph(4)) == 1
    assert four_point_delta(cycle_graph(5)) == Fraction(1, 2)
    for seed in range(20):
        assert four_point_delta(random_tree(12, seed)) == 0


def test_planted_special_paths_are_found():
    for k in (4, 8, 16):
        found = find_k_special_paths(theta_graph([k, 3, 3]))
        assert k in [length for length, _ in found]
        assert certificate_from_special_path(k) == k // 4
    for seed in range(50):
        assert find_k_special_paths(random_tree(int(5 + seed % 30), seed)) == []


def test_hyperbolicity_grows_with_n():
    result = _run("hyperbolicity-growth", measurements=[MeasurementNames.hyperbolicity])
    assert result.cell(8000, "hyperbolicity").median > result.cell(500, "hyperbolicity").median


def test_densest_subgraph_is_exact(corpus):
    for g in corpus:
        grad0, _ = densest_subgraph(g)
        assert grad0 == brute_force_density(g)
        assert core_decomposition(g).degeneracy <= math.ceil(2 * grad0)


def test_neighborhoods_concentrate():
    result = _run("concentration-alpha-1.5")
    # both bounds together hold with probability about 0.85 per trial at these sizes
    assert sum(result.cell(5000, "concentration_within_s50").values) >= 40
    assert sum(result.cell(5000, "concentration_lower_s50").values) >= 45

