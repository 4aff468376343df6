import networkx as nx
import pytest

from app.algorithms.coloring import augment, augmentation_rounds, greedy_coloring, low_tw_coloring, verify_coloring
from app.algorithms.graph_core import core_decomposition
from app.algorithms.model import derive_params, project, sample_bipartite
from app.core.dataclasses import IntersectionGraph
from app.core.enums import TreewidthStatus
from app.core.exceptions import InvalidParameterException, MismatchedResultException
from app.models.params import ModelParams
from app.models.reports import ColoringResult
from tests.utils import from_nx, random_tree


def _is_proper(g: IntersectionGraph, colors: list[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges())


@pytest.mark.parametrize("k, rounds", [(1, 0), (2, 0), (3, 1), (5, 3)])
def test_augmentation_rounds(k, rounds):
    assert augmentation_rounds(k) == rounds


@pytest.mark.parametrize("k, expected", [(1, 2), (2, 2), (3, 3)])
def test_path_coloring_sizes(path4, k, expected):
    result = low_tw_coloring(path4, k)
    assert result.num_colors == expected
    assert _is_proper(path4, result.colors)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_clique_needs_all_colors(k4, k):
    assert low_tw_coloring(k4, k).num_colors == 4


def test_odd_cycle_needs_three_colors(c5):
    assert low_tw_coloring(c5, 2).num_colors == 3


def test_edgeless_graph_uses_one_color(empty10):
    result = low_tw_coloring(empty10, 3)
    assert result.num_colors == 1
    assert result.colors == [0] * 10


def test_rejects_k_below_one(path4):
    with pytest.raises(InvalidParameterException):
        low_tw_coloring(path4, 0)


def test_augmentation_adds_transitive_edges(path4):
    augmented = augment(path4, 1)
    assert set(augmented.edges()) == {(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)}
    assert augment(path4, 0) is path4


def test_augmentation_is_a_supergraph(small_corpus):
    for g in small_corpus:
        augmented = augment(g, 2)
        assert set(g.edges()) <= set(augmented.edges())


def test_greedy_coloring_is_proper(small_corpus):
    for g in small_corpus:
        colors = greedy_coloring(g, core_decomposition(g).order)
        assert _is_proper(g, colors.tolist())
        assert colors.max(initial=-1) <= core_decomposition(g).degeneracy


def test_coloring_is_deterministic():
    g = project(sample_bipartite(ModelParams(n=300, m=1500, p=0.004, seed=2)))
    assert low_tw_coloring(g, 3) == low_tw_coloring(g, 3)


@pytest.mark.parametrize("k", [2, 3])
def test_verification_passes_on_computed_colorings(k):
    for seed in range(5):
        g = project(sample_bipartite(ModelParams(n=120, m=400, p=0.01, seed=seed)))
        result = low_tw_coloring(g, k)
        records = verify_coloring(g, result, samples=30, seed=seed)
        assert records
        assert all(record.passed for record in records)
        assert all(record.claimed_bound < k for record in records)


def test_verification_enumerates_small_palettes(path4):
    result = low_tw_coloring(path4, 3)
    records = verify_coloring(path4, result)
    assert sorted(tuple(r.class_subset) for r in records) == [(0,), (0, 1), (0, 2), (1,), (1, 2), (2,)]


def test_verification_detects_planted_violation():
    triangle = IntersectionGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    planted = ColoringResult(k=2, num_colors=1, colors=[0, 0, 0])
    records = verify_coloring(triangle, planted)
    assert len(records) == 1
    assert not records[0].passed
    assert records[0].measured_treewidth == 2
    assert records[0].status == TreewidthStatus.EXACT


def test_verification_skips_over_cap_as_passed():
    grid = from_nx(nx.grid_2d_graph(4, 4))
    g = IntersectionGraph.from_edges(18, list(grid.edges()))
    planted = ColoringResult(k=4, num_colors=3, colors=[0] * 16 + [1, 2])
    records = verify_coloring(g, planted, size_cap=5)
    by_bound = {record.claimed_bound: record for record in records if record.class_subset == [0, 1, 2]}
    assert by_bound[3].status == TreewidthStatus.SKIPPED
    assert by_bound[3].passed and by_bound[3].measured_treewidth is None
    single = next(record for record in records if record.class_subset == [0])
    assert single.status == TreewidthStatus.LOWER_BOUND and not single.passed


def test_verification_rejects_foreign_coloring(path4):
    with pytest.raises(MismatchedResultException):
        verify_coloring(path4, ColoringResult(k=2, num_colors=1, colors=[0, 0]))


def test_verification_record_serializes_pass_alias(path4):
    records = verify_coloring(path4, low_tw_coloring(path4, 2))
    assert '"pass":true' in records[0].model_dump_json(by_alias=True)


def test_color_count_is_monotone_in_k():
    for seed in range(10):
        g = project(sample_bipartite(derive_params(1.5, 0.1, 5, 500, seed=seed)))
        counts = [low_tw_coloring(g, k).num_colors for k in range(1, 5)]
        assert counts == sorted(counts)


def test_forests_stay_two_colored_at_k2():
    for seed in range(30):
        tree = random_tree(5 + seed * 2, seed)
        result = low_tw_coloring(tree, 2)
        assert result.num_colors <= 2
        assert _is_proper(tree, result.colors)
