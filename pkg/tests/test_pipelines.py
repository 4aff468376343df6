import pytest

from app.algorithms.model import derive_params, project, sample_bipartite
from app.core.enums import MeasurementNames
from app.core.pipeline import TrialContext
from app.models.experiment import ExperimentConfig
from app.pipelines import PIPELINES_MAP


def _context(config: ExperimentConfig, n: int = 150, trial: int = 0) -> TrialContext:
    params = derive_params(config.alpha, config.beta, config.gamma, n, config.trial_seed(trial))
    b = sample_bipartite(params)
    return TrialContext(params=params, b=b, g=project(b), config=config, trial=trial)


@pytest.fixture
def config() -> ExperimentConfig:
    return ExperimentConfig(
        name="pipelines",
        alpha=1.5,
        beta=0.1,
        gamma=5,
        n_values=[150],
        measurements=list(MeasurementNames),
        coloring_k=[2, 3],
        verify_colorings=True,
        subset_sizes=[10, 20],
        thresholds=[1, 3],
    )


def test_every_measurement_has_a_pipeline():
    assert set(PIPELINES_MAP) == set(MeasurementNames)


def test_pipeline_names_are_spaced():
    assert str(PIPELINES_MAP[MeasurementNames.degeneracy]) == "Degeneracy Pipeline"
    assert str(PIPELINES_MAP[MeasurementNames.four_point_delta]) == "Four Point Delta Pipeline"


def test_pipelines_fill_exactly_their_columns(config):
    context = _context(config)
    for pipeline in PIPELINES_MAP.values():
        values = pipeline.run(context)
        assert list(values) == pipeline.columns(config), str(pipeline)


def test_attribute_degree_bound_column_only_above_alpha_one(config):
    pipeline = PIPELINES_MAP[MeasurementNames.max_attr_degree]
    assert pipeline.columns(config) == ["max_attr_degree", "attr_degree_within_bound"]
    dense = config.model_copy(update={"alpha": 1.0})
    assert pipeline.columns(dense) == ["max_attr_degree"]


def test_coloring_columns(config):
    assert PIPELINES_MAP[MeasurementNames.coloring_k].columns(config) == [
        "coloring_k2",
        "coloring_k2_failures",
        "coloring_k3",
        "coloring_k3_failures",
    ]


def test_computed_colorings_have_no_failures(config):
    values = PIPELINES_MAP[MeasurementNames.coloring_k].run(_context(config))
    assert values["coloring_k2_failures"] == 0
    assert values["coloring_k3_failures"] == 0


def test_random_pipelines_are_seeded(config):
    for name in (MeasurementNames.exposed_giant, MeasurementNames.concentration):
        pipeline = PIPELINES_MAP[name]
        assert pipeline.run(_context(config)) == pipeline.run(_context(config))


def test_hyperbolicity_is_at_least_certificate(config):
    context = _context(config, n=300)
    hyperbolicity = PIPELINES_MAP[MeasurementNames.hyperbolicity].run(context)["hyperbolicity"]
    certificate = PIPELINES_MAP[MeasurementNames.special_certificate].run(context)["special_certificate"]
    assert hyperbolicity >= certificate


def test_concentration_columns_include_joint_bound(config):
    pipeline = PIPELINES_MAP[MeasurementNames.concentration]
    assert pipeline.columns(config)[:3] == [
        "concentration_lower_s10",
        "concentration_upper_s10",
        "concentration_within_s10",
    ]
    values = pipeline.run(_context(config))
    for s in config.subset_sizes:
        within = values[f"concentration_within_s{s}"]
        assert within <= min(values[f"concentration_lower_s{s}"], values[f"concentration_upper_s{s}"])


def test_concentration_skips_subsets_larger_than_n(config):
    oversized = config.model_copy(update={"subset_sizes": [10, 500]})
    values = PIPELINES_MAP[MeasurementNames.concentration].run(_context(oversized))
    assert values["concentration_within_s10"] is not None
    for bound in ("lower", "upper", "within"):
        assert values[f"concentration_{bound}_s500"] is None
