from app.pipelines.coloring_pipeline.pipeline import ColoringPipeline
from app.pipelines.concentration_pipeline.pipeline import ConcentrationPipeline
from app.pipelines.hyperbolicity_pipeline.pipeline import (
    ExposedGiantPipeline,
    FourPointDeltaPipeline,
    HyperbolicityPipeline,
    SpecialCertificatePipeline,
)
from app.pipelines.sparsity_pipeline.pipeline import (
    AttributeDegreePipeline,
    DegeneracyPipeline,
    DegreeTailPipeline,
    Grad0Pipeline,
)

__PIPELINES__ = [
    DegeneracyPipeline(),
    AttributeDegreePipeline(),
    Grad0Pipeline(),
    DegreeTailPipeline(),
    FourPointDeltaPipeline(),
    SpecialCertificatePipeline(),
    HyperbolicityPipeline(),
    ExposedGiantPipeline(),
    ColoringPipeline(),
    ConcentrationPipeline(),
]

PIPELINES_MAP = {
    pipeline._identifier: pipeline
    for pipeline in __PIPELINES__
}
