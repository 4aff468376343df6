from app.algorithms.coloring import low_tw_coloring, verify_coloring
from app.core.enums import MeasurementNames
from app.core.pipeline import BasePipeline, MeasurementValues, TrialContext
from app.models.experiment import ExperimentConfig
from app.modules.logger import rig_logger


class ColoringPipeline(BasePipeline):
    """
    Number of colors of the low-treewidth coloring for each configured k.

    With verify_colorings set, the number of failing verification records
    is reported next to each color count.

    Attributes:
        _identifier (MeasurementNames): Pipeline identifier (coloring_k)
    """

    _identifier = MeasurementNames.coloring_k
    description = "Low-treewidth coloring sizes per k."

    def columns(self, config: ExperimentConfig) -> list[str]:
        names = []
        for k in config.coloring_k:
            names.append(f"coloring_k{k}")
            if config.verify_colorings:
                names.append(f"coloring_k{k}_failures")
        return names

    def run(self, context: TrialContext) -> MeasurementValues:
        config = context.config
        values: MeasurementValues = {}
        for k in config.coloring_k:
            result = low_tw_coloring(context.g, k)
            values[f"coloring_k{k}"] = float(result.num_colors)
            if config.verify_colorings:
                records = verify_coloring(
                    context.g,
                    result,
                    samples=config.caps.verify_samples,
                    size_cap=config.caps.treewidth,
                    seed=context.params.seed,
                )
                values[f"coloring_k{k}_failures"] = float(sum(not r.passed for r in records))
            rig_logger.debug(f"[{self}] n={context.params.n} trial={context.trial} k={k} colors={result.num_colors}")
        return values
