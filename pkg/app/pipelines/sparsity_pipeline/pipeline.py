from app.algorithms.sparsity import attribute_degree_bound, attribute_degree_stats, degree_tail, densest_subgraph
from app.core.enums import MeasurementNames
from app.core.pipeline import BasePipeline, MeasurementValues, TrialContext
from app.models.experiment import ExperimentConfig
from app.modules.logger import rig_logger


class DegeneracyPipeline(BasePipeline):
    """
    Degeneracy of the intersection graph by min-degree peeling.

    Attributes:
        _identifier (MeasurementNames): Pipeline identifier (degeneracy)
    """

    _identifier = MeasurementNames.degeneracy
    description = "Degeneracy of the intersection graph."

    def run(self, context: TrialContext) -> MeasurementValues:
        value = context.decomposition.degeneracy
        rig_logger.debug(f"[{self}] n={context.params.n} trial={context.trial} value={value}")
        return {self._identifier.value: float(value)}


class AttributeDegreePipeline(BasePipeline):
    """
    Maximum attribute degree, the clique lower bound of the projection.

    For alpha > 1 it also reports whether the maximum stays within 2(alpha+c)/(alpha-1).

    Attributes:
        _identifier (MeasurementNames): Pipeline identifier (max_attr_degree)
    """

    _identifier = MeasurementNames.max_attr_degree
    description = "Maximum attribute degree and its bound for alpha > 1."
    within_bound_column = "attr_degree_within_bound"

    def columns(self, config: ExperimentConfig) -> list[str]:
        if config.alpha > 1:
            return [self._identifier.value, self.within_bound_column]
        return [self._identifier.value]

    def run(self, context: TrialContext) -> MeasurementValues:
        value, _ = attribute_degree_stats(context.b)
        values: MeasurementValues = {self._identifier.value: float(value)}
        config = context.config
        if config.alpha > 1:
            bound = attribute_degree_bound(config.alpha, config.attr_degree_c)
            values[self.within_bound_column] = float(value <= bound)
        return values


class Grad0Pipeline(BasePipeline):
    """Maximum subgraph density |E(H)|/|V(H)|, exact."""

    _identifier = MeasurementNames.grad0
    description = "Exact depth-0 grad by densest subgraph."

    def run(self, context: TrialContext) -> MeasurementValues:
        density, witness = densest_subgraph(context.g)
        rig_logger.debug(f"[{self}] n={context.params.n} trial={context.trial} value={density} witness={len(witness)}")
        return {self._identifier.value: float(density)}


class DegreeTailPipeline(BasePipeline):
    _identifier = MeasurementNames.degree_tail
    description = "Fraction of vertices with degree at least each threshold."

    def columns(self, config: ExperimentConfig) -> list[str]:
        return [f"degree_tail_d{d}" for d in config.thresholds]

    def run(self, context: TrialContext) -> MeasurementValues:
        thresholds = context.config.thresholds
        return {f"degree_tail_d{d}": f for d, f in zip(thresholds, degree_tail(context.g, thresholds))}
