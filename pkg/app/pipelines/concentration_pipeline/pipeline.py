from app.algorithms.sparsity import random_concentration_check
from app.core.enums import MeasurementNames
from app.core.pipeline import BasePipeline, MeasurementValues, TrialContext
from app.models.experiment import ExperimentConfig
from app.modules.logger import rig_logger


class ConcentrationPipeline(BasePipeline):
    """
    Fraction of random node subsets S whose attribute neighborhood lies within
    (1 +- epsilon)|S|mp. Per subset size there is one column per bound and one
    for both bounds together. Sizes above n are left empty.

    Attributes:
        _identifier (MeasurementNames): Pipeline identifier (concentration)
    """

    _identifier = MeasurementNames.concentration
    _stream = 2
    description = "Concentration of |N_B(S)| around |S|mp."

    @staticmethod
    def _size_columns(s: int) -> list[str]:
        return [f"concentration_lower_s{s}", f"concentration_upper_s{s}", f"concentration_within_s{s}"]

    def columns(self, config: ExperimentConfig) -> list[str]:
        return [name for s in config.subset_sizes for name in self._size_columns(s)]

    def run(self, context: TrialContext) -> MeasurementValues:
        config = context.config
        rng = context.rng(self._stream)
        values: MeasurementValues = {}
        for s in config.subset_sizes:
            if s > context.params.n:
                rig_logger.warning(f"[{self}] subset size {s} exceeds n={context.params.n}, cell skipped")
                values.update(dict.fromkeys(self._size_columns(s)))
                continue
            checks = [
                random_concentration_check(context.b, context.params.p, s, config.epsilon, rng)
                for _ in range(config.concentration_samples)
            ]
            lower, upper, within = self._size_columns(s)
            values[lower] = sum(c.within_lower for c in checks) / len(checks)
            values[upper] = sum(c.within_upper for c in checks) / len(checks)
            values[within] = sum(c.within for c in checks) / len(checks)
        return values
