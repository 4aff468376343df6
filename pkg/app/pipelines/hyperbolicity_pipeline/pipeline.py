from app.algorithms.hyperbolicity import capped_giant, certificate_from_special_path, exposed_giant, four_point_delta
from app.core.enums import MeasurementNames
from app.core.pipeline import BasePipeline, MeasurementValues, TrialContext
from app.modules.logger import rig_logger


def _certificate(context: TrialContext) -> int:
    if not context.special_paths:
        return 0
    return certificate_from_special_path(context.special_paths[0][0])


class FourPointDeltaPipeline(BasePipeline):
    """
    Exact four-point delta of the giant component.

    Raises CapExceededException when the giant is larger than the delta cap,
    which the runner records as a skipped cell.

    Attributes:
        _identifier (MeasurementNames): Pipeline identifier (four_point_delta)
    """

    _identifier = MeasurementNames.four_point_delta
    description = "Four-point delta of the giant component."

    def run(self, context: TrialContext) -> MeasurementValues:
        labeling = context.labeling
        if labeling.count == 0:
            return {self._identifier.value: None}
        delta = four_point_delta(context.g, labeling.giant, context.config.caps.delta)
        return {self._identifier.value: float(delta)}


class SpecialCertificatePipeline(BasePipeline):
    """
    Best floor(k/4) certificate among the k-special paths of the graph, 0 when there is none.

    Attributes:
        _identifier (MeasurementNames): Pipeline identifier (special_certificate)
    """

    _identifier = MeasurementNames.special_certificate
    description = "Hyperbolicity lower bound from the longest k-special path."

    def run(self, context: TrialContext) -> MeasurementValues:
        return {self._identifier.value: float(_certificate(context))}


class HyperbolicityPipeline(BasePipeline):
    """
    Growth metric max(certificate, four-point delta of the capped giant).

    Giants above the delta cap are cut to their first cap vertices in BFS order.

    Attributes:
        _identifier (MeasurementNames): Pipeline identifier (hyperbolicity)
    """

    _identifier = MeasurementNames.hyperbolicity
    description = "Larger of the special-path certificate and the capped-giant four-point delta."

    def run(self, context: TrialContext) -> MeasurementValues:
        cap = context.config.caps.delta
        delta = four_point_delta(capped_giant(context.g, cap), size_cap=cap)
        certificate = _certificate(context)
        rig_logger.debug(
            f"[{self}] n={context.params.n} trial={context.trial} delta={delta} certificate={certificate}"
        )
        return {self._identifier.value: float(max(delta, certificate))}


class ExposedGiantPipeline(BasePipeline):
    """
    Giant component of the exposed graph, as a fraction of n.

    X and Y are uniform random subsets holding a zeta fraction of the nodes and attributes.

    Attributes:
        _identifier (MeasurementNames): Pipeline identifier (exposed_giant)
    """

    _identifier = MeasurementNames.exposed_giant
    _stream = 1
    description = "Giant component fraction of the exposed graph."

    def run(self, context: TrialContext) -> MeasurementValues:
        b, zeta = context.b, context.config.zeta
        rng = context.rng(self._stream)
        x = rng.choice(b.n_nodes, size=int(zeta * b.n_nodes), replace=False)
        y = rng.choice(b.n_attributes, size=int(zeta * b.n_attributes), replace=False)
        exposed = exposed_giant(b, x, y)
        labeling = exposed.labeling
        giant = int(labeling.sizes[labeling.giant]) if labeling.count else 0
        return {self._identifier.value: giant / b.n_nodes}
