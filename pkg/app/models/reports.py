from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from app.core.enums import SpecialPathCondition, TreewidthStatus


class DegreeTailPoint(BaseModel):
    threshold: int
    fraction: float


class SparsityReport(BaseModel):
    degeneracy: int
    max_attribute_degree: int
    clique_lower_bound: int
    grad0_num: int
    grad0_den: int
    degree_tail: list[DegreeTailPoint] = []
    n_vertices: int = 0
    edge_count: int = 0
    witness_size: int = 0

    @property
    def grad0(self) -> Fraction:
        return Fraction(self.grad0_num, self.grad0_den)


class ConcentrationCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    subset_size: int
    observed: int
    expected: float
    epsilon: float
    within_lower: bool
    within_upper: bool

    @property
    def within(self) -> bool:
        return self.within_lower and self.within_upper


class HyperbolicityReport(BaseModel):
    """
    Four-point delta and the special-path certificate, kept as separate values.

    ``delta_num`` is twice the four-point delta, so it is always an integer.
    """

    delta_num: int | None = None
    component_size: int
    special_k: int | None = None
    certificate: int | None = None
    witness: list[int] | None = None

    @property
    def four_point_delta(self) -> float | None:
        return None if self.delta_num is None else self.delta_num / 2

    @property
    def lower_bound(self) -> float:
        """max(certificate, four-point delta) over the values that are present."""
        values = [v for v in (self.certificate, self.four_point_delta) if v is not None]
        return float(max(values)) if values else 0.0


class BipartitePathQuery(BaseModel):
    """
    Candidate k-special bipartite path v_1..v_{2k-1} on (X, Y, C).

    Path positions alternate attribute, node, attribute, ..., attribute.
    """

    x: list[int] = Field(alias="X")
    y: list[int] = Field(alias="Y")
    component: int = Field(alias="C")
    path: list[int]

    model_config = ConfigDict(populate_by_name=True)

    @property
    def k(self) -> int:
        return (len(self.path) + 1) // 2


class BipartitePathCheck(BaseModel):
    accepted: bool
    failed_condition: SpecialPathCondition | None = None
    details: str = ""


class VerificationRecord(BaseModel):
    class_subset: list[int]
    induced_size: int
    claimed_bound: int
    measured_treewidth: int | None = None
    status: TreewidthStatus
    passed: bool = Field(alias="pass")

    model_config = ConfigDict(populate_by_name=True)


class ColoringResult(BaseModel):
    k: int
    num_colors: int
    colors: list[int]
    augmentation_rounds: int = 0
    verification: list[VerificationRecord] = []

    def summary_row(self) -> dict:
        """CSV summary row: n, k, num_colors, rounds."""
        return {"n": len(self.colors), "k": self.k, "num_colors": self.num_colors, "rounds": self.augmentation_rounds}
