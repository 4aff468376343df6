import statistics

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.enums import MeasurementNames, Regime
from settings import get_settings

settings = get_settings()

SEED_DERIVATION = "trial_seed = base_seed + trial_index"


class SizeCaps(BaseModel):
    """Size caps of the exact methods used inside a sweep."""

    model_config = ConfigDict(extra="forbid")

    delta: int = Field(default_factory=lambda: settings.DELTA_SIZE_CAP, ge=4)
    treewidth: int = Field(default_factory=lambda: settings.TREEWIDTH_SIZE_CAP, ge=1)
    verify_samples: int = Field(default_factory=lambda: settings.VERIFY_SAMPLES, ge=1)


class ExperimentConfig(BaseModel):
    """
    Sweep over n for one scaling triple.

    Trial t at every n uses seed base_seed + t, so any cell can be recomputed
    from (config, n, trial) alone.
    """

    model_config = ConfigDict(extra="forbid")

    name: str = Field(min_length=1)
    alpha: float = Field(gt=0)
    beta: float = Field(gt=0)
    gamma: float = Field(gt=0)
    n_values: list[int]
    trials: int = Field(default=1, ge=1)
    base_seed: int = Field(default=0, ge=0)
    measurements: list[MeasurementNames] = []

    coloring_k: list[int] = [2, 3]
    verify_colorings: bool = False
    epsilon: float = Field(default=0.1, gt=0, lt=1)
    subset_sizes: list[int] = [50]
    concentration_samples: int = Field(default=1, ge=1)
    thresholds: list[int] = []
    zeta: float = Field(default=0.1, ge=0, lt=1)
    attr_degree_c: float = Field(default=1.0, ge=1)
    caps: SizeCaps = Field(default_factory=SizeCaps)

    @field_validator("n_values")
    @classmethod
    def _strictly_increasing(cls, values: list[int]) -> list[int]:
        if any(n < 1 for n in values):
            raise ValueError("n_values must be positive")
        if any(a >= b for a, b in zip(values, values[1:])):
            raise ValueError("n_values must be strictly increasing")
        return values

    @field_validator("coloring_k", "subset_sizes")
    @classmethod
    def _positive(cls, values: list[int]) -> list[int]:
        if any(v < 1 for v in values):
            raise ValueError("values must be >= 1")
        return values

    @field_validator("thresholds")
    @classmethod
    def _nonnegative(cls, values: list[int]) -> list[int]:
        if any(v < 0 for v in values):
            raise ValueError("values must be nonnegative")
        return values

    @model_validator(mode="after")
    def _seed_range(self) -> "ExperimentConfig":
        if self.base_seed + self.trials - 1 > 2**64 - 1:
            raise ValueError("trial seeds overflow 64 bits")
        return self

    def trial_seed(self, trial: int) -> int:
        return self.base_seed + trial


class TrialRecord(BaseModel):
    n: int
    trial: int
    seed: int
    m: int
    p: float
    p_clamped: bool = False
    values: dict[str, float | None] = {}


class ResultCell(BaseModel):
    """Aggregate of one (n, measurement) cell; None statistics mean every trial was skipped."""

    n: int
    measurement: str
    median: float | None
    min: float | None
    max: float | None
    values: list[float | None]
    seeds: list[int]

    @classmethod
    def aggregate(cls, n: int, measurement: str, values: list[float | None], seeds: list[int]) -> "ResultCell":
        present = [v for v in values if v is not None]
        if not present:
            return cls(n=n, measurement=measurement, median=None, min=None, max=None, values=values, seeds=seeds)
        return cls(
            n=n,
            measurement=measurement,
            median=float(statistics.median(present)),
            min=float(min(present)),
            max=float(max(present)),
            values=values,
            seeds=seeds,
        )

    def summary_row(self) -> dict:
        return {"n": self.n, "measurement": self.measurement, "median": self.median, "min": self.min, "max": self.max}


class Provenance(BaseModel):
    config_hash: str
    version: str
    regime: Regime
    seed_derivation: str = SEED_DERIVATION
    seeds: list[int]


class ExperimentResult(BaseModel):
    config: ExperimentConfig
    provenance: Provenance
    cells: list[ResultCell] = []
    trials: list[TrialRecord] = []

    def cell(self, n: int, measurement: str) -> ResultCell:
        for cell in self.cells:
            if cell.n == n and cell.measurement == measurement:
                return cell
        raise KeyError(f"no cell for n={n}, measurement={measurement}")
