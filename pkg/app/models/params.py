import math

from pydantic import BaseModel, ConfigDict

from app.core.exceptions import InvalidParameterException

MAX_SEED = 2**64 - 1


class ModelParams(BaseModel):
    """
    Parameters of G(n, m, p), optionally carrying the scaling triple they came from.

    Validation is explicit (``check``) so that callers get an
    InvalidParameterException rather than a pydantic error.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    p: float
    seed: int = 0
    alpha: float | None = None
    beta: float | None = None
    gamma: float | None = None
    p_clamped: bool = False

    def check(self) -> "ModelParams":
        """
        Validates the parameter invariants.

        Returns:
            ModelParams: self, for chaining

        Raises:
            InvalidParameterException: If n < 1, m < 1, p outside [0, 1] or the seed is not a u64
        """
        if self.n < 1:
            raise InvalidParameterException(f"n must be >= 1, got {self.n}")
        if self.m < 1:
            raise InvalidParameterException(f"m must be >= 1, got {self.m}")
        if not (0.0 <= self.p <= 1.0) or math.isnan(self.p):
            raise InvalidParameterException(f"p must lie in [0, 1], got {self.p}")
        if not 0 <= self.seed <= MAX_SEED:
            raise InvalidParameterException(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        return self

    @property
    def expected_edge_count(self) -> float:
        """E|E(B)| = n·m·p."""
        return self.n * self.m * self.p

    def with_seed(self, seed: int) -> "ModelParams":
        return self.model_copy(update={"seed": seed})
