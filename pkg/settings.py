import logging
import os
from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

BASE_DIR = Path(__file__).parent


def _load_version() -> str:
    """
    Reads the VERSION file recorded in experiment provenance.

    Returns:
        str: Stripped file contents, or "unknown" if the file cannot be read
    """
    try:
        return (BASE_DIR / "VERSION").read_text(encoding="utf-8").strip()
    except OSError as e:
        logger.warning(f"Cannot read VERSION file: {e}")
        return "unknown"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )

    PROJECT_NAME: str = "rig-lab"
    VERSION: str = Field(default_factory=lambda: _load_version())

    LOG_LEVEL: str = Field(default="INFO", description="Level of the project logger")

    # Parallelism
    RIG_THREADS: int = Field(default=0, ge=0, description="Bound on internal parallelism, 0 = auto")

    # Paths
    RESULTS_DIR: str = Field(default="results", description="Root directory for experiment outputs")
    PRESETS_DIR: str = Field(
        default=str(BASE_DIR / "app" / "presets"), description="Directory with YAML experiment presets"
    )

    # Size caps
    CLIQUE_SIZE_CAP: int = Field(default=40, description="Largest graph for brute-force maximum clique")
    DELTA_SIZE_CAP: int = Field(default=600, description="Largest component for exact four-point delta")
    NAIVE_DELTA_CAP: int = Field(default=60, description="Largest graph for the exhaustive quadruple oracle")
    TREEWIDTH_SIZE_CAP: int = Field(default=30, description="Largest component for exact treewidth DP")
    VERIFY_SAMPLES: int = Field(default=100, description="Sampled color-class subsets per i")

    # Generation
    SPARSE_SAMPLING_THRESHOLD: float = Field(
        default=0.1, description="Below this p, incidences are sampled by geometric gap skipping"
    )

    SHOW_PROGRESS: bool = Field(default=True, description="Progress bars in experiment sweeps")

    @property
    def workers(self) -> int:
        """
        Number of worker processes allowed by RIG_THREADS.

        Returns:
            int: RIG_THREADS, or the CPU count when it is 0
        """
        if self.RIG_THREADS > 0:
            return self.RIG_THREADS
        return os.cpu_count() or 1


@lru_cache()
def get_settings() -> Settings:
    """
    Returns cached instance of settings.
    Used to avoid reading .env file multiple times.
    """
    return Settings()
