import re
from abc import ABC, abstractmethod
from functools import cached_property

import numpy as np

from app.algorithms.graph_core import components, core_decomposition
from app.algorithms.hyperbolicity import find_k_special_paths
from app.core.dataclasses import BipartiteGraph, ComponentLabeling, CoreDecomposition, IntersectionGraph
from app.core.enums import MeasurementNames
from app.models.experiment import ExperimentConfig
from app.models.params import ModelParams

MeasurementValues = dict[str, float | None]


class TrialContext:
    """
    One sampled trial: parameters, both graphs and the experiment config.

    Derived structures shared by several pipelines are computed once, on first use.

    Attributes:
        params (ModelParams): Derived parameters, seed included
        b (BipartiteGraph): Sampled bipartite graph
        g (IntersectionGraph): Its projection
        config (ExperimentConfig): Experiment the trial belongs to
        trial (int): Trial index
    """

    def __init__(
        self, params: ModelParams, b: BipartiteGraph, g: IntersectionGraph, config: ExperimentConfig, trial: int
    ) -> None:
        self.params = params
        self.b = b
        self.g = g
        self.config = config
        self.trial = trial

    def rng(self, stream: int) -> np.random.Generator:
        """Generator derived from the trial seed, independent per stream."""
        return np.random.default_rng((self.params.seed, stream))

    @cached_property
    def decomposition(self) -> CoreDecomposition:
        return core_decomposition(self.g)

    @cached_property
    def labeling(self) -> ComponentLabeling:
        return components(self.g)

    @cached_property
    def special_paths(self) -> list[tuple[int, list[int]]]:
        return find_k_special_paths(self.g)


class BasePipeline(ABC):
    """
    Abstract base class for measurement pipelines.

    A pipeline turns one trial into named values. Column names are known
    before running, so a skipped pipeline still fills its cells with None.

    Attributes:
        _identifier (MeasurementNames): Measurement the pipeline answers to
        _stream (int): Random stream index for pipelines that draw
        description (str): One-line description
    """

    _identifier: MeasurementNames
    _stream: int = 0
    description: str = ""

    def __str__(self) -> str:
        """
        String representation of the pipeline.

        Returns:
            str: Class name of the pipeline split into words
        """
        class_name = self.__class__.__name__
        spaced_name = re.sub(r"(?<!^)(?=[A-Z])", " ", class_name)
        return spaced_name

    def __repr__(self) -> str:
        return self.__str__()

    def columns(self, config: ExperimentConfig) -> list[str]:
        """
        Names of the values produced for a config.

        Args:
            config (ExperimentConfig): Experiment configuration

        Returns:
            list[str]: Column names, in output order
        """
        return [self._identifier.value]

    @abstractmethod
    def run(self, context: TrialContext) -> MeasurementValues:
        """
        Measures one trial.

        Args:
            context (TrialContext): Sampled trial

        Returns:
            MeasurementValues: One value per column

        Raises:
            CapExceededException: If an exact method is over its size cap
        """
        raise NotImplementedError
