import csv
import io
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from pathlib import Path

from tqdm import tqdm

from app.algorithms.model import derive_params, project, sample_bipartite
from app.core.enums import Regime
from app.core.exceptions import CapExceededException, InvalidParameterException
from app.core.pipeline import BasePipeline, TrialContext
from app.models.experiment import ExperimentConfig, ExperimentResult, Provenance, ResultCell, TrialRecord
from app.modules.graph_io import write_text
from app.modules.logger import rig_logger
from app.pipelines import PIPELINES_MAP
from app.utils import config_hash
from settings import get_settings

settings = get_settings()


def regime_classifier(alpha: float) -> Regime:
    """
    Structural regime the scaling exponent alpha predicts.

    Args:
        alpha (float): Scaling exponent, positive

    Returns:
        Regime: somewhere dense for alpha <= 1, bounded expansion above

    Raises:
        InvalidParameterException: If alpha is not positive
    """
    if not alpha > 0:
        raise InvalidParameterException(f"alpha must be > 0, got {alpha}")
    return Regime.SOMEWHERE_DENSE_EXPECTED if alpha <= 1 else Regime.BOUNDED_EXPANSION_EXPECTED


def _pipelines(config: ExperimentConfig) -> list[BasePipeline]:
    return [PIPELINES_MAP[name] for name in config.measurements]


def run_trial(config: ExperimentConfig, n: int, trial: int) -> TrialRecord:
    """
    Samples and measures a single (n, trial) cell.

    A pipeline over its size cap leaves its columns as None; other errors propagate.

    Args:
        config (ExperimentConfig): Experiment configuration
        n (int): Number of nodes
        trial (int): Trial index

    Returns:
        TrialRecord: Seed, derived parameters and measured values
    """
    seed = config.trial_seed(trial)
    params = derive_params(config.alpha, config.beta, config.gamma, n, seed)
    b = sample_bipartite(params)
    context = TrialContext(params=params, b=b, g=project(b), config=config, trial=trial)

    values: dict[str, float | None] = {}
    for pipeline in _pipelines(config):
        try:
            values.update(pipeline.run(context))
        except CapExceededException as e:
            rig_logger.warning(f"[{pipeline}] n={n} trial={trial} skipped: {e}")
            values.update({column: None for column in pipeline.columns(config)})
    return TrialRecord(n=n, trial=trial, seed=seed, m=params.m, p=params.p, p_clamped=params.p_clamped, values=values)


def _run_trial_args(args: tuple[ExperimentConfig, int, int]) -> TrialRecord:
    return run_trial(*args)


class ExperimentRunner:
    """
    Runs measurement pipelines over an experiment sweep and aggregates medians.

    Cells are independent, so they may run in a process pool; records are
    collected in (n, trial) order, which keeps the result independent of
    the number of workers.
    """

    def __init__(self, workers: int | None = None, show_progress: bool | None = None) -> None:
        self.workers = workers if workers is not None else settings.workers
        self.show_progress = settings.SHOW_PROGRESS if show_progress is None else show_progress

    def _records(self, config: ExperimentConfig) -> list[TrialRecord]:
        tasks = [(config, n, trial) for n in config.n_values for trial in range(config.trials)]
        progress = dict(total=len(tasks), desc=config.name, disable=not self.show_progress, leave=False)
        workers = min(self.workers, len(tasks))
        if workers <= 1:
            return [_run_trial_args(task) for task in tqdm(tasks, **progress)]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(tqdm(executor.map(_run_trial_args, tasks), **progress))

    def run(self, config: ExperimentConfig) -> ExperimentResult:
        """
        Runs every (n, trial) cell of the config and aggregates per (n, measurement).

        Args:
            config (ExperimentConfig): Experiment configuration

        Returns:
            ExperimentResult: Cells, trial records and provenance
        """
        regime = regime_classifier(config.alpha)
        rig_logger.info(
            f"[Experiment Runner] {config.name}: n={config.n_values} trials={config.trials} "
            f"measurements={[m.value for m in config.measurements]} regime={regime.value} workers={self.workers}"
        )
        records = self._records(config) if config.measurements else []

        columns = [column for pipeline in _pipelines(config) for column in pipeline.columns(config)]
        cells = []
        for n in config.n_values:
            rows = [record for record in records if record.n == n]
            seeds = [record.seed for record in rows]
            for column in columns:
                cells.append(ResultCell.aggregate(n, column, [record.values.get(column) for record in rows], seeds))

        provenance = Provenance(
            config_hash=config_hash(config),
            version=settings.VERSION,
            regime=regime,
            seeds=[config.trial_seed(t) for t in range(config.trials)],
        )
        return ExperimentResult(config=config, provenance=provenance, cells=cells, trials=records)


def run_experiment(config: ExperimentConfig, workers: int | None = None) -> ExperimentResult:
    return ExperimentRunner(workers=workers).run(config)


def summary_csv(result: ExperimentResult) -> str:
    """Plot-ready CSV with columns n, measurement, median, min, max; skipped statistics are empty."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=["n", "measurement", "median", "min", "max"], lineterminator="\n")
    writer.writeheader()
    for cell in result.cells:
        writer.writerow(cell.summary_row())
    return buffer.getvalue()


def write_result(result: ExperimentResult, results_dir: str | None = None) -> Path:
    """
    Writes summary.csv and trials.json to results/<name>/<timestamp>/.

    A directory is never reused; a numeric suffix is added when the timestamp collides.

    Returns:
        Path: Directory written to
    """
    base = Path(results_dir or settings.RESULTS_DIR) / result.config.name
    stamp = datetime.now().strftime("%Y%m%dT%H%M%S")
    target, suffix = base / stamp, 1
    while target.exists():
        target = base / f"{stamp}-{suffix}"
        suffix += 1
    target.mkdir(parents=True)
    write_text(summary_csv(result), str(target / "summary.csv"))
    write_text(result.model_dump_json(indent=2), str(target / "trials.json"))
    rig_logger.info(f"[Experiment Runner] {result.config.name}: wrote {target}")
    return target
