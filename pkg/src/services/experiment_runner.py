"""Run the networks x strategies experiment matrix and summarize its results"""
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Tuple
import numpy as np
from pydantic import BaseModel
from src.core.config import settings
from src.core.logging_config import get_logger
from src.schemas.dataset import DatasetName
from src.schemas.experiment import (
    METRICS,
    ExperimentConfig,
    NetworkSpec,
    ResultRow,
    ResultTable,
    Summary,
    SummaryRow,
)
from src.schemas.strategy import Strategy, StrategyKind
from src.schemas.trajectory import MeanTrajectory, Trajectory
from src.services.dataset_loader import load_network, montagna_descriptor
from src.services.disruption import derive_seed, dismantling_step, mean_records, run_job
from src.services.export_service import trajectory_rows, write_results_csv
from src.services.generators import assign_supposed_roles, barabasi_albert, degree_rank_profile
from src.services.graph import Network

logger = get_logger(__name__)

MERGED_FILENAME = "merged.csv"
_GRAPH_STREAM = 1

Job = Tuple[Network, Strategy, str, int]


class ExperimentOutput(BaseModel):
    """Result table of a run and the files it wrote"""
    table: ResultTable
    files: List[Path]


class ExperimentRunner:
    """Builds every (network, strategy, replication) job and executes them"""

    def __init__(self, config: ExperimentConfig):
        self.config = config
        self._datasets: Dict[DatasetName, Network] = {}

    def dataset(self, name: DatasetName) -> Network:
        """Load a real network once per run"""
        if name not in self._datasets:
            descriptor = montagna_descriptor(name, self.config.data_dir)
            self._datasets[name] = load_network(descriptor, allow_isolated=self.config.allow_isolated)
        return self._datasets[name]

    def replications_for(self, spec: NetworkSpec, strategy: Strategy) -> int:
        """Synthetic graphs and random removal are replicated, the rest run once"""
        if spec.is_synthetic or strategy.kind == StrategyKind.RANDOM:
            return self.config.replications
        return 1

    def network_for(self, spec: NetworkSpec, strategy: Strategy, replication: int) -> Network:
        """Graph of one job; BA graphs are regrown from the replication seed"""
        if not spec.is_synthetic:
            return self.dataset(spec.dataset)

        params = spec.ba.model_copy(
            update={"seed": derive_seed(self.config.base_seed, replication, stream=_GRAPH_STREAM)}
        )
        g = barabasi_albert(params)
        if strategy.kind == StrategyKind.ROLE_ATTACK:
            # Supposed role holders sit at the reference holders' degree ranks
            profile = degree_rank_profile(self.dataset(self.config.reference), strategy.role_target)
            g = assign_supposed_roles(g, profile, strategy.role_target)
        return g

    def jobs(self) -> List[Job]:
        """All jobs in canonical (network, strategy, replication) order"""
        jobs: List[Job] = []
        for spec in self.config.networks:
            for strategy in self.config.strategies:
                for r in range(self.replications_for(spec, strategy)):
                    bound = strategy
                    if strategy.kind == StrategyKind.RANDOM:
                        bound = strategy.with_seed(derive_seed(self.config.base_seed, r))
                    jobs.append((self.network_for(spec, strategy, r), bound, spec.network_id, r))
        return jobs

    def execute(self) -> List[Trajectory]:
        """Run all jobs; output order never depends on scheduling"""
        jobs = self.jobs()
        logger.info(f"Running {len(jobs)} disruption job(s) with {self.config.workers} worker(s)")
        if self.config.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as pool:
                return list(pool.map(run_job, jobs))
        return [run_job(job) for job in jobs]


def _write_outputs(table: ResultTable, output_dir: Path) -> List[Path]:
    """Per-network CSVs plus the merged CSV; removes everything on failure"""
    written: List[Path] = []
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
        for network in table.networks():
            path = output_dir / f"{network}.csv"
            written.append(path)
            write_results_csv(table.for_network(network).rows, path)
        merged = output_dir / MERGED_FILENAME
        written.append(merged)
        write_results_csv(table.rows, merged)
    except Exception:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    return written


def run_experiment(config: ExperimentConfig) -> ExperimentOutput:
    """
    Execute every (network, strategy) cell and write the result CSVs.

    Real networks run deterministic strategies once and random removal
    `replications` times; BA networks are regenerated for every
    replication. Nothing is written unless every cell succeeds.
    """
    trajectories = ExperimentRunner(config).execute()
    rows: List[ResultRow] = []
    for trajectory in trajectories:
        rows.extend(trajectory_rows(trajectory))
    table = ResultTable(rows=rows)

    files = _write_outputs(table, Path(config.output_dir))
    logger.info(f"Wrote {len(table)} rows to {len(files)} file(s) in {config.output_dir}")
    return ExperimentOutput(table=table, files=files)


def summarize(
    table: ResultTable,
    threshold: Optional[float] = None,
    metric: str = "lcc_norm",
) -> Summary:
    """
    Mean trajectory and dismantling step per (network, strategy).

    The dismantling step is the first step at which the mean trajectory's
    metric falls below the threshold; mean_dismantling_step averages the
    same quantity over replications that reach it.
    """
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {', '.join(METRICS)}, got '{metric}'")
    limit = settings.DISMANTLING_THRESHOLD if threshold is None else threshold

    cells: "OrderedDict[Tuple[str, str], OrderedDict[int, List[ResultRow]]]" = OrderedDict()
    for row in table.rows:
        cells.setdefault((row.network, row.strategy), OrderedDict()).setdefault(row.replication, []).append(row)

    summary = Summary()
    for (network, strategy), by_replication in cells.items():
        runs = [sorted(rows, key=lambda r: r.step) for rows in by_replication.values()]
        steps = min(len(run) for run in runs)
        if any(len(run) != steps for run in runs):
            logger.warning(f"{network}/{strategy}: replications differ in length, truncating to {steps} steps")
        values = np.array(
            [[(r.cc_norm, r.lcc_norm, r.eff_norm) for r in run[:steps]] for run in runs],
            dtype=float,
        ).reshape(len(runs), steps, 3)
        mean = MeanTrajectory(
            network_id=network,
            strategy_name=strategy,
            replications=len(runs),
            records=mean_records(values),
        )

        per_run = [
            next((r.step for r in run if getattr(r, metric) < limit), None) for run in runs
        ]
        crossed = [s for s in per_run if s is not None]
        summary.rows.append(SummaryRow(
            network=network,
            strategy=strategy,
            replications=len(runs),
            steps=steps,
            metric=metric,
            threshold=limit,
            dismantling_step=dismantling_step(mean, limit, metric),
            mean_dismantling_step=float(np.mean(crossed)) if crossed else None,
        ))
        summary.means.append(mean)
    return summary
