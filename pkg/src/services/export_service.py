"""Export trajectories and summaries as plot-ready CSV files."""
import csv
from pathlib import Path
from typing import Iterable, List, Optional, TextIO, Tuple, Union
from src.core.exceptions import DatasetNotFoundException, DatasetParseException
from src.core.logging_config import get_logger
from src.schemas.experiment import (
    MEAN_COLUMNS,
    RESULT_COLUMNS,
    SUMMARY_COLUMNS,
    ResultRow,
    ResultTable,
    Summary,
)
from src.schemas.roles import Role
from src.schemas.trajectory import Trajectory

logger = get_logger(__name__)

PathLike = Union[str, Path]

RANK_COLUMNS = ["rank", "node", "degree", "role"]


def format_float(value: float) -> str:
    """Shortest text that reads back to the same float"""
    return repr(float(value))


def _optional(value: Optional[float]) -> str:
    if value is None:
        return ""
    return str(value) if isinstance(value, int) else format_float(value)


def trajectory_rows(trajectory: Trajectory) -> List[ResultRow]:
    """Result rows of one trajectory"""
    return [
        ResultRow(
            network=trajectory.network_id,
            strategy=trajectory.strategy.name,
            replication=trajectory.replication,
            step=r.step,
            removed_node=r.removed,
            cc_norm=r.cc_norm,
            lcc_norm=r.lcc_norm,
            eff_norm=r.eff_norm,
        )
        for r in trajectory.records
    ]


def write_results_csv(rows: Iterable[ResultRow], path: PathLike) -> int:
    """Write result rows under the canonical header; returns the row count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(RESULT_COLUMNS)
        for row in rows:
            writer.writerow([
                row.network,
                row.strategy,
                row.replication,
                row.step,
                row.removed_node,
                format_float(row.cc_norm),
                format_float(row.lcc_norm),
                format_float(row.eff_norm),
            ])
            count += 1
    logger.debug(f"Wrote {count} rows to {path}")
    return count


def read_results_csv(path: PathLike) -> ResultTable:
    """Parse a result CSV written by write_results_csv"""
    path = Path(path)
    if not path.exists():
        raise DatasetNotFoundException(path)
    rows: List[ResultRow] = []
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != RESULT_COLUMNS:
            raise DatasetParseException(path, 1, f"expected header {','.join(RESULT_COLUMNS)}")
        for record in reader:
            try:
                rows.append(ResultRow(**record))
            except ValueError as e:
                raise DatasetParseException(path, reader.line_num, str(e).splitlines()[0])
    return ResultTable(rows=rows)


def write_summary_csv(summary: Summary, path: PathLike) -> None:
    """One line per (network, strategy) with its dismantling steps"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SUMMARY_COLUMNS)
        for row in summary.rows:
            writer.writerow([
                row.network,
                row.strategy,
                row.replications,
                row.steps,
                row.metric,
                format_float(row.threshold),
                _optional(row.dismantling_step),
                _optional(row.mean_dismantling_step),
            ])


def write_mean_csv(summary: Summary, path: PathLike) -> None:
    """Mean trajectories, one line per (network, strategy, step)"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(MEAN_COLUMNS)
        for mean in summary.means:
            for r in mean.records:
                writer.writerow([
                    mean.network_id,
                    mean.strategy_name,
                    r.step,
                    format_float(r.cc_norm),
                    format_float(r.lcc_norm),
                    format_float(r.eff_norm),
                ])


def write_degree_ranking(rows: Iterable[Tuple[int, int, int, Optional[Role]]], out: TextIO) -> int:
    """Degree ranking rows as CSV on an open text stream; returns the row count."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(RANK_COLUMNS)
    count = 0
    for rank, node, degree, role in rows:
        writer.writerow([rank, node, degree, role.label if role is not None else ""])
        count += 1
    return count


def write_degree_ranking_csv(rows: Iterable[Tuple[int, int, int, Optional[Role]]], path: PathLike) -> int:
    """write_degree_ranking into a file"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        return write_degree_ranking(rows, f)
