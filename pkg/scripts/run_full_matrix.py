"""Run every network under every strategy and summarize the result"""
import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core.config import settings
from src.core.logging_config import setup_logging
from src.schemas.experiment import ExperimentConfig, NetworkSpec
from src.schemas.strategy import STRATEGY_NAMES, Strategy
from src.services.experiment_runner import run_experiment, summarize
from src.services.export_service import write_mean_csv, write_summary_csv

# Set up logger
logger = setup_logging("netdisrupt.run_full_matrix", log_file="run_full_matrix.log")

NETWORKS = ["meetings", "phone_calls", "ba:100,2", "ba:100,3"]


def main() -> int:
    """Both real networks and both BA configurations under all seven strategies"""
    out = settings.output_path
    config = ExperimentConfig(
        networks=[NetworkSpec.parse(n) for n in NETWORKS],
        strategies=[Strategy.from_name(s) for s in STRATEGY_NAMES],
        replications=settings.DEFAULT_REPLICATIONS,
        base_seed=settings.DEFAULT_SEED,
        output_dir=out,
        data_dir=settings.data_path,
        workers=settings.MAX_WORKERS,
    )
    logger.info(f"Running the full matrix into {out}...")
    try:
        output = run_experiment(config)
        summary = summarize(output.table)
        write_summary_csv(summary, out / "summary.csv")
        write_mean_csv(summary, out / "summary_mean.csv")
        logger.info(f"Done: {len(output.table)} rows, {len(summary.rows)} summary lines")
    except Exception as e:
        logger.error(f"Full matrix failed: {e}", exc_info=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
