"""Download the Montagna deposit into DATA_DIR and check what arrived"""
import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.core.config import settings
from src.core.exceptions import NetDisruptException
from src.core.logging_config import setup_logging
from src.schemas.dataset import DatasetName
from src.services.dataset_fetcher import fetch_montagna
from src.services.dataset_loader import load_network, montagna_descriptor, validate

# Set up logger
logger = setup_logging("netdisrupt.fetch_montagna", log_file="fetch_montagna.log")


def main() -> int:
    """Fetch, normalize, then validate every network whose files are complete"""
    logger.info(f"Fetching {settings.MONTAGNA_RECORD_URL} into {settings.data_path}...")
    try:
        written = fetch_montagna()
    except NetDisruptException as e:
        logger.error(str(e))
        return e.exit_code
    for path in written:
        logger.info(f"  wrote {path}")

    for name in DatasetName:
        d = montagna_descriptor(name)
        if not d.attr_path.exists():
            logger.warning(f"{name.value}: edges ready, attribute file still missing")
            continue
        try:
            report = validate(load_network(d), d)
        except NetDisruptException as e:
            logger.error(f"{name.value}: {e}")
            return e.exit_code
        logger.info(f"{name.value}: {'ok' if report.ok else '; '.join(report.mismatches)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
