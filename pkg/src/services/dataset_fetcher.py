"""Download the public Montagna deposit and lay it out as canonical CSVs"""
import csv
import shutil
from pathlib import Path
from typing import Dict, List, Optional, Union
import httpx
from src.core.config import settings
from src.core.exceptions import DatasetException
from src.core.logging_config import get_logger
from src.schemas.dataset import DatasetName
from src.services.dataset_loader import ATTR_HEADER, montagna_descriptor, normalize_raw_edges

logger = get_logger(__name__)

PathLike = Union[str, Path]

_KEYWORDS = {
    DatasetName.MEETINGS: "meeting",
    DatasetName.PHONE_CALLS: "phone",
}
_ATTR_MARKERS = ("attribute", "role", "label", "node")


def _record_files(client: httpx.Client, record_url: str) -> Dict[str, str]:
    """file name -> download link of every file in a deposit record"""
    response = client.get(record_url)
    response.raise_for_status()
    files = response.json().get("files") or []
    return {f["key"]: f["links"]["self"] for f in files if "key" in f and "links" in f}


def _download(client: httpx.Client, url: str, target: Path) -> Path:
    target.parent.mkdir(parents=True, exist_ok=True)
    with client.stream("GET", url) as response:
        response.raise_for_status()
        with open(target, "wb") as f:
            for chunk in response.iter_bytes():
                f.write(chunk)
    logger.debug(f"Downloaded {url} -> {target}")
    return target


def _has_canonical_header(path: Path, header: List[str]) -> bool:
    with open(path, newline="", encoding="utf-8-sig") as f:
        first = next(csv.reader(f), None)
    return first is not None and [c.strip().lower() for c in first] == header


def fetch_montagna(
    data_dir: Optional[PathLike] = None,
    record_url: Optional[str] = None,
    client: Optional[httpx.Client] = None,
) -> List[Path]:
    """
    Fetch both Montagna networks into data_dir.

    Raw files land in data_dir/raw. Edge lists are normalized into the
    canonical layout; attribute files are copied over only when they
    already carry the canonical header. Returns the canonical files written.
    """
    base = Path(data_dir) if data_dir is not None else settings.data_path
    url = record_url or settings.MONTAGNA_RECORD_URL
    owned = client is None
    if owned:
        client = httpx.Client(timeout=settings.HTTP_TIMEOUT, follow_redirects=True)

    written: List[Path] = []
    try:
        files = _record_files(client, url)
        logger.info(f"Deposit {url} lists {len(files)} file(s)")
        for name, keyword in _KEYWORDS.items():
            descriptor = montagna_descriptor(name, base)
            matching = {k: v for k, v in files.items() if keyword in k.lower()}
            edge_keys = [k for k in matching if not any(m in k.lower() for m in _ATTR_MARKERS)]
            attr_keys = [k for k in matching if k not in edge_keys]
            if not edge_keys:
                raise DatasetException(f"deposit {url} has no edge list for {name.value}")

            raw_edges = _download(client, matching[edge_keys[0]], base / "raw" / edge_keys[0])
            normalize_raw_edges(raw_edges, descriptor.edge_path)
            written.append(descriptor.edge_path)

            for key in attr_keys:
                raw_attr = _download(client, matching[key], base / "raw" / key)
                if _has_canonical_header(raw_attr, ATTR_HEADER):
                    shutil.copyfile(raw_attr, descriptor.attr_path)
                    written.append(descriptor.attr_path)
                    break
                logger.warning(
                    f"{raw_attr} is not in the node_id,role,subtype layout; "
                    f"write {descriptor.attr_path.name} by hand"
                )
            else:
                logger.warning(f"No canonical attribute file for {name.value} in the deposit")
    except httpx.HTTPError as e:
        logger.error(f"Download from {url} failed: {e}")
        raise DatasetException(f"download from {url} failed: {e}")
    finally:
        if owned:
            client.close()
    return written
