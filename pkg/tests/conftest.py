"""Shared fixtures: small analytic graphs and a canonical on-disk dataset"""
from pathlib import Path
import pytest
from src.core.config import settings
from src.schemas.dataset import DatasetName
from src.schemas.roles import CAPOREGIME, ENTREPRENEUR, SOLDIER, UNCLEAR
from src.services.dataset_loader import montagna_descriptor
from src.services.graph import Network


def montagna_available() -> bool:
    return all(
        montagna_descriptor(name).edge_path.exists() and montagna_descriptor(name).attr_path.exists()
        for name in DatasetName
    )


def montagna_edges_available() -> bool:
    return all(montagna_descriptor(name).edge_path.exists() for name in DatasetName)


requires_montagna = pytest.mark.skipif(
    not montagna_available(),
    reason=f"Montagna CSV files not found under {settings.data_path}",
)

requires_montagna_edges = pytest.mark.skipif(
    not montagna_edges_available(),
    reason=f"Montagna edge lists not found under {settings.data_path}; run scripts/fetch_montagna.py",
)


def path_graph(n: int) -> Network:
    return Network.from_edges([(i, i + 1) for i in range(n - 1)], nodes=range(n))


def star_graph(leaves: int) -> Network:
    """Center 0 with leaves 1..leaves"""
    return Network.from_edges([(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Network:
    return Network.from_edges(
        [(i, j) for i in range(n) for j in range(i + 1, n)], nodes=range(n)
    )


@pytest.fixture
def path3() -> Network:
    return path_graph(3)


@pytest.fixture
def path4() -> Network:
    return path_graph(4)


@pytest.fixture
def star4() -> Network:
    return star_graph(4)


@pytest.fixture
def star3() -> Network:
    return star_graph(3)


@pytest.fixture
def triangle() -> Network:
    return complete_graph(3)


@pytest.fixture
def two_triangles() -> Network:
    return Network.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def labeled_network() -> Network:
    """
    Two caporegimes (1, 5), two soldiers (2, 6), one entrepreneur (3).

    Node 1 is the hub; node 5 bridges into a second cluster.
    """
    edges = [
        (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4),
        (5, 6), (5, 7), (6, 7), (7, 8),
    ]
    labels = {
        1: CAPOREGIME, 5: CAPOREGIME,
        2: SOLDIER, 6: SOLDIER,
        3: ENTREPRENEUR,
        4: UNCLEAR, 7: UNCLEAR, 8: UNCLEAR,
    }
    return Network.from_edges(edges, labels=labels)


def write_dataset(directory: Path, name: str, edges_text: str, attrs_text: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    (directory / f"montagna_{name}_edges.csv").write_text(edges_text, encoding="utf-8")
    (directory / f"montagna_{name}_attributes.csv").write_text(attrs_text, encoding="utf-8")


@pytest.fixture
def dataset_dir(tmp_path) -> Path:
    """Canonical files for small stand-ins of both networks"""
    data = tmp_path / "data"
    write_dataset(
        data,
        "meetings",
        "source,target,weight\n"
        "1,2,3\n1,3,1\n1,4,2\n2,3,1\n4,5,1\n5,6,1\n5,7,1\n6,7,4\n",
        "node_id,role,subtype\n"
        "1,caporegime,\n2,soldier,\n3,associate,entrepreneur\n"
        "4,caporegime,\n5,soldier,\n6,relative,\n",
    )
    write_dataset(
        data,
        "phone_calls",
        "source,target,weight\n"
        "1,2,1\n2,8,1\n8,9,2\n",
        "node_id,role,subtype\n"
        "1,caporegime,\n8,associate,lawyer\n",
    )
    return data
