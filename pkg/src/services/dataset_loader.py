"""Load, validate and export the Montagna networks in the canonical CSV layout"""
import csv
import re
from collections import Counter
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Set, Tuple, Union
from pydantic import ValidationError
from src.core.config import settings
from src.core.exceptions import (
    ContradictoryLabelException,
    DatasetNotFoundException,
    DatasetParseException,
    IsolatedNodeException,
    UnknownRoleException,
)
from src.core.logging_config import get_logger
from src.schemas.dataset import (
    MEETINGS_ROLE_CENSUS,
    PHONE_CALLS_ROLE_CENSUS,
    DatasetDescriptor,
    DatasetName,
    ValidationReport,
)
from src.schemas.roles import UNCLEAR, Role, RoleKind
from src.services.graph import Network, NodeId

logger = get_logger(__name__)

EDGE_HEADER = ["source", "target", "weight"]
ATTR_HEADER = ["node_id", "role", "subtype"]

_EXPECTED_COUNTS = {
    DatasetName.MEETINGS: (101, 256, MEETINGS_ROLE_CENSUS),
    DatasetName.PHONE_CALLS: (100, 124, PHONE_CALLS_ROLE_CENSUS),
}

PathLike = Union[str, Path]


def montagna_descriptor(name: Union[str, DatasetName], data_dir: Optional[PathLike] = None) -> DatasetDescriptor:
    """Descriptor with the published counts and canonical file names under data_dir"""
    dataset = DatasetName(name)
    base = Path(data_dir) if data_dir is not None else settings.data_path
    nodes, edges, census = _EXPECTED_COUNTS[dataset]
    return DatasetDescriptor(
        name=dataset,
        edge_path=base / f"montagna_{dataset.value}_edges.csv",
        attr_path=base / f"montagna_{dataset.value}_attributes.csv",
        expected_nodes=nodes,
        expected_edges=edges,
        expected_roles=dict(census),
    )


def _rows(path: Path, header: List[str]) -> Iterator[Tuple[int, List[str]]]:
    """(line number, fields) for every data row of a canonical CSV"""
    if not path.exists():
        raise DatasetNotFoundException(path)
    try:
        with open(path, newline="", encoding="utf-8") as f:
            reader = csv.reader(f)
            first = next(reader, None)
            if first is None or [c.strip().lower() for c in first] != header:
                raise DatasetParseException(path, 1, f"expected header {','.join(header)}, got {first}")
            for fields in reader:
                if not fields or all(not c.strip() for c in fields):
                    continue
                if len(fields) != len(header):
                    raise DatasetParseException(
                        path, reader.line_num, f"expected {len(header)} fields, got {len(fields)}"
                    )
                yield reader.line_num, [c.strip() for c in fields]
    except UnicodeDecodeError as e:
        raise DatasetParseException(path, None, f"not valid UTF-8: {e}")
    except OSError as e:
        logger.error(f"I/O error while reading {path}: {e}", exc_info=True)
        raise


def _node_id(path: Path, line: int, text: str) -> NodeId:
    try:
        return int(text)
    except ValueError:
        raise DatasetParseException(path, line, f"node id '{text}' is not an integer")


def read_edges(path: PathLike) -> List[Tuple[NodeId, NodeId, float]]:
    """Rows of a canonical edge list; self-loops are dropped with a warning"""
    path = Path(path)
    edges: List[Tuple[NodeId, NodeId, float]] = []
    seen: Set[Tuple[NodeId, NodeId]] = set()
    for line, (src, dst, weight_text) in _rows(path, EDGE_HEADER):
        u = _node_id(path, line, src)
        v = _node_id(path, line, dst)
        try:
            weight = float(weight_text)
        except ValueError:
            raise DatasetParseException(path, line, f"weight '{weight_text}' is not a number")
        if not weight > 0:
            raise DatasetParseException(path, line, f"weight must be positive, got {weight_text}")
        if u == v:
            logger.warning(f"{path}:{line}: dropping self-loop on node {u}")
            continue
        pair = (min(u, v), max(u, v))
        if pair in seen:
            logger.warning(f"{path}:{line}: repeated edge {u}-{v}, weights are summed")
        seen.add(pair)
        edges.append((u, v, weight))
    return edges


def read_attributes(path: PathLike) -> Dict[NodeId, Role]:
    """Role label per node from a canonical attribute file"""
    path = Path(path)
    labels: Dict[NodeId, Role] = {}
    for line, (node_text, role_text, subtype_text) in _rows(path, ATTR_HEADER):
        node = _node_id(path, line, node_text)
        try:
            role = Role.parse(role_text, subtype_text or None)
        except ValidationError as e:
            raise DatasetParseException(path, line, e.errors()[0]["msg"])
        except ValueError:
            raise UnknownRoleException(
                path, line, f"unknown role '{role_text}'" + (f"/'{subtype_text}'" if subtype_text else "")
            )
        previous = labels.get(node)
        if previous is not None and previous != role:
            raise ContradictoryLabelException(
                path, line, f"node {node} labeled both {previous} and {role}"
            )
        labels[node] = role
    return labels


def load_network(d: DatasetDescriptor, allow_isolated: Optional[bool] = None) -> Network:
    """
    Build the labeled network of a dataset.

    Repeated contacts collapse into one edge whose weight is their sum.
    Nodes without a label carry the 'unclear' role. Nodes listed only in
    the attribute file are rejected unless allow_isolated is set.
    """
    admit_isolated = settings.ALLOW_ISOLATED_NODES if allow_isolated is None else allow_isolated
    edges = read_edges(d.edge_path)
    labels = read_attributes(d.attr_path)

    g = Network.from_edges(edges)
    isolated = [v for v in labels if v not in g]
    if isolated and not admit_isolated:
        raise IsolatedNodeException(
            f"{d.attr_path}: {len(isolated)} node(s) have no contact in {d.edge_path.name} "
            f"(e.g. {isolated[:5]}); pass --allow-isolated to admit them"
        )

    g = Network.from_edges(
        edges,
        nodes=list(g) + isolated,
        labels={v: labels.get(v, UNCLEAR) for v in list(g) + isolated},
    )
    logger.info(f"Loaded {d.name.value}: {g.node_count} nodes, {g.edge_count} edges")
    return g


def role_census(g: Network) -> Dict[str, int]:
    """Number of nodes per role label"""
    return dict(Counter(role.label for role in g.labels.values()))


def validate(g: Network, d: DatasetDescriptor) -> ValidationReport:
    """Compare a loaded network with the descriptor's published counts"""
    mismatches: List[str] = []
    node_ok = g.node_count == d.expected_nodes
    edge_ok = g.edge_count == d.expected_edges
    if not node_ok:
        mismatches.append(f"node count {g.node_count}, expected {d.expected_nodes}")
    if not edge_ok:
        mismatches.append(f"edge count {g.edge_count}, expected {d.expected_edges}")

    found = role_census(g)
    role_counts: Dict[str, Tuple[int, int]] = {}
    for label in list(d.expected_roles) + [k for k in found if k not in d.expected_roles]:
        pair = (found.get(label, 0), d.expected_roles.get(label, 0))
        role_counts[label] = pair
        if pair[0] != pair[1]:
            mismatches.append(f"role {label}: found {pair[0]}, expected {pair[1]}")

    for finding in mismatches:
        logger.warning(f"{d.name.value}: {finding}")
    return ValidationReport(
        dataset=d.name,
        node_count_ok=node_ok,
        edge_count_ok=edge_ok,
        role_counts=role_counts,
        mismatches=mismatches,
    )


def shared_nodes(a: Network, b: Network) -> Set[NodeId]:
    """Actors present in both networks"""
    return set(a) & set(b)


def _format_weight(weight: float) -> str:
    return str(int(weight)) if float(weight).is_integer() else repr(float(weight))


def export_network(g: Network, edge_path: PathLike, attr_path: PathLike) -> None:
    """
    Write g in the canonical edge-list and attribute formats.

    Nodes without edges appear only in the attribute file, so reloading
    such a network needs load_network(..., allow_isolated=True).
    """
    edge_path, attr_path = Path(edge_path), Path(attr_path)
    edge_path.parent.mkdir(parents=True, exist_ok=True)
    attr_path.parent.mkdir(parents=True, exist_ok=True)

    with open(edge_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(EDGE_HEADER)
        for u, v, w in g.edges():
            writer.writerow([u, v, _format_weight(w)])

    labels = g.labels
    with open(attr_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(ATTR_HEADER)
        for v in g:
            role = labels.get(v)
            if role is None:
                continue
            subtype = role.subtype.value if role.kind == RoleKind.ASSOCIATE else ""
            writer.writerow([v, role.kind.value, subtype])
    logger.info(f"Exported {g.node_count} nodes to {edge_path} and {attr_path}")


_SPLIT = re.compile(r"[,;\s]+")


def normalize_raw_edges(raw_path: PathLike, out_path: PathLike) -> int:
    """
    Convert a raw edge list into the canonical layout.

    Accepts comma, semicolon or whitespace separated rows with an optional
    header and an optional third weight column. Rows naming the same pair,
    in either direction, are summed. Returns the number of edges written.
    """
    raw_path, out_path = Path(raw_path), Path(out_path)
    if not raw_path.exists():
        raise DatasetNotFoundException(raw_path)

    weights: Dict[Tuple[NodeId, NodeId], float] = {}
    orientation: Dict[Tuple[NodeId, NodeId], Tuple[NodeId, NodeId]] = {}
    with open(raw_path, encoding="utf-8-sig") as f:
        for line_no, line in enumerate(f, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            tokens = [t for t in _SPLIT.split(text) if t]
            if len(tokens) not in (2, 3):
                raise DatasetParseException(raw_path, line_no, f"expected 2 or 3 columns, got {len(tokens)}")
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                if not weights:
                    logger.debug(f"{raw_path}:{line_no}: treating '{text}' as a header")
                    continue
                raise DatasetParseException(raw_path, line_no, f"node ids must be integers: '{text}'")
            try:
                weight = float(tokens[2]) if len(tokens) == 3 else 1.0
            except ValueError:
                raise DatasetParseException(raw_path, line_no, f"weight '{tokens[2]}' is not a number")
            if u == v:
                logger.warning(f"{raw_path}:{line_no}: dropping self-loop on node {u}")
                continue
            key = (min(u, v), max(u, v))
            orientation.setdefault(key, (u, v))
            weights[key] = weights.get(key, 0.0) + weight

    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(EDGE_HEADER)
        for key, weight in weights.items():
            u, v = orientation[key]
            writer.writerow([u, v, _format_weight(weight)])
    logger.info(f"Normalized {raw_path} -> {out_path}: {len(weights)} edges")
    return len(weights)
