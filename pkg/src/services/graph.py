"""Undirected simple graph with stable node identities, BFS connectivity and hop distances"""
from collections import deque
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Set, Tuple, Union
from pydantic import BaseModel
from src.core.exceptions import GraphException, UnknownNodeException
from src.schemas.roles import Role

NodeId = int
Edge = Union[Tuple[NodeId, NodeId], Tuple[NodeId, NodeId, float]]


class Network:
    """
    Undirected, weighted, role-labeled simple graph.

    Weights count contacts between two actors and never enter distance
    computations. Node order is insertion order and survives removals.
    Instances are treated as values: mutating operations return a new
    Network and leave the receiver untouched.
    """

    __slots__ = ("_adj", "_labels", "_edge_count")

    def __init__(
        self,
        nodes: Optional[Iterable[NodeId]] = None,
        edges: Optional[Iterable[Edge]] = None,
        labels: Optional[Mapping[NodeId, Role]] = None,
    ):
        self._adj: Dict[NodeId, Dict[NodeId, float]] = {}
        self._labels: Dict[NodeId, Role] = {}
        self._edge_count = 0

        for v in nodes or ():
            self._adj.setdefault(v, {})
        for edge in edges or ():
            self._add_edge(*edge)
        for v, role in (labels or {}).items():
            if v not in self._adj:
                raise UnknownNodeException(v)
            self._labels[v] = role

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Edge],
        labels: Optional[Mapping[NodeId, Role]] = None,
        nodes: Optional[Iterable[NodeId]] = None,
    ) -> "Network":
        """Build a graph; repeated pairs collapse into one edge with summed weight."""
        return cls(nodes=nodes, edges=edges, labels=labels)

    def _add_edge(self, u: NodeId, v: NodeId, weight: float = 1.0) -> None:
        if u == v:
            raise GraphException(f"Self-loop on node {u!r} is not allowed in a simple graph")
        if not weight > 0:
            raise GraphException(f"Edge ({u!r}, {v!r}) has non-positive weight {weight!r}")
        nbrs_u = self._adj.setdefault(u, {})
        nbrs_v = self._adj.setdefault(v, {})
        if v in nbrs_u:
            nbrs_u[v] += weight
            nbrs_v[u] += weight
            return
        nbrs_u[v] = weight
        nbrs_v[u] = weight
        self._edge_count += 1

    # --- queries ---

    @property
    def nodes(self) -> List[NodeId]:
        return list(self._adj)

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def labels(self) -> Dict[NodeId, Role]:
        return dict(self._labels)

    def label(self, v: NodeId) -> Optional[Role]:
        self._require(v)
        return self._labels.get(v)

    def nodes_with_role(self, role: Role) -> List[NodeId]:
        """Nodes carrying `role`, in node order"""
        return [v for v in self._adj if self._labels.get(v) == role]

    def has_node(self, v: NodeId) -> bool:
        return v in self._adj

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: NodeId) -> List[NodeId]:
        self._require(v)
        return list(self._adj[v])

    def degree(self, v: NodeId) -> int:
        self._require(v)
        return len(self._adj[v])

    def degrees(self) -> Dict[NodeId, int]:
        return {v: len(nbrs) for v, nbrs in self._adj.items()}

    def weight(self, u: NodeId, v: NodeId) -> float:
        if not self.has_edge(u, v):
            raise GraphException(f"No edge between {u!r} and {v!r}")
        return self._adj[u][v]

    def edges(self) -> Iterator[Tuple[NodeId, NodeId, float]]:
        """Each undirected edge once, as (u, v, weight) with u earlier in node order"""
        done: Set[NodeId] = set()
        for u, nbrs in self._adj.items():
            for v, w in nbrs.items():
                if v not in done:
                    yield u, v, w
            done.add(u)

    @property
    def adj(self) -> Mapping[NodeId, Mapping[NodeId, float]]:
        """Internal adjacency used by the traversal kernels; callers must not mutate it"""
        return self._adj

    def _require(self, v: NodeId) -> None:
        if v not in self._adj:
            raise UnknownNodeException(v)

    # --- value-returning updates ---

    def copy(self) -> "Network":
        clone = Network.__new__(Network)
        clone._adj = {v: dict(nbrs) for v, nbrs in self._adj.items()}
        clone._labels = dict(self._labels)
        clone._edge_count = self._edge_count
        return clone

    def remove_node(self, v: NodeId) -> "Network":
        """New graph without v and its incident edges"""
        self._require(v)
        clone = self.copy()
        clone._discard(v)
        return clone

    def _discard(self, v: NodeId) -> None:
        # In-place removal; only called on private copies
        for u in self._adj.pop(v):
            del self._adj[u][v]
            self._edge_count -= 1
        self._labels.pop(v, None)

    def with_labels(self, labels: Mapping[NodeId, Role]) -> "Network":
        """New graph with `labels` set on top of the existing ones"""
        clone = self.copy()
        for v, role in labels.items():
            clone._require(v)
            clone._labels[v] = role
        return clone

    def relabel(self, mapping: Mapping[NodeId, NodeId]) -> "Network":
        """New graph with node identities renamed through a bijection"""
        if len(set(mapping[v] for v in self._adj)) != len(self._adj):
            raise GraphException("Relabeling must be injective")
        return Network(
            nodes=[mapping[v] for v in self._adj],
            edges=[(mapping[u], mapping[v], w) for u, v, w in self.edges()],
            labels={mapping[v]: role for v, role in self._labels.items()},
        )

    # --- dunder ---

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[NodeId]:
        return iter(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Network):
            return NotImplemented
        return (
            set(self._adj) == set(other._adj)
            and all(self._adj[v] == other._adj[v] for v in self._adj)
            and self._labels == other._labels
        )

    def __repr__(self) -> str:
        return f"<Network(nodes={self.node_count}, edges={self.edge_count})>"


class ComponentPartition:
    """Connected components in discovery order"""

    __slots__ = ("components",)

    def __init__(self, components: List[Set[NodeId]]):
        self.components = components

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def largest_size(self) -> int:
        return max((len(c) for c in self.components), default=0)

    def __repr__(self) -> str:
        return f"<ComponentPartition(count={self.count}, largest_size={self.largest_size})>"


class DistanceMap:
    """Hop counts from one source; unreachable nodes are absent"""

    __slots__ = ("source", "distances")

    def __init__(self, source: NodeId, distances: Dict[NodeId, int]):
        self.source = source
        self.distances = distances

    def __getitem__(self, v: NodeId) -> int:
        return self.distances[v]

    def __contains__(self, v: object) -> bool:
        return v in self.distances

    def __len__(self) -> int:
        return len(self.distances)

    def get(self, v: NodeId) -> Optional[int]:
        return self.distances.get(v)


class NetworkStatistics(BaseModel):
    """Descriptive statistics of a network"""
    nodes: int
    edges: int
    density: float
    mean_degree: float
    max_degree: int
    components: int
    largest_component: int
    global_efficiency: float
    total_weight: float


def remove_node(g: Network, v: NodeId) -> Network:
    """Delete v and every incident edge; survivors keep their identities."""
    return g.remove_node(v)


def hop_counts(adj: Mapping[NodeId, Iterable[NodeId]], s: NodeId) -> Dict[NodeId, int]:
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if w not in dist:
                dist[w] = du
                queue.append(w)
    return dist


def connected_components(g: Network) -> ComponentPartition:
    """Partition the nodes by BFS; the empty graph has no components."""
    seen: Set[NodeId] = set()
    components: List[Set[NodeId]] = []
    adj = g.adj
    for v in adj:
        if v in seen:
            continue
        comp = set(hop_counts(adj, v))
        seen |= comp
        components.append(comp)
    return ComponentPartition(components)


def bfs_distances(g: Network, s: NodeId) -> DistanceMap:
    """Unweighted shortest-path hop counts from s to every reachable node"""
    if s not in g:
        raise UnknownNodeException(s)
    return DistanceMap(s, hop_counts(g.adj, s))


def network_statistics(g: Network) -> NetworkStatistics:
    """Size, density, degree, connectivity and efficiency summary"""
    # Imported here to keep graph_core free of a module-level dependency cycle
    from src.services.disruption import global_efficiency

    n = g.node_count
    degrees = g.degrees()
    partition = connected_components(g)
    return NetworkStatistics(
        nodes=n,
        edges=g.edge_count,
        density=(2.0 * g.edge_count / (n * (n - 1))) if n > 1 else 0.0,
        mean_degree=(2.0 * g.edge_count / n) if n else 0.0,
        max_degree=max(degrees.values(), default=0),
        components=partition.count,
        largest_component=partition.largest_size,
        global_efficiency=global_efficiency(g),
        total_weight=sum(w for _, _, w in g.edges()),
    )
