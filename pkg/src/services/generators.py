"""Barabási–Albert growth and degree-rank transfer of role labels"""
from typing import List, Optional, Tuple
import numpy as np
from pydantic import ValidationError
from src.core.exceptions import InvalidParameterException, MissingRoleException, RankOutOfBoundsException
from src.core.logging_config import get_logger
from src.schemas.generator import BAParams, RankProfile
from src.schemas.roles import Role
from src.services.graph import Network, NodeId

logger = get_logger(__name__)


def make_ba_params(n: int, m: int, seed: int = 0) -> BAParams:
    """BAParams, with range errors reported as InvalidParameterException"""
    try:
        return BAParams(n=n, m=m, seed=seed)
    except ValidationError as e:
        raise InvalidParameterException(
            f"Invalid Barabási–Albert parameters n={n}, m={m}: {e.errors()[0]['msg']}"
        )


def _distinct_from_urn(urn: List[NodeId], m: int, rng: np.random.Generator) -> List[NodeId]:
    # Rejection sampling keeps targets distinct so the graph stays simple
    chosen: List[NodeId] = []
    picked = set()
    while len(chosen) < m:
        v = urn[int(rng.integers(len(urn)))]
        if v not in picked:
            picked.add(v)
            chosen.append(v)
    return chosen


def barabasi_albert(p: BAParams) -> Network:
    """
    Grow a BA graph from m isolated seed nodes.

    Node m attaches to every seed; each later node attaches to m distinct
    nodes drawn from an urn holding every node once per incident edge,
    which makes the draw degree-proportional. The result has exactly
    m * (n - m) edges and nodes 0..n-1.
    """
    if p.m < 1 or p.m >= p.n:
        raise InvalidParameterException(f"Need 1 <= m < n, got n={p.n}, m={p.m}")

    rng = np.random.default_rng(p.seed)
    edges: List[Tuple[NodeId, NodeId]] = []
    urn: List[NodeId] = []
    targets: List[NodeId] = list(range(p.m))
    for source in range(p.m, p.n):
        edges.extend((source, t) for t in targets)
        urn.extend(targets)
        urn.extend([source] * p.m)
        targets = _distinct_from_urn(urn, p.m, rng)

    g = Network.from_edges(edges, nodes=range(p.n))
    logger.debug(f"Generated BA(n={p.n}, m={p.m}, seed={p.seed}) with {g.edge_count} edges")
    return g


def degree_order(g: Network) -> List[NodeId]:
    """Nodes by degree descending, ties to the smallest NodeId"""
    degrees = g.degrees()
    return sorted(degrees, key=lambda v: (-degrees[v], v))


def degree_ranking(g: Network) -> List[Tuple[int, NodeId, int, Optional[Role]]]:
    """(rank, node, degree, role) rows, rank 1 being the best connected"""
    labels = g.labels
    return [
        (rank, v, g.degree(v), labels.get(v))
        for rank, v in enumerate(degree_order(g), start=1)
    ]


def degree_rank_profile(g: Network, role: Role) -> RankProfile:
    """Positions that `role` holders occupy in the degree ordering of g"""
    labels = g.labels
    ranks = [rank for rank, v in enumerate(degree_order(g), start=1) if labels.get(v) == role]
    if not ranks:
        raise MissingRoleException(f"No node carries the role {role}")
    return RankProfile(ranks=ranks)


def assign_supposed_roles(g: Network, profile: RankProfile, role: Role) -> Network:
    """Label the nodes at the profile's degree-rank positions of g with `role`"""
    order = degree_order(g)
    for rank in profile.ranks:
        if rank > len(order):
            raise RankOutOfBoundsException(rank, len(order))
    return g.with_labels({order[rank - 1]: role for rank in profile.ranks})


def supposed_role_network(p: BAParams, reference: Network, role: Role) -> Network:
    """BA graph whose nodes at the reference holders' degree ranks carry `role`"""
    profile = degree_rank_profile(reference, role)
    return assign_supposed_roles(barabasi_albert(p), profile, role)
