"""Degree, betweenness and closeness centrality over hop distances"""
from collections import deque
from typing import Dict, List, Optional, Tuple
from src.core.config import settings
from src.core.exceptions import DegenerateGraphException, OversizeGraphException
from src.schemas.centrality import CentralityMeasure, CentralityScores
from src.services.graph import Network, NodeId, hop_counts


def degree_centrality(g: Network) -> CentralityScores:
    """DC_i = deg(i) / (n - 1) over the current node count n"""
    n = g.node_count
    if n <= 1:
        raise DegenerateGraphException(
            f"Degree centrality needs at least 2 nodes, graph has {n}"
        )
    scale = 1.0 / (n - 1)
    return CentralityScores(
        measure=CentralityMeasure.DEGREE,
        scores={v: len(nbrs) * scale for v, nbrs in g.adj.items()},
    )


def _brandes_bfs(
    adj, source: NodeId
) -> Tuple[List[NodeId], Dict[NodeId, float], Dict[NodeId, List[NodeId]]]:
    """Visit order, shortest-path counts and predecessors from one source"""
    dist = {source: 0}
    sigma: Dict[NodeId, float] = {source: 1.0}
    preds: Dict[NodeId, List[NodeId]] = {source: []}
    order: List[NodeId] = []
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        dv = dist[v]
        sv = sigma[v]
        for w in adj[v]:
            if w not in dist:
                dist[w] = dv + 1
                sigma[w] = 0.0
                preds[w] = []
                queue.append(w)
            if dist[w] == dv + 1:
                sigma[w] += sv
                preds[w].append(v)
    return order, sigma, preds


def betweenness_centrality(g: Network) -> CentralityScores:
    """
    Unnormalized betweenness over unordered pairs, endpoints excluded.

    Brandes' dependency accumulation: one BFS per source, then a reverse
    sweep adding sigma(v)/sigma(w) * (1 + delta(w)) to every predecessor.
    Each unordered pair is reached from both of its endpoints, hence the
    final halving.
    """
    adj = g.adj
    bc: Dict[NodeId, float] = {v: 0.0 for v in adj}
    for s in adj:
        order, sigma, preds = _brandes_bfs(adj, s)
        delta = {v: 0.0 for v in order}
        while order:
            w = order.pop()
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                bc[w] += delta[w]
    return CentralityScores(
        measure=CentralityMeasure.BETWEENNESS,
        scores={v: score / 2.0 for v, score in bc.items()},
    )


def _path_counts(adj, source: NodeId) -> Tuple[Dict[NodeId, int], Dict[NodeId, int]]:
    """Hop distances and exact shortest-path counts from one source"""
    dist = {source: 0}
    count = {source: 1}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                count[w] = 0
                queue.append(w)
            if dist[w] == dist[v] + 1:
                count[w] += count[v]
    return dist, count


def betweenness_bruteforce(g: Network, max_nodes: Optional[int] = None) -> CentralityScores:
    """
    Betweenness by explicit pair enumeration, used to check the Brandes kernel.

    For every unordered pair {h, k} and intermediate i, the number of
    shortest h-k paths through i is count_h(i) * count_k(i) whenever
    d(h, i) + d(i, k) = d(h, k).
    """
    bound = settings.BRUTEFORCE_MAX_NODES if max_nodes is None else max_nodes
    n = g.node_count
    if n > bound:
        raise OversizeGraphException(n, bound)

    adj = g.adj
    nodes = list(adj)
    tables = {v: _path_counts(adj, v) for v in nodes}
    bc: Dict[NodeId, float] = {v: 0.0 for v in nodes}
    for a, h in enumerate(nodes):
        dist_h, count_h = tables[h]
        for k in nodes[a + 1:]:
            if k not in dist_h:
                continue
            dist_k, count_k = tables[k]
            d_hk = dist_h[k]
            g_hk = count_h[k]
            for i in nodes:
                if i == h or i == k or i not in dist_h:
                    continue
                if dist_h[i] + dist_k[i] == d_hk:
                    bc[i] += count_h[i] * count_k[i] / g_hk
    return CentralityScores(measure=CentralityMeasure.BETWEENNESS, scores=bc)


def closeness_centrality(g: Network) -> CentralityScores:
    """
    CL_i = c_i / sum_j d_ij with c_i the size of i's component.

    On a connected graph c_i is the node count n. Isolated nodes score 0.
    """
    adj = g.adj
    scores: Dict[NodeId, float] = {}
    for v in adj:
        dist = hop_counts(adj, v)
        total = sum(dist.values())
        scores[v] = len(dist) / total if total > 0 else 0.0
    return CentralityScores(measure=CentralityMeasure.CLOSENESS, scores=scores)


_MEASURES = {
    CentralityMeasure.DEGREE: degree_centrality,
    CentralityMeasure.BETWEENNESS: betweenness_centrality,
    CentralityMeasure.CLOSENESS: closeness_centrality,
}


def compute_centrality(g: Network, measure: CentralityMeasure) -> CentralityScores:
    """Dispatch to one of the three measures"""
    return _MEASURES[CentralityMeasure(measure)](g)


def _tie_key(score: float, node: NodeId, decimals: int) -> Tuple[float, NodeId]:
    return -round(score, decimals), node


def rank_nodes(scores: Dict[NodeId, float], decimals: Optional[int] = None) -> List[NodeId]:
    """Nodes by descending score; ties go to the smallest NodeId"""
    places = settings.TIE_DECIMALS if decimals is None else decimals
    return sorted(scores, key=lambda v: _tie_key(scores[v], v, places))


def top_node(scores: Dict[NodeId, float], decimals: Optional[int] = None) -> NodeId:
    """Highest scoring node, ties to the smallest NodeId"""
    places = settings.TIE_DECIMALS if decimals is None else decimals
    return min(scores, key=lambda v: _tie_key(scores[v], v, places))
