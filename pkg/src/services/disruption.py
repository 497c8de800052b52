"""Sequential node-removal simulations and the integrity metrics they record"""
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple, Union
import numpy as np
from src.core.exceptions import DegenerateGraphException, EmptyCandidateException, GraphException
from src.core.logging_config import get_logger
from src.schemas.centrality import CentralityMeasure
from src.schemas.strategy import Strategy, StrategyKind
from src.schemas.trajectory import (
    Baseline,
    EnsembleResult,
    MeanRecord,
    MeanTrajectory,
    Trajectory,
    TrajectoryRecord,
)
from src.services.centrality import compute_centrality, degree_centrality, rank_nodes, top_node
from src.services.graph import Network, NodeId, connected_components, hop_counts

logger = get_logger(__name__)

_SOCIAL_MEASURES = {
    StrategyKind.DEGREE_ATTACK: CentralityMeasure.DEGREE,
    StrategyKind.BETWEENNESS_ATTACK: CentralityMeasure.BETWEENNESS,
    StrategyKind.CLOSENESS_ATTACK: CentralityMeasure.CLOSENESS,
}


def global_efficiency(g: Network) -> float:
    """Mean of 1/d_ij over ordered pairs i != j; unreachable pairs add 0."""
    n = g.node_count
    if n <= 1:
        return 0.0
    adj = g.adj
    total = 0.0
    for s in adj:
        for d in hop_counts(adj, s).values():
            if d:
                total += 1.0 / d
    return total / (n * (n - 1))


def integrity(g: Network) -> Tuple[int, int, float]:
    """(component count, largest component size, global efficiency)"""
    partition = connected_components(g)
    return partition.count, partition.largest_size, global_efficiency(g)


def derive_seed(base_seed: int, replication: int, stream: int = 0) -> int:
    """
    Replication seed, a pure function of (base_seed, replication).

    A non-zero stream yields an independent seed for another consumer of
    the same replication, e.g. graph generation next to random removal.
    """
    entropy = [base_seed, replication] if stream == 0 else [base_seed, replication, stream]
    state = np.random.SeedSequence(entropy).generate_state(1, dtype=np.uint64)
    return int(state[0])


def _candidates(g: Network, strategy: Strategy) -> List[NodeId]:
    if strategy.kind == StrategyKind.ROLE_ATTACK:
        return g.nodes_with_role(strategy.role_target)
    return g.nodes


def _ranked_candidates(g: Network, strategy: Strategy) -> List[NodeId]:
    """Candidates ordered by the strategy's score on g, best first"""
    candidates = _candidates(g, strategy)
    if g.node_count <= 1:
        return candidates
    if strategy.kind == StrategyKind.ROLE_ATTACK:
        dc = degree_centrality(g).scores
        return rank_nodes({v: dc[v] for v in candidates})
    return rank_nodes(compute_centrality(g, _SOCIAL_MEASURES[strategy.kind]).scores)


def select_target(
    g: Network,
    strategy: Strategy,
    rng: Optional[np.random.Generator] = None,
) -> NodeId:
    """
    Next node to remove from g.

    Social strategies take the argmax of their centrality on g as it is now,
    role attacks the surviving role holder of highest degree centrality,
    and the random strategy a uniform draw from the survivors. Ties go to
    the smallest NodeId. On a single-node graph that node is returned
    directly, since degree centrality is undefined there.
    """
    candidates = _candidates(g, strategy)
    if not candidates:
        raise EmptyCandidateException(f"No node left to target for strategy '{strategy.name}'")

    if strategy.kind == StrategyKind.RANDOM:
        if rng is None:
            rng = np.random.default_rng(strategy.seed)
        return candidates[int(rng.integers(len(candidates)))]

    if g.node_count <= 1:
        return candidates[0]
    if strategy.kind == StrategyKind.ROLE_ATTACK:
        dc = degree_centrality(g).scores
        return top_node({v: dc[v] for v in candidates})
    return top_node(compute_centrality(g, _SOCIAL_MEASURES[strategy.kind]).scores)


def _normalize(value: float, base: float) -> float:
    return value / base if base > 0 else 0.0


def run_disruption(
    g: Network,
    strategy: Strategy,
    network_id: str = "network",
    replication: int = 0,
) -> Trajectory:
    """
    Remove nodes one at a time and record normalized (cc, lcc, efficiency).

    Social and random strategies run for |V| steps, ending on the empty
    graph; role attacks run for as many steps as there are role holders.
    A non-adaptive strategy ranks the intact graph once and removes nodes
    in that fixed order.
    """
    if g.node_count == 0:
        raise DegenerateGraphException("Cannot disrupt an empty network")

    cc0, lcc0, eff0 = integrity(g)
    baseline = Baseline(cc=cc0, lcc=lcc0, efficiency=eff0)

    if strategy.kind == StrategyKind.ROLE_ATTACK:
        steps = len(g.nodes_with_role(strategy.role_target))
        if steps == 0:
            raise EmptyCandidateException(
                f"Network '{network_id}' has no node labeled {strategy.role_target}"
            )
    else:
        steps = g.node_count

    rng = np.random.default_rng(strategy.seed) if strategy.kind == StrategyKind.RANDOM else None
    plan: Optional[List[NodeId]] = None
    if not strategy.adaptive and strategy.kind != StrategyKind.RANDOM:
        plan = _ranked_candidates(g, strategy)

    logger.debug(
        f"Disrupting {network_id} (replication {replication}) with {strategy.name}: "
        f"{steps} steps, baseline cc={cc0} lcc={lcc0} eff={eff0:.6f}"
    )

    work = g.copy()
    records: List[TrajectoryRecord] = []
    for step in range(1, steps + 1):
        target = plan[step - 1] if plan is not None else select_target(work, strategy, rng)
        work = work.remove_node(target)
        cc, lcc, eff = integrity(work)
        records.append(TrajectoryRecord(
            step=step,
            removed=target,
            cc_norm=_normalize(cc, cc0),
            lcc_norm=_normalize(lcc, lcc0),
            eff_norm=_normalize(eff, eff0),
        ))
        logger.debug(f"step {step}: removed {target} -> cc={cc} lcc={lcc} eff={eff:.6f}")

    return Trajectory(
        strategy=strategy,
        network_id=network_id,
        replication=replication,
        baseline=baseline,
        records=records,
    )


def mean_trajectory(trajectories: Sequence[Trajectory]) -> MeanTrajectory:
    """Pointwise mean of equally long trajectories"""
    if not trajectories:
        raise GraphException("Cannot average an empty set of trajectories")
    lengths = {len(t.records) for t in trajectories}
    if len(lengths) != 1:
        raise GraphException(f"Trajectories differ in length: {sorted(lengths)}")

    values = np.array(
        [[(r.cc_norm, r.lcc_norm, r.eff_norm) for r in t.records] for t in trajectories],
        dtype=float,
    ).reshape(len(trajectories), lengths.pop(), 3)
    first = trajectories[0]
    return MeanTrajectory(
        network_id=first.network_id,
        strategy_name=first.strategy.name,
        replications=len(trajectories),
        records=mean_records(values),
    )


def mean_records(values: np.ndarray) -> List[MeanRecord]:
    """Step-wise means of a (replications, steps, 3) array of cc, lcc, eff"""
    means = values.mean(axis=0)
    return [
        MeanRecord(step=i + 1, cc_norm=float(cc), lcc_norm=float(lcc), eff_norm=float(eff))
        for i, (cc, lcc, eff) in enumerate(means)
    ]


def run_job(args: Tuple[Network, Strategy, str, int]) -> Trajectory:
    """run_disruption over one packed (graph, strategy, network_id, replication) job"""
    g, strategy, network_id, replication = args
    return run_disruption(g, strategy, network_id, replication)


def run_random_ensemble(
    g: Network,
    replications: int,
    base_seed: int,
    network_id: str = "network",
    max_workers: int = 1,
) -> EnsembleResult:
    """
    Replicated random disruption.

    Replication r draws from the seed derive_seed(base_seed, r), so results
    do not depend on how replications are scheduled.
    """
    if replications < 1:
        raise ValueError("replications must be at least 1")

    jobs = [
        (g, Strategy(kind=StrategyKind.RANDOM, seed=derive_seed(base_seed, r)), network_id, r)
        for r in range(replications)
    ]
    if max_workers > 1 and replications > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as pool:
            trajectories = list(pool.map(run_job, jobs))
    else:
        trajectories = [run_job(job) for job in jobs]

    logger.info(f"Random ensemble on {network_id}: {replications} replications")
    return EnsembleResult(
        trajectories=trajectories,
        mean=mean_trajectory(trajectories),
        base_seed=base_seed,
    )


def dismantling_step(
    trajectory: Union[Trajectory, MeanTrajectory],
    threshold: float,
    metric: str = "lcc_norm",
) -> Optional[int]:
    """First step whose metric is strictly below threshold, or None"""
    for record in trajectory.records:
        if getattr(record, metric) < threshold:
            return record.step
    return None
