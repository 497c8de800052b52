"""Graph kernels, simulation and experiment services"""
from src.services.graph import Network, NodeId, connected_components, bfs_distances, remove_node
from src.services.centrality import (
    degree_centrality,
    betweenness_centrality,
    betweenness_bruteforce,
    closeness_centrality,
)
from src.services.disruption import (
    global_efficiency,
    select_target,
    run_disruption,
    run_random_ensemble,
    mean_trajectory,
)
from src.services.generators import barabasi_albert, degree_rank_profile, assign_supposed_roles
from src.services.dataset_loader import load_network, validate, montagna_descriptor
from src.services.dataset_fetcher import fetch_montagna
from src.services.experiment_runner import ExperimentRunner, run_experiment, summarize

__all__ = [
    "Network",
    "NodeId",
    "connected_components",
    "bfs_distances",
    "remove_node",
    "degree_centrality",
    "betweenness_centrality",
    "betweenness_bruteforce",
    "closeness_centrality",
    "global_efficiency",
    "select_target",
    "run_disruption",
    "run_random_ensemble",
    "mean_trajectory",
    "barabasi_albert",
    "degree_rank_profile",
    "assign_supposed_roles",
    "load_network",
    "validate",
    "montagna_descriptor",
    "fetch_montagna",
    "ExperimentRunner",
    "run_experiment",
    "summarize",
]
