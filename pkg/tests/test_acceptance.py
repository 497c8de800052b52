"""End-to-end checks against the published Montagna figures and BA behaviour"""
import numpy as np
import pytest
from src.schemas.dataset import DatasetName
from src.schemas.generator import BAParams
from src.schemas.roles import CAPOREGIME, ENTREPRENEUR, SOLDIER
from src.schemas.strategy import Strategy
from src.services.dataset_loader import load_network, montagna_descriptor, read_edges, shared_nodes, validate
from src.services.disruption import derive_seed, dismantling_step, run_disruption, run_random_ensemble
from src.services.generators import barabasi_albert, degree_order
from src.services.graph import Network
from tests.conftest import requires_montagna, requires_montagna_edges

SOCIAL = ("degree", "betweenness", "closeness")


@pytest.fixture(scope="module")
def montagna():
    return {name: load_network(montagna_descriptor(name)) for name in DatasetName}


@requires_montagna
def test_dataset_sizes(montagna):
    meetings, phone = montagna[DatasetName.MEETINGS], montagna[DatasetName.PHONE_CALLS]
    assert (meetings.node_count, meetings.edge_count) == (101, 256)
    assert (phone.node_count, phone.edge_count) == (100, 124)
    assert len(shared_nodes(meetings, phone)) == 47


@requires_montagna_edges
@pytest.mark.parametrize("name", list(DatasetName))
def test_edge_list_counts(name):
    d = montagna_descriptor(name)
    g = Network.from_edges(read_edges(d.edge_path))
    assert g.edge_count == d.expected_edges
    assert g.node_count <= d.expected_nodes


@requires_montagna
def test_role_census(montagna):
    expected = {
        DatasetName.MEETINGS: {CAPOREGIME: 12, SOLDIER: 18, ENTREPRENEUR: 26},
        DatasetName.PHONE_CALLS: {CAPOREGIME: 7, SOLDIER: 18, ENTREPRENEUR: 25},
    }
    for name, counts in expected.items():
        report = validate(montagna[name], montagna_descriptor(name))
        for role, count in counts.items():
            assert report.role_counts[role.label] == (count, count)


@requires_montagna
def test_removing_hub_drops_its_edges(montagna):
    meetings = montagna[DatasetName.MEETINGS]
    hub = degree_order(meetings)[0]
    h = meetings.remove_node(hub)
    assert h.node_count == 100
    assert h.edge_count == 256 - meetings.degree(hub)


@requires_montagna
@pytest.mark.parametrize("name", list(DatasetName))
@pytest.mark.parametrize("strategy", SOCIAL)
def test_social_attacks_dismantle_within_thirty_steps(montagna, name, strategy):
    trajectory = run_disruption(montagna[name], Strategy.from_name(strategy), name.value)
    step = dismantling_step(trajectory, 0.25)
    assert step is not None and 8 <= step <= 30


@requires_montagna
@pytest.mark.parametrize("name", list(DatasetName))
def test_random_is_least_effective(montagna, name):
    g = montagna[name]
    betweenness = run_disruption(g, Strategy.from_name("betweenness")).metric("lcc_norm")
    ensemble = run_random_ensemble(g, replications=30, base_seed=42)
    random_mean = ensemble.mean.metric("lcc_norm")
    for step in (5, 10, 15, 20):
        assert random_mean[step - 1] >= betweenness[step - 1]

    steps = {s: dismantling_step(run_disruption(g, Strategy.from_name(s)), 0.25) for s in SOCIAL}
    assert steps["betweenness"] <= min(steps["degree"], steps["closeness"]) + 2


@requires_montagna
def test_caporegime_attack_beats_other_roles(montagna):
    meetings = montagna[DatasetName.MEETINGS]
    capo = run_disruption(meetings, Strategy.from_name("caporegime"))
    assert len(capo.records) == 12
    final = capo.records[-1].lcc_norm
    for other in ("soldier", "entrepreneur"):
        records = run_disruption(meetings, Strategy.from_name(other)).records
        assert final < records[11].lcc_norm


def ba_efficiency_steps(m: int, replications: int = 30):
    """Degree-attack step at which eff_norm first drops below 0.25, per BA(100, m) seed"""
    degree = Strategy.from_name("degree")
    steps = []
    for r in range(replications):
        g = barabasi_albert(BAParams(n=100, m=m, seed=derive_seed(42, r, stream=1)))
        steps.append(dismantling_step(run_disruption(g, degree), 0.25, metric="eff_norm"))
    assert all(s is not None for s in steps)
    return steps


@pytest.fixture(scope="module")
def ba_means():
    return {m: float(np.mean(ba_efficiency_steps(m))) for m in (2, 3)}


@pytest.mark.slow
def test_denser_ba_graphs_resist_longer(ba_means):
    assert ba_means[3] > ba_means[2]
    assert ba_means[3] <= 30


@pytest.mark.slow
@pytest.mark.xfail(
    strict=True,
    reason="BA(100,2) degree attacks push eff_norm below 0.25 after about 11 steps on average, "
           "short of the 12-step lower bound; see DESIGN.md",
)
def test_sparse_ba_efficiency_step_range(ba_means):
    assert 12 <= ba_means[2] <= 30
