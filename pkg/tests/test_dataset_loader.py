import pytest
from src.core.exceptions import (
    ContradictoryLabelException,
    DatasetNotFoundException,
    DatasetParseException,
    IsolatedNodeException,
    UnknownRoleException,
)
from src.schemas.dataset import MEETINGS_ROLE_CENSUS, PHONE_CALLS_ROLE_CENSUS, DatasetName
from src.schemas.roles import CAPOREGIME, ENTREPRENEUR, UNCLEAR, Role
from src.services.dataset_loader import (
    export_network,
    load_network,
    montagna_descriptor,
    normalize_raw_edges,
    read_edges,
    role_census,
    shared_nodes,
    validate,
)
from src.services.graph import Network
from tests.conftest import write_dataset


def test_descriptor_expectations(tmp_path):
    meetings = montagna_descriptor("meetings", tmp_path)
    phone = montagna_descriptor(DatasetName.PHONE_CALLS, tmp_path)
    assert meetings.expected == (101, 256)
    assert phone.expected == (100, 124)
    assert meetings.edge_path == tmp_path / "montagna_meetings_edges.csv"


def test_role_census_covers_every_node():
    assert sum(MEETINGS_ROLE_CENSUS.values()) == 101
    assert sum(PHONE_CALLS_ROLE_CENSUS.values()) == 100
    assert MEETINGS_ROLE_CENSUS["caporegime"] == 12
    assert PHONE_CALLS_ROLE_CENSUS["associate/entrepreneur"] == 25


def test_load_network(dataset_dir):
    g = load_network(montagna_descriptor("meetings", dataset_dir))
    assert g.node_count == 7
    assert g.edge_count == 8
    assert g.weight(1, 2) == 3.0
    assert g.label(1) == CAPOREGIME
    assert g.label(3) == ENTREPRENEUR
    assert g.label(7) == UNCLEAR


def test_shared_nodes(dataset_dir):
    meetings = load_network(montagna_descriptor("meetings", dataset_dir))
    phone = load_network(montagna_descriptor("phone_calls", dataset_dir))
    assert shared_nodes(meetings, phone) == {1, 2}


def test_validate_against_own_counts(dataset_dir):
    g = load_network(montagna_descriptor("meetings", dataset_dir))
    descriptor = montagna_descriptor("meetings", dataset_dir).model_copy(update={
        "expected_nodes": 7,
        "expected_edges": 8,
        "expected_roles": {
            "caporegime": 2, "soldier": 2, "associate/entrepreneur": 1, "relative": 1, "unclear": 1,
        },
    })
    report = validate(g, descriptor)
    assert report.passed
    assert report.mismatches == []
    assert report.role_counts["caporegime"] == (2, 2)


def test_validate_reports_every_mismatch(dataset_dir):
    g = load_network(montagna_descriptor("meetings", dataset_dir))
    report = validate(g, montagna_descriptor("meetings", dataset_dir))
    assert not report.passed
    assert not report.node_count_ok and not report.edge_count_ok
    assert report.role_counts["caporegime"] == (2, 12)


def test_validate_empty_graph_lists_everything():
    descriptor = montagna_descriptor("meetings")
    report = validate(Network(), descriptor)
    assert len(report.mismatches) == 2 + len(MEETINGS_ROLE_CENSUS)


def test_missing_file(tmp_path):
    with pytest.raises(DatasetNotFoundException):
        load_network(montagna_descriptor("meetings", tmp_path))


def test_wrong_header(tmp_path):
    write_dataset(tmp_path, "meetings", "from,to\n1,2\n", "node_id,role,subtype\n")
    with pytest.raises(DatasetParseException) as info:
        load_network(montagna_descriptor("meetings", tmp_path))
    assert info.value.line == 1


def test_non_integer_node(tmp_path):
    write_dataset(tmp_path, "meetings", "source,target,weight\n1,x,1\n", "node_id,role,subtype\n")
    with pytest.raises(DatasetParseException) as info:
        load_network(montagna_descriptor("meetings", tmp_path))
    assert info.value.line == 2


def test_unknown_role(tmp_path):
    write_dataset(tmp_path, "meetings", "source,target,weight\n1,2,1\n", "node_id,role,subtype\n1,consigliere,\n")
    with pytest.raises(UnknownRoleException):
        load_network(montagna_descriptor("meetings", tmp_path))


def test_associate_needs_subtype(tmp_path):
    write_dataset(tmp_path, "meetings", "source,target,weight\n1,2,1\n", "node_id,role,subtype\n1,associate,\n")
    with pytest.raises(DatasetParseException) as info:
        load_network(montagna_descriptor("meetings", tmp_path))
    assert not isinstance(info.value, UnknownRoleException)


def test_contradictory_labels(tmp_path):
    write_dataset(
        tmp_path, "meetings",
        "source,target,weight\n1,2,1\n",
        "node_id,role,subtype\n1,soldier,\n1,caporegime,\n",
    )
    with pytest.raises(ContradictoryLabelException):
        load_network(montagna_descriptor("meetings", tmp_path))


def test_repeated_label_is_accepted(tmp_path):
    write_dataset(
        tmp_path, "meetings",
        "source,target,weight\n1,2,1\n",
        "node_id,role,subtype\n1,Soldier,\n1,soldier,\n",
    )
    g = load_network(montagna_descriptor("meetings", tmp_path))
    assert g.label(1) == Role.from_label("soldier")


def test_attribute_only_nodes(tmp_path):
    write_dataset(
        tmp_path, "meetings",
        "source,target,weight\n1,2,1\n",
        "node_id,role,subtype\n1,soldier,\n99,fugitive,\n",
    )
    descriptor = montagna_descriptor("meetings", tmp_path)
    with pytest.raises(IsolatedNodeException):
        load_network(descriptor)
    g = load_network(descriptor, allow_isolated=True)
    assert 99 in g and g.degree(99) == 0


def test_self_loop_dropped(tmp_path):
    path = tmp_path / "edges.csv"
    path.write_text("source,target,weight\n1,1,1\n1,2,1\n", encoding="utf-8")
    assert read_edges(path) == [(1, 2, 1.0)]


def test_export_then_load_is_identity(dataset_dir, tmp_path):
    g = load_network(montagna_descriptor("meetings", dataset_dir))
    out = tmp_path / "export"
    export_network(
        g, out / "montagna_meetings_edges.csv", out / "montagna_meetings_attributes.csv"
    )
    assert load_network(montagna_descriptor("meetings", out)) == g
    assert role_census(g)["associate/entrepreneur"] == 1


def test_normalize_raw_edges(tmp_path):
    raw = tmp_path / "raw.txt"
    raw.write_text("a b\n1 2\n2 1\n3;4;2.5\n5,5\n", encoding="utf-8")
    out = tmp_path / "edges.csv"
    assert normalize_raw_edges(raw, out) == 2
    assert out.read_text(encoding="utf-8") == "source,target,weight\n1,2,2\n3,4,2.5\n"


def test_export_with_isolated_nodes_needs_admission(tmp_path):
    g = Network.from_edges([(1, 2, 2.0)], nodes=[1, 2, 3], labels={1: CAPOREGIME, 2: UNCLEAR, 3: ENTREPRENEUR})
    export_network(g, tmp_path / "montagna_meetings_edges.csv", tmp_path / "montagna_meetings_attributes.csv")
    descriptor = montagna_descriptor("meetings", tmp_path)
    with pytest.raises(IsolatedNodeException):
        load_network(descriptor)
    assert load_network(descriptor, allow_isolated=True) == g


def test_loading_twice_gives_equal_networks(dataset_dir):
    descriptor = montagna_descriptor("phone_calls", dataset_dir)
    assert load_network(descriptor) == load_network(descriptor)
