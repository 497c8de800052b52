import pytest
from src.schemas.experiment import RESULT_COLUMNS, ExperimentConfig, NetworkSpec, ResultRow, ResultTable
from src.schemas.strategy import STRATEGY_NAMES, Strategy
from src.services.disruption import run_disruption
from src.services.experiment_runner import MERGED_FILENAME, run_experiment, summarize
from src.services.export_service import (
    read_results_csv,
    trajectory_rows,
    write_degree_ranking_csv,
    write_results_csv,
)
from src.services.generators import degree_ranking


def make_config(dataset_dir, out, networks, strategies, **kwargs) -> ExperimentConfig:
    return ExperimentConfig(
        networks=[NetworkSpec.parse(n) for n in networks],
        strategies=[Strategy.from_name(s) for s in strategies],
        output_dir=out,
        data_dir=dataset_dir,
        **kwargs,
    )


def count_rows(path) -> int:
    return len(path.read_text(encoding="utf-8").splitlines()) - 1


def test_network_spec_parsing():
    assert NetworkSpec.parse("meetings").network_id == "meetings"
    assert NetworkSpec.parse("ba:100,2").network_id == "ba_100_2"
    assert NetworkSpec.parse("BA:100, 3").ba.m == 3
    with pytest.raises(ValueError):
        NetworkSpec.parse("ba:2,2")
    with pytest.raises(ValueError):
        NetworkSpec.parse("facebook")


def test_config_rejects_duplicates(dataset_dir, tmp_path):
    with pytest.raises(ValueError):
        make_config(dataset_dir, tmp_path, ["meetings", "meetings"], ["degree"])


def test_social_attack_has_one_row_per_node(dataset_dir, tmp_path):
    output = run_experiment(make_config(dataset_dir, tmp_path / "out", ["meetings"], ["degree"]))
    assert len(output.table) == 7
    assert [row.step for row in output.table.rows] == list(range(1, 8))
    assert count_rows(tmp_path / "out" / "meetings.csv") == 7


def test_role_attack_has_one_row_per_holder(dataset_dir, tmp_path):
    output = run_experiment(make_config(dataset_dir, tmp_path / "out", ["meetings"], ["caporegime"]))
    assert len(output.table) == 2


def test_random_ba_replications(dataset_dir, tmp_path):
    config = make_config(dataset_dir, tmp_path / "out", ["ba:20,2"], ["random"], replications=3)
    output = run_experiment(config)
    assert len(output.table) == 60
    assert sorted({row.replication for row in output.table.rows}) == [0, 1, 2]


def test_ba_role_attack_uses_reference_ranks(dataset_dir, tmp_path):
    config = make_config(dataset_dir, tmp_path / "out", ["ba:20,2"], ["caporegime"], replications=2)
    output = run_experiment(config)
    # Two caporegimes in the reference network, two replications
    assert len(output.table) == 4


def test_merged_csv_is_sum_of_network_files(dataset_dir, tmp_path):
    out = tmp_path / "out"
    config = make_config(
        dataset_dir, out, ["meetings", "phone_calls", "ba:15,2"], ["degree", "random"], replications=2
    )
    output = run_experiment(config)
    per_network = [p for p in output.files if p.name != MERGED_FILENAME]
    assert {p.name for p in per_network} == {"meetings.csv", "phone_calls.csv", "ba_15_2.csv"}
    assert count_rows(out / MERGED_FILENAME) == sum(count_rows(p) for p in per_network)


def test_output_is_byte_identical_across_runs(dataset_dir, tmp_path):
    networks = ["meetings", "ba:25,3"]
    a = make_config(dataset_dir, tmp_path / "a", networks, STRATEGY_NAMES[:4], replications=3)
    b = make_config(dataset_dir, tmp_path / "b", networks, STRATEGY_NAMES[:4], replications=3)
    run_experiment(a)
    run_experiment(b)
    assert (tmp_path / "a" / MERGED_FILENAME).read_bytes() == (tmp_path / "b" / MERGED_FILENAME).read_bytes()


def test_worker_count_does_not_change_output(dataset_dir, tmp_path):
    serial = make_config(dataset_dir, tmp_path / "s", ["meetings"], ["random", "betweenness"], replications=4)
    pooled = make_config(
        dataset_dir, tmp_path / "p", ["meetings"], ["random", "betweenness"], replications=4, workers=2
    )
    run_experiment(serial)
    run_experiment(pooled)
    assert (tmp_path / "s" / MERGED_FILENAME).read_bytes() == (tmp_path / "p" / MERGED_FILENAME).read_bytes()


def test_failed_run_writes_nothing(dataset_dir, tmp_path):
    out = tmp_path / "out"
    # The phone_calls stand-in has no soldier
    config = make_config(dataset_dir, out, ["meetings", "phone_calls"], ["soldier"])
    with pytest.raises(Exception):
        run_experiment(config)
    assert not out.exists() or not any(out.iterdir())


def test_strategy_names_survive_csv(dataset_dir, tmp_path):
    config = make_config(dataset_dir, tmp_path / "out", ["meetings"], STRATEGY_NAMES, replications=1)
    run_experiment(config)
    table = read_results_csv(tmp_path / "out" / MERGED_FILENAME)
    assert [n for n in dict.fromkeys(row.strategy for row in table.rows)] == STRATEGY_NAMES
    for name in STRATEGY_NAMES:
        assert Strategy.from_name(name).name == name


def test_results_csv_header(tmp_path, star4):
    path = tmp_path / "r.csv"
    write_results_csv(trajectory_rows(run_disruption(star4, Strategy.from_name("degree"), "star")), path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(RESULT_COLUMNS)
    assert lines[1] == "star,degree,0,1,0,4.0,0.2,0.0"


def test_summarize_star_degree_attack(star4):
    table = ResultTable(rows=trajectory_rows(run_disruption(star4, Strategy.from_name("degree"), "star")))
    summary = summarize(table)
    row = summary.rows[0]
    assert (row.network, row.strategy, row.steps) == ("star", "degree", 5)
    assert row.dismantling_step == 1
    assert row.mean_dismantling_step == 1.0
    assert summary.means[0].metric("lcc_norm") == [r.lcc_norm for r in table.rows]


def test_summarize_reports_absent_step():
    rows = [
        ResultRow(network="n", strategy="degree", replication=0, step=s, removed_node=s,
                  cc_norm=1.0, lcc_norm=0.9, eff_norm=0.8)
        for s in (1, 2)
    ]
    row = summarize(ResultTable(rows=rows), threshold=0.25).rows[0]
    assert row.dismantling_step is None
    assert row.mean_dismantling_step is None


def test_summarize_averages_replications():
    rows = []
    for replication, values in enumerate(([0.5, 0.1], [0.3, 0.0])):
        for step, lcc in enumerate(values, start=1):
            rows.append(ResultRow(network="n", strategy="random", replication=replication, step=step,
                                  removed_node=step, cc_norm=1.0, lcc_norm=lcc, eff_norm=lcc))
    row = summarize(ResultTable(rows=rows), threshold=0.35).rows[0]
    assert row.replications == 2
    # mean lcc: 0.4, 0.05
    assert row.dismantling_step == 2
    # per replication: step 2 and step 1
    assert row.mean_dismantling_step == 1.5


def test_summarize_other_metric(star4):
    table = ResultTable(rows=trajectory_rows(run_disruption(star4, Strategy.from_name("degree"), "star")))
    assert summarize(table, threshold=0.5, metric="eff_norm").rows[0].dismantling_step == 1
    with pytest.raises(ValueError):
        summarize(table, metric="density")


def test_degree_ranking_csv(tmp_path, labeled_network):
    path = tmp_path / "rank.csv"
    assert write_degree_ranking_csv(degree_ranking(labeled_network), path) == 8
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[:2] == ["rank,node,degree,role", "1,1,4,caporegime"]
    assert lines[-1] == "8,8,1,unclear"
