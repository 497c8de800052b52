"""Command-line entry point"""
import argparse
import re
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence
from pydantic import ValidationError
from src.core.config import settings
from src.core.exceptions import (
    EXIT_RUNTIME,
    EXIT_SUCCESS,
    NetDisruptException,
    UsageException,
)
from src.core.logging_config import set_level, setup_logging
from src.schemas.dataset import SHARED_NODE_COUNT, DatasetName
from src.schemas.experiment import METRICS, ExperimentConfig, NetworkSpec
from src.schemas.roles import Role
from src.schemas.strategy import STRATEGY_NAMES, Strategy
from src.services.dataset_loader import (
    load_network,
    montagna_descriptor,
    normalize_raw_edges,
    shared_nodes,
    validate,
)
from src.services.experiment_runner import run_experiment, summarize
from src.services.export_service import (
    read_results_csv,
    write_degree_ranking,
    write_degree_ranking_csv,
    write_mean_csv,
    write_summary_csv,
)
from src.services.generators import (
    assign_supposed_roles,
    barabasi_albert,
    degree_rank_profile,
    degree_ranking,
)
from src.services.graph import Network, network_statistics

logger = setup_logging("netdisrupt")

# Keys accepted in a `run --config` file
CONFIG_KEYS = {
    "network", "strategy", "replications", "seed", "out", "workers",
    "data_dir", "reference", "static", "allow_isolated",
}
_NETWORK_TOKEN = re.compile(r"ba:\s*\d+\s*,\s*\d+|[^,;\s]+", re.IGNORECASE)
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors raised instead of exiting with status 2"""

    def error(self, message: str) -> None:
        raise UsageException(f"{self.prog}: {message}")


def read_config_file(path: Path) -> Dict[str, str]:
    """key=value lines; blank lines and '#' comments are ignored"""
    if not path.exists():
        raise UsageException(f"Config file not found: {path}")
    values: Dict[str, str] = {}
    for line_no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise UsageException(f"{path}:{line_no}: expected key=value, got '{text}'")
        key, value = (part.strip() for part in text.split("=", 1))
        key = key.replace("-", "_").lower()
        if key not in CONFIG_KEYS:
            raise UsageException(f"{path}:{line_no}: unknown key '{key}'")
        values[key] = value
    return values


def _as_bool(key: str, value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in _TRUE:
        return True
    if lowered in _FALSE:
        return False
    raise UsageException(f"Config value for '{key}' must be a boolean, got '{value}'")


def _as_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise UsageException(f"Config value for '{key}' must be an integer, got '{value}'")


def _split_list(values: Sequence[str]) -> List[str]:
    return [item.strip() for value in values for item in value.split(",") if item.strip()]


def _parse_network(text: str) -> NetworkSpec:
    try:
        return NetworkSpec.parse(text)
    except ValueError:
        raise UsageException(f"Unknown network '{text}'; expected meetings, phone_calls or ba:<n>,<m>")


def _split_networks(values: Sequence[str]) -> List[str]:
    # 'ba:100,2' holds a comma of its own
    return [token for value in values for token in _NETWORK_TOKEN.findall(value)]


def build_config(args: argparse.Namespace) -> ExperimentConfig:
    """Merge flags over the optional config file over settings defaults"""
    file_values = read_config_file(Path(args.config)) if args.config else {}

    if args.network:
        network_texts = _split_networks(args.network)
    else:
        network_texts = _split_networks([file_values.get("network", "")])
    if args.strategy:
        strategy_texts = _split_list(args.strategy)
    else:
        strategy_texts = _split_list([file_values.get("strategy", "")])
    if not network_texts:
        raise UsageException("At least one --network is required")
    if not strategy_texts:
        raise UsageException("At least one --strategy is required")

    static = args.static or (_as_bool("static", file_values["static"]) if "static" in file_values else False)
    allow_isolated = args.allow_isolated or (
        _as_bool("allow_isolated", file_values["allow_isolated"])
        if "allow_isolated" in file_values else settings.ALLOW_ISOLATED_NODES
    )

    def pick_int(flag: Optional[int], key: str, default: int) -> int:
        if flag is not None:
            return flag
        if key in file_values:
            return _as_int(key, file_values[key])
        return default

    try:
        strategies = [Strategy.from_name(name, adaptive=not static) for name in strategy_texts]
    except ValueError as e:
        raise UsageException(str(e))

    try:
        return ExperimentConfig(
            networks=[_parse_network(text) for text in network_texts],
            strategies=strategies,
            replications=pick_int(args.replications, "replications", settings.DEFAULT_REPLICATIONS),
            base_seed=pick_int(args.seed, "seed", settings.DEFAULT_SEED),
            output_dir=Path(args.out or file_values.get("out") or settings.NETDISRUPT_OUTPUT_DIR),
            data_dir=Path(args.data_dir or file_values.get("data_dir") or settings.DATA_DIR),
            reference=DatasetName(args.reference or file_values.get("reference") or DatasetName.MEETINGS.value),
            allow_isolated=allow_isolated,
            workers=pick_int(args.workers, "workers", settings.MAX_WORKERS),
        )
    except ValidationError as e:
        raise UsageException(f"Invalid experiment configuration: {e.errors()[0]['msg']}")
    except ValueError as e:
        raise UsageException(str(e))


def cmd_run(args: argparse.Namespace) -> int:
    config = build_config(args)
    output = run_experiment(config)
    for path in output.files:
        print(path)
    return EXIT_SUCCESS


def _descriptors_for(target: str, data_dir: Optional[str]):
    """Dataset name, canonical edge file, or directory -> descriptors"""
    lowered = target.strip().lower()
    if lowered in DatasetName._value2member_map_:
        return [montagna_descriptor(lowered, data_dir)]

    path = Path(target)
    if path.is_dir():
        found = [montagna_descriptor(name, path) for name in DatasetName]
        present = [d for d in found if d.edge_path.exists()]
        if not present:
            raise UsageException(f"No montagna_<name>_edges.csv file in {path}")
        return present

    for name in DatasetName:
        if name.value in path.name:
            descriptor = montagna_descriptor(name, path.parent)
            attr_name = path.name.replace("_edges", "_attributes")
            return [descriptor.model_copy(update={"edge_path": path, "attr_path": path.parent / attr_name})]
    raise UsageException(f"Cannot tell which network '{target}' holds; name must contain meetings or phone_calls")


def cmd_validate(args: argparse.Namespace) -> int:
    descriptors = _descriptors_for(args.dataset, args.data_dir)
    loaded: Dict[DatasetName, Network] = {}
    status = EXIT_SUCCESS
    for descriptor in descriptors:
        g = load_network(descriptor, allow_isolated=args.allow_isolated or None)
        loaded[descriptor.name] = g
        report = validate(g, descriptor)
        print(f"{descriptor.name.value}: {'PASS' if report.passed else 'FAIL'}")
        print(f"  nodes {g.node_count}/{descriptor.expected_nodes}  edges {g.edge_count}/{descriptor.expected_edges}")
        for label, (found, expected) in report.role_counts.items():
            marker = "" if found == expected else "  <-- mismatch"
            print(f"  {label:<32} {found:>3} / {expected:<3}{marker}")
        if not report.passed:
            status = EXIT_RUNTIME

    if len(loaded) == 2:
        common = len(shared_nodes(loaded[DatasetName.MEETINGS], loaded[DatasetName.PHONE_CALLS]))
        ok = common == SHARED_NODE_COUNT
        print(f"shared nodes: {common} / {SHARED_NODE_COUNT}{'' if ok else '  <-- mismatch'}")
        if not ok:
            status = EXIT_RUNTIME
    return status


def cmd_summarize(args: argparse.Namespace) -> int:
    table = read_results_csv(args.input)
    if not len(table):
        raise UsageException(f"{args.input} holds no result rows")
    threshold = settings.DISMANTLING_THRESHOLD if args.threshold is None else args.threshold
    summary = summarize(table, threshold=threshold, metric=args.metric)

    print(f"{'network':<14} {'strategy':<13} {'reps':>4} {'steps':>5} {'dismantled':>10} {'mean':>8}")
    for row in summary.rows:
        step = "-" if row.dismantling_step is None else str(row.dismantling_step)
        mean = "-" if row.mean_dismantling_step is None else f"{row.mean_dismantling_step:.2f}"
        print(f"{row.network:<14} {row.strategy:<13} {row.replications:>4} {row.steps:>5} {step:>10} {mean:>8}")

    if args.out:
        out = Path(args.out)
        write_summary_csv(summary, out)
        write_mean_csv(summary, out.with_name(f"{out.stem}_mean{out.suffix or '.csv'}"))
        logger.info(f"Summary written to {out}")
    return EXIT_SUCCESS


def cmd_convert(args: argparse.Namespace) -> int:
    count = normalize_raw_edges(args.raw, args.out)
    print(f"{count} edges -> {args.out}")
    return EXIT_SUCCESS


def _single_network(args: argparse.Namespace) -> Network:
    spec = _parse_network(args.network)
    if not spec.is_synthetic:
        return load_network(montagna_descriptor(spec.dataset, args.data_dir))
    g = barabasi_albert(spec.ba.model_copy(update={"seed": args.seed}))
    if getattr(args, "reference", None):
        role = Role.from_label(args.role)
        reference = load_network(montagna_descriptor(args.reference, args.data_dir))
        g = assign_supposed_roles(g, degree_rank_profile(reference, role), role)
    return g


def cmd_rank(args: argparse.Namespace) -> int:
    rows = degree_ranking(_single_network(args))
    if args.out:
        write_degree_ranking_csv(rows, args.out)
        print(args.out)
    else:
        write_degree_ranking(rows, sys.stdout)
    return EXIT_SUCCESS


def cmd_stats(args: argparse.Namespace) -> int:
    stats = network_statistics(_single_network(args))
    for key, value in stats.model_dump().items():
        print(f"{key:<18} {value:.6g}" if isinstance(value, float) else f"{key:<18} {value}")
    return EXIT_SUCCESS


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="netdisrupt",
        description="Simulate sequential node removal on covert networks",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log every removal step")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="only log warnings and errors")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    run = sub.add_parser("run", help="run networks x strategies and write trajectory CSVs")
    run.add_argument("--network", action="append", help="meetings, phone_calls or ba:<n>,<m> (repeatable)")
    run.add_argument("--strategy", action="append", help=f"one of {', '.join(STRATEGY_NAMES)} (repeatable)")
    run.add_argument("--replications", type=int, help="random / BA replications")
    run.add_argument("--seed", type=int, help="base seed")
    run.add_argument("--out", help="output directory (default $NETDISRUPT_OUTPUT_DIR)")
    run.add_argument("--config", help="key=value config file; flags win")
    run.add_argument("--workers", type=int, help="process pool size")
    run.add_argument("--data-dir", dest="data_dir", help="directory of canonical dataset files")
    run.add_argument("--reference", choices=[d.value for d in DatasetName],
                     help="network whose role ranks label BA nodes")
    run.add_argument("--static", action="store_true", help="rank the intact graph once instead of every step")
    run.add_argument("--allow-isolated", dest="allow_isolated", action="store_true",
                     help="admit nodes that appear only in the attribute file")
    run.set_defaults(handler=cmd_run)

    val = sub.add_parser("validate", help="check a dataset against its published counts")
    val.add_argument("--dataset", required=True, help="dataset name, canonical edge file or directory")
    val.add_argument("--data-dir", dest="data_dir")
    val.add_argument("--allow-isolated", dest="allow_isolated", action="store_true")
    val.set_defaults(handler=cmd_validate)

    summ = sub.add_parser("summarize", help="mean trajectories and dismantling steps of a result CSV")
    summ.add_argument("--in", dest="input", required=True, help="result CSV written by run")
    summ.add_argument("--threshold", type=float, help="dismantling threshold (default 0.25)")
    summ.add_argument("--metric", choices=list(METRICS), default="lcc_norm")
    summ.add_argument("--out", help="summary CSV; mean trajectories go to <out>_mean.csv")
    summ.set_defaults(handler=cmd_summarize)

    conv = sub.add_parser("convert", help="normalize a raw edge list into the canonical CSV")
    conv.add_argument("--raw", required=True)
    conv.add_argument("--out", required=True)
    conv.set_defaults(handler=cmd_convert)

    for name, handler, text in (
        ("rank", cmd_rank, "rank nodes by degree with their role labels"),
        ("stats", cmd_stats, "print descriptive network statistics"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("--network", required=True, help="meetings, phone_calls or ba:<n>,<m>")
        p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="BA seed")
        p.add_argument("--data-dir", dest="data_dir")
        if name == "rank":
            p.add_argument("--reference", choices=[d.value for d in DatasetName],
                           help="label supposed role holders on a BA network")
            p.add_argument("--role", default="caporegime", help="role transferred with --reference")
            p.add_argument("--out", help="CSV file (default stdout)")
        p.set_defaults(handler=handler)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map failures onto exit codes"""
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            set_level("DEBUG")
        elif args.quiet:
            set_level("WARNING")
        return args.handler(args)
    except NetDisruptException as e:
        logger.error(e.detail)
        print(f"netdisrupt: error: {e.detail}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected failure: {e}", exc_info=True)
        print(f"netdisrupt: error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
