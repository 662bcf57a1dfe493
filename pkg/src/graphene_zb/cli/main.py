"""graphene-zb command line.

Exit codes: 0 success, 2 configuration or argument errors, 3 numerical failure.
"""
import argparse
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, Optional, Sequence, TextIO
import numpy as np
from graphene_zb.engine import Method, MethodList, PacketEngine
from graphene_zb.engine.packet import threads_from_env
from graphene_zb.errors import (
    BaselineUndefined,
    DegenerateSpinor,
    GapRequired,
    GrapheneZBError,
    InvalidConfig,
)
from graphene_zb.types import (
    CriticalKind,
    Observable,
    ObservableList,
    QuadSettings,
    RunConfig,
    UncertaintyPair,
    UncertaintyPairList,
)
from .config import load_config, run_from_values
from .csvio import write_csv
from .presets import PresetList, preset
from .tables import (
    TABLE_AS,
    TABLE_KINDS,
    TABLE_NS,
    compute_table,
    n_label,
    parse_n,
    render_table,
    table_config,
    table_for,
    write_table_csv,
)

logger = logging.getLogger("graphene_zb")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_CONFIG_ERRORS = (InvalidConfig, GapRequired, BaselineUndefined, DegenerateSpinor)

_CRITICAL_CHOICES = {kind.value.replace("_", ""): kind for kind in CriticalKind}
# underscore spellings of the starred kinds
_CRITICAL_CHOICES.update({kind.value: kind for kind in CriticalKind})


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-o", "--output", help="write CSV here instead of stdout")
    parser.add_argument("--threads", type=int, help="worker threads, 0 = one per CPU (default: $ZB_THREADS or 1)")
    parser.add_argument("--strict", action="store_true", help="treat non-convergence as an error")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="stderr log level")

def _add_run(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("config", nargs="?", help="key = value run configuration")
    parser.add_argument("--preset", choices=PresetList, help="start from a published panel")
    parser.add_argument("--t0", type=float, help="first time (fs)")
    parser.add_argument("--t1", type=float, help="last time (fs)")
    parser.add_argument("--steps", type=int, help="number of grid points")
    parser.add_argument("--rel-tol", type=float, help="quadrature relative tolerance")

def _add_table_point(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", type=float, default=TABLE_AS[0], help="spinor amplitude a")
    parser.add_argument("--n", type=parse_n, default=TABLE_NS[0], help="offset divisor n (or 'inf')")

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphene-zb",
                                     description="Trembling motion and uncertainty of wave packets in gapped graphene")
    sub = parser.add_subparsers(dest="command", required=True)

    observe = sub.add_parser("observe", help="one observable on a time grid")
    _add_run(observe)
    observe.add_argument("--observable", type=str.upper, choices=[o.value for o in ObservableList], default="X")
    observe.add_argument("--method", choices=[m.value for m in MethodList], help="evaluation path")
    _add_common(observe)

    uncertainty = sub.add_parser("uncertainty", help="uncertainty products on a time grid")
    _add_run(uncertainty)
    uncertainty.add_argument("--pair", type=str.upper, choices=[p.value for p in UncertaintyPairList], default="XP")
    _add_common(uncertainty)

    weights = sub.add_parser("weights", help="positive/negative energy content")
    _add_run(weights)
    _add_common(weights)

    critical = sub.add_parser("critical", help="critical gap values of one table column")
    critical.add_argument("--which", choices=["all", *_CRITICAL_CHOICES], default="all")
    _add_table_point(critical)
    _add_common(critical)

    tables = sub.add_parser("tables", help="full critical-value tables")
    tables.add_argument("--which", choices=sorted(TABLE_KINDS), default="I")
    tables.add_argument("--format", choices=["csv", "text"], default="csv")
    _add_common(tables)

    sweep = sub.add_parser("sweep", help="gamma or delta against inv_lambda_c")
    sweep.add_argument("--which", choices=["gamma", "delta"], default="gamma")
    _add_table_point(sweep)
    sweep.add_argument("--x0", type=float, default=0.01, help="first inv_lambda_c (1/nm)")
    sweep.add_argument("--x1", type=float, default=10.0, help="last inv_lambda_c (1/nm)")
    sweep.add_argument("--steps", type=int, default=100, help="number of points")
    _add_common(sweep)

    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    """Preset, then config file, then explicit flags."""
    values = preset(args.preset) if args.preset else {}
    if args.config:
        values.update(load_config(args.config))
    overrides = {
        "t0_fs": args.t0,
        "t1_fs": args.t1,
        "steps": args.steps,
        "rel_tol": args.rel_tol,
        "method": getattr(args, "method", None),
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    if not values:
        raise InvalidConfig("give a config file or --preset")
    return run_from_values(values, output=args.output)

def make_engine(args: argparse.Namespace, settings: QuadSettings = QuadSettings()) -> PacketEngine:
    threads = args.threads if args.threads is not None else threads_from_env()
    return PacketEngine(settings=settings, threads=threads, emit_events=True, strict=args.strict)

@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", newline="", encoding="utf-8") as f:
        yield f

def _flush(engine: PacketEngine) -> None:
    for event in engine.flush_events():
        logger.info("%s: %s", event.event_type.value, event)


def cmd_observe(args: argparse.Namespace) -> int:
    run = run_config(args)
    with make_engine(args, run.settings) as engine:
        results = engine.expectation_series(Observable(args.observable), run.times(), run.packet, Method(run.method))
        _flush(engine)
    header = ["t_fs", "value", "spreading_part", "zb_part", "est_error", "method"]
    with open_output(run.output) as out:
        write_csv(out, header, ([r.to_dict()[key] for key in header] for r in results))
    return EXIT_OK

def cmd_uncertainty(args: argparse.Namespace) -> int:
    run = run_config(args)
    with make_engine(args, run.settings) as engine:
        points = engine.uncertainty_series(UncertaintyPair(args.pair), run.times(), run.packet)
        _flush(engine)
    header = ["t_fs", "product", "delta_pos", "delta_conj", "free_baseline", "est_error"]
    with open_output(run.output) as out:
        write_csv(out, header, ([p.to_dict()[key] for key in header] for p in points))
    return EXIT_OK

def cmd_weights(args: argparse.Namespace) -> int:
    run = run_config(args)
    with make_engine(args, run.settings) as engine:
        weights = engine.packet_split_weights(run.packet)
        _flush(engine)
    header = ["p_plus", "p_minus", "delta_p"]
    with open_output(run.output) as out:
        write_csv(out, header, [[weights.to_dict()[key] for key in header]])
    return EXIT_OK

def cmd_critical(args: argparse.Namespace) -> int:
    kinds = list(CriticalKind) if args.which == "all" else [_CRITICAL_CHOICES[args.which]]
    rows = []
    with make_engine(args) as engine:
        for kind in kinds:
            cfg = table_config(table_for(kind), args.a, args.n)
            root = engine.critical_root(kind, cfg)
            rows.append([kind.value, args.a, n_label(args.n), root.value, root.iterations, root.residual])
        _flush(engine)
    with open_output(args.output) as out:
        write_csv(out, ["kind", "a", "n", "value", "iterations", "residual"], rows)
    return EXIT_OK

def cmd_tables(args: argparse.Namespace) -> int:
    with make_engine(args) as engine:
        rows = compute_table(engine, args.which)
        _flush(engine)
    with open_output(args.output) as out:
        if args.format == "text":
            out.write(render_table(rows))
        else:
            write_table_csv(out, rows)
    return EXIT_OK

def cmd_sweep(args: argparse.Namespace) -> int:
    if not (0.0 < args.x0 < args.x1) or args.steps < 2:
        raise InvalidConfig("sweep needs 0 < x0 < x1 and at least 2 steps")
    xs = [float(x) for x in np.linspace(args.x0, args.x1, args.steps)]
    which = "I" if args.which == "gamma" else "II"
    cfg = table_config(which, args.a, args.n)
    with make_engine(args) as engine:
        sweep = engine.gamma_sweep if args.which == "gamma" else engine.delta_sweep
        values = sweep(xs, cfg)
        _flush(engine)
    with open_output(args.output) as out:
        write_csv(out, ["x_inv_nm", "value"], zip(xs, values))
    return EXIT_OK

COMMANDS = {
    "observe":     cmd_observe,
    "uncertainty": cmd_uncertainty,
    "weights":     cmd_weights,
    "critical":    cmd_critical,
    "tables":      cmd_tables,
    "sweep":       cmd_sweep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format=LOG_FORMAT, stream=sys.stderr, force=True)
    try:
        return COMMANDS[args.command](args)
    except _CONFIG_ERRORS as e:
        logger.error("%s", e)
        return EXIT_CONFIG
    except GrapheneZBError as e:
        logger.error("numerical failure: %s", e)
        return EXIT_NUMERICAL

if __name__ == "__main__":
    sys.exit(main())
