"""Command-line front end.

Exit codes: 0 success, 1 empty query result, 2 usage or model error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .analysis import TrendFilter, core, envelope, match_indices, path_query
from .correlation import matrix_to_model, read_correlation_csv, removal_heuristic
from .errors import (FilterError, FilterMatchesNothing, MatrixError, ModelError,
                     ModelMismatch, OracleCapExceeded, RemovalExhausted)
from .model import parse_model, serialize_model
from .render import (dumps, graph_document, graph_dot, path_table, scenario_csv,
                     scenario_document, scenario_table)
from .solver import solve, solve_bruteforce
from .transitions import build_graph


EXIT_OK, EXIT_EMPTY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _error(msg) -> None:
    print(f"trendreason: {msg}", file=sys.stderr)


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _load(path: str, dp_weak: bool = False):
    model = parse_model(_read(path), name=Path(path).stem)
    return model, solve(model, dp_weak=dp_weak)


def _emit_set(scenarios, fmt: str, name: str = "", numbers=None) -> str:
    if fmt == "csv":
        return scenario_csv(scenarios)
    if fmt == "json":
        return dumps(scenario_document(scenarios, name))
    return scenario_table(scenarios, numbers)


def cmd_solve(args) -> int:
    model, scenarios = _load(args.model, args.dp_weak)
    if args.check:
        oracle = solve_bruteforce(model, dp_weak=args.dp_weak)
        if oracle != scenarios:
            _error("solver and brute-force oracle disagree")
            return EXIT_USAGE
    sys.stdout.write(_emit_set(scenarios, args.format, model.name))
    return EXIT_OK


def cmd_graph(args) -> int:
    model, scenarios = _load(args.model, args.dp_weak)
    graph = build_graph(scenarios, positive_only=args.positive_only)
    if args.format == "dot":
        sys.stdout.write(graph_dot(graph, model.name or "H"))
    else:
        sys.stdout.write(dumps(graph_document(graph, model.name)))
    return EXIT_OK


def cmd_query(args) -> int:
    model, scenarios = _load(args.model, args.dp_weak)
    if args.where and (args.path_from or args.path_to):
        raise UsageError("--where cannot be combined with --path-from/--path-to")
    if args.where:
        f = TrendFilter.parse(args.where, model.variables)
        hits = match_indices(scenarios, f)
        if not hits:
            print(f"no scenario satisfies {args.where}", file=sys.stderr)
            return EXIT_EMPTY
        sys.stdout.write(_emit_set(scenarios.subset(hits), args.format, model.name,
                                   [i + 1 for i in hits]))
        return EXIT_OK
    if not (args.path_from and args.path_to):
        raise UsageError("give --where, or both --path-from and --path-to")
    source = TrendFilter.parse(args.path_from, model.variables)
    target = TrendFilter.parse(args.path_to, model.variables)
    graph = build_graph(scenarios)
    try:
        result = path_query(graph, source, target)
    except FilterMatchesNothing as exc:
        print(f"no matching scenario: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    if not result:
        print("no path", file=sys.stderr)
        return EXIT_EMPTY
    numbers = [i + 1 for i in result.nodes]
    if args.format == "json":
        doc = scenario_document(scenarios, model.name)
        doc["scenarios"] = [doc["scenarios"][i] for i in result.nodes]
        doc["path"] = numbers
        sys.stdout.write(dumps(doc))
    elif args.format == "csv":
        sys.stdout.write(",".join(["No."] + list(model.variables)) + "\n")
        for k, i in zip(numbers, result.nodes):
            sys.stdout.write(",".join([str(k)] + [str(t) for t in scenarios[i]]) + "\n")
    else:
        sys.stdout.write(path_table(scenarios, result.nodes))
    return EXIT_OK


def cmd_reconcile(args) -> int:
    if len(args.models) < 2:
        raise UsageError("reconcile needs at least two model files")
    sets = [_load(p, args.dp_weak)[1] for p in args.models]
    result = core(sets) if args.core else envelope(sets)
    sys.stdout.write(_emit_set(result, args.format, "core" if args.core else "envelope"))
    return EXIT_OK


def cmd_from_corr(args) -> int:
    matrix = read_correlation_csv(_read(args.csv))
    name = Path(args.csv).stem
    if args.repair:
        trace = removal_heuristic(matrix, args.threshold, name, args.dp_weak, args.partial)
        text = serialize_model(trace.model)
        trace_json = dumps(trace.to_json())
        if args.trace:
            _write(args.trace, trace_json)
        else:
            sys.stderr.write(trace_json)
    else:
        text = serialize_model(matrix_to_model(matrix, args.threshold, name))
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trendreason", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def model_cmd(name, help_, formats, default):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("model")
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--dp-weak", action="store_true",
                        help="DP/IP constrain first derivatives only")
        return sp

    sp = model_cmd("solve", "enumerate all scenarios", ("table", "csv", "json"), "table")
    sp.add_argument("--check", action="store_true",
                    help="cross-check against the brute-force oracle")
    sp.set_defaults(func=cmd_solve)

    sp = model_cmd("graph", "build the transition graph", ("dot", "json"), "dot")
    sp.add_argument("--positive-only", action=argparse.BooleanOptionalAction, default=True)
    sp.set_defaults(func=cmd_graph)

    sp = model_cmd("query", "filter scenarios or find a path", ("table", "csv", "json"), "table")
    sp.add_argument("--where", help='conditions such as "GEN.dx=+,PRI.ddx=-"')
    sp.add_argument("--path-from", help='start filter, or "steady"')
    sp.add_argument("--path-to", help='target filter, or "steady"')
    sp.set_defaults(func=cmd_query)

    sp = sub.add_parser("reconcile", help="core or envelope of several models")
    sp.add_argument("models", nargs="+")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--core", action="store_true")
    mode.add_argument("--envelope", action="store_true")
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sp.add_argument("--dp-weak", action="store_true")
    sp.set_defaults(func=cmd_reconcile)

    sp = sub.add_parser("from-corr", help="generate a model from a correlation CSV")
    sp.add_argument("csv")
    sp.add_argument("--threshold", type=float, default=0.0)
    sp.add_argument("--repair", action="store_true", help="run the removal heuristic")
    sp.add_argument("--partial", action="store_true",
                    help="with --repair, keep removing while any variable is frozen")
    sp.add_argument("--trace", help="write the removal trace JSON here (default: stderr)")
    sp.add_argument("-o", "--output", help="write the model here (default: stdout)")
    sp.add_argument("--dp-weak", action="store_true")
    sp.set_defaults(func=cmd_from_corr)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _error(exc)
        return EXIT_IO
    except (ModelError, ModelMismatch, FilterError, MatrixError, UsageError,
            OracleCapExceeded, RemovalExhausted) as exc:
        _error(exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
