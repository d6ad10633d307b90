"""Command-line interface.

Subcommands:

* ``validate`` -- check an input file, print the validation report.
* ``profile``  -- compute profiles and write SVG, HTML or curve JSON.
* ``schema``   -- print the JSON Schema for the input format.

Exit codes: 0 success, 1 validation failure (or an over-filtered plot),
2 usage error (bad flags, unknown names, contradictory settings).
``-`` as input or output means the standard streams. Diagnostics go to
stderr; the data product alone goes to the output.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .engine import AnalysisConfig, ConfigError, analyze, profile_set_to_json
from .model import Dataset, parse_dataset
from .render import RenderError, render_html, render_svg
from .schema import emit_schema

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perfprof",
        description="Compute, filter and export performance profiles from benchmark results.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    validate = sub.add_parser("validate", help="validate an input file against the expected format")
    validate.add_argument("-i", "--input", required=True, help="input JSON file ('-' for stdin)")

    schema = sub.add_parser("schema", help="print the JSON Schema for the input format")
    schema.add_argument("-o", "--output", default="-", help="output path ('-' for stdout)")

    profile = sub.add_parser("profile", help="compute profiles and export them")
    profile.add_argument("-i", "--input", required=True, help="input JSON file ('-' for stdin)")
    profile.add_argument("-o", "--output", default="-", help="output path ('-' for stdout)")
    profile.add_argument(
        "--format", choices=("svg", "html", "json"), default="svg",
        help="output format (default: svg)",
    )
    profile.add_argument(
        "--baseline", action="append", default=None, metavar="NAME",
        help="solver to use as a baseline; repeatable (default: all solvers)",
    )
    profile.add_argument(
        "--drop-label", action="append", default=None, metavar="NAME",
        help="deactivate a label, filtering out instances that carry it; repeatable",
    )
    profile.add_argument(
        "--scale", action="append", default=None, metavar="SOLVER/COMPONENT=FACTOR",
        help="what-if scale factor for one component; repeatable",
    )
    profile.add_argument("--tau-min", type=float, default=0.0, help="lower bound of the focus region (default: 0)")
    profile.add_argument("--tau-max", type=float, default=2.0, help="upper bound of the focus region (default: 2)")
    profile.add_argument(
        "--x-scale", choices=("linear", "logarithmic"), default="linear",
        help="x axis scale (default: linear)",
    )
    profile.add_argument(
        "--min-baseline", type=float, default=0.0, metavar="VALUE",
        help="drop instances where any baseline total is below this (default: off)",
    )
    profile.add_argument(
        "--unsolved", type=float, default=None, metavar="VALUE",
        help="totals above this count as unsolved (default: off)",
    )
    return parser


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_output(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _usage_error(message: str) -> int:
    print(f"perfprof: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def parse_scale_flag(dataset: Dataset, flag: str) -> tuple[str, str, float]:
    """Resolve a SOLVER/COMPONENT=FACTOR flag against the dataset.

    Names are matched literally against the dataset, so solver or component
    names containing '/' stay unambiguous unless two pairs collide.
    """
    head, sep, factor_text = flag.rpartition("=")
    if not sep or not head:
        raise ValueError(f"--scale {flag!r}: expected SOLVER/COMPONENT=FACTOR")
    try:
        factor = float(factor_text)
    except ValueError:
        raise ValueError(f"--scale {flag!r}: factor {factor_text!r} is not a number") from None
    matches = [
        (solver, component)
        for solver, component in dataset.component_pairs()
        if f"{solver}/{component}" == head
    ]
    if not matches:
        raise ValueError(f"--scale {flag!r}: no component named {head!r} in the input")
    if len(matches) > 1:
        raise ValueError(f"--scale {flag!r}: ambiguous name {head!r}")
    solver, component = matches[0]
    return solver, component, factor


def config_mapping_from_args(dataset: Dataset, args: argparse.Namespace) -> dict:
    """Translate profile flags into the JSON-style config mapping.

    The same mapping format the HTTP service accepts, so CLI and service
    resolve configurations through one code path.
    """
    mapping: dict = {}
    if args.baseline:
        mapping["baselines"] = list(args.baseline)
    if args.drop_label:
        dropped = set(args.drop_label)
        unknown = sorted(dropped - set(dataset.labels))
        if unknown:
            raise ValueError(f"--drop-label: unknown label {unknown[0]!r}")
        mapping["active_labels"] = [name for name in dataset.labels if name not in dropped]
    if args.scale:
        factors: dict[str, dict[str, float]] = {}
        for flag in args.scale:
            solver, component, factor = parse_scale_flag(dataset, flag)
            factors.setdefault(solver, {})[component] = factor
        mapping["scale_factors"] = factors
    mapping["tau_min"] = args.tau_min
    mapping["tau_max"] = args.tau_max
    mapping["x_scale"] = args.x_scale
    mapping["min_baseline_threshold"] = args.min_baseline
    mapping["unsolved_threshold"] = args.unsolved
    return mapping


def _run_validate(args: argparse.Namespace) -> int:
    try:
        raw = _read_input(args.input)
    except OSError as exc:
        return _usage_error(f"cannot read {args.input!r}: {exc.strerror or exc}")
    result = parse_dataset(raw)
    if isinstance(result, Dataset):
        print(
            f"ok: {len(result.solver_names)} solvers, {result.instance_count} instances, "
            f"{len(result.labels)} labels"
        )
        return EXIT_OK
    for path, message in result.errors:
        print(f"error {path or '<document>'}: {message}")
    for path, message in result.warnings:
        print(f"warning {path}: {message}")
    return EXIT_INVALID


def _run_schema(args: argparse.Namespace) -> int:
    try:
        _write_output(args.output, emit_schema())
    except OSError as exc:
        return _usage_error(f"cannot write {args.output!r}: {exc.strerror or exc}")
    return EXIT_OK


def _run_profile(args: argparse.Namespace) -> int:
    try:
        raw = _read_input(args.input)
    except OSError as exc:
        return _usage_error(f"cannot read {args.input!r}: {exc.strerror or exc}")

    dataset = parse_dataset(raw)
    if not isinstance(dataset, Dataset):
        for path, message in dataset.errors:
            print(f"perfprof: invalid input at {path or '<document>'}: {message}", file=sys.stderr)
        return EXIT_INVALID

    try:
        mapping = config_mapping_from_args(dataset, args)
        config = AnalysisConfig.from_mapping(dataset, mapping)
    except ConfigError as exc:
        for path, message in exc.errors:
            print(f"perfprof: error: {path}: {message}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        return _usage_error(str(exc))

    profiles = analyze(dataset, config)
    try:
        if args.format == "json":
            payload = profile_set_to_json(profiles)
        elif args.format == "svg":
            payload = render_svg(profiles, config, dataset.metric_name)
        else:
            payload = render_html(render_svg(profiles, config, dataset.metric_name))
    except RenderError as exc:
        print(f"perfprof: error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    try:
        _write_output(args.output, payload)
    except OSError as exc:
        return _usage_error(f"cannot write {args.output!r}: {exc.strerror or exc}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.subcommand == "validate":
        return _run_validate(args)
    if args.subcommand == "schema":
        return _run_schema(args)
    return _run_profile(args)


if __name__ == "__main__":
    sys.exit(main())
