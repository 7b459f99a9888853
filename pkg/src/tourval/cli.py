"""Command-line interface.

Subcommands::

    tourval validate --config cfg.json          schema check, writes nothing
    tourval weights  --config cfg.json          pairwise matrix -> weight report
    tourval ftv      --config cfg.json          valuation only (results.csv/.json)
    tourval run      --config cfg.json          full pipeline incl. map.geojson
    tourval tour     --config cfg.json          spatial stage from prior results

Exit codes: 0 success, 2 input/schema error, 3 configuration error,
4 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import pipeline
from .errors import TourvalError
from .pipeline import RunConfig, format_number, load_config

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tourval",
        description="Fuzzy experiential valuation of tourist attractions: "
                    "rescaling, weighting, ranking, and hotspot/tour analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *, tweaks: bool = False,
            out: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, type=Path,
                       help="JSON run configuration")
        if tweaks:
            p.add_argument("--allow-inconsistent", action="store_true",
                           help="proceed although the pairwise matrix has CR > 0.1")
            p.add_argument("--clamp", action="store_true",
                           help="saturate out-of-range scores instead of failing")
        if out:
            p.add_argument("--out", type=Path, default=None,
                           help="output directory (overrides the config)")
        return p

    add("validate", "check all input files and report what they contain")
    add("weights", "derive factor weights from the pairwise matrix and print "
                   "the report as JSON")
    add("ftv", "value and rank the attractions (results.csv, results.json)",
        tweaks=True, out=True)
    add("run", "full pipeline: valuation plus density, hotspots and tour "
               "(adds map.geojson)", tweaks=True, out=True)
    add("tour", "recompute the spatial stage from an existing results.csv",
        out=True)
    return parser


def _effective_config(args: argparse.Namespace) -> RunConfig:
    config = load_config(args.config)
    if getattr(args, "clamp", False):
        config = replace(config, range_policy="clamp")
    if getattr(args, "out", None) is not None:
        config = replace(config, out_dir=Path(args.out).resolve())
    return config


def _cmd_validate(args: argparse.Namespace) -> int:
    config = _effective_config(args)
    ingested = pipeline.ingest(config)
    print(f"factors: {len(ingested.catalogue.factors)} (weights from "
          f"{ingested.weight_source})")
    print(f"attractions: {len(ingested.names)}")
    print(f"evaluations: {len(ingested.evaluations)} complete")
    if ingested.weight_report is not None and ingested.weight_report.inconsistent:
        print(f"warning: pairwise CR = {ingested.weight_report.consistency_ratio:.4f} "
              "> 0.1", file=sys.stderr)
    print("OK")
    return 0


def _cmd_weights(args: argparse.Namespace) -> int:
    from .ahp import derive_weights, validate_pairwise
    from .errors import ConfigError, InputError

    config = _effective_config(args)
    if config.pairwise is None:
        raise ConfigError("config has no 'pairwise' entry")
    factors, _ = pipeline.load_factor_table(config.factors)
    ids, matrix = pipeline.load_pairwise(config.pairwise, [f.id for f in factors])
    try:
        report = derive_weights(validate_pairwise(matrix))
    except ValueError as e:
        raise InputError(f"{config.pairwise}: {e}") from e
    document = {
        "factors": ids,
        "weights": {i: float(format_number(w)) for i, w in zip(ids, report.weights)},
        "lambda_max": float(format_number(report.lambda_max)),
        "consistency_index": float(format_number(report.consistency_index)),
        "consistency_ratio": float(format_number(report.consistency_ratio)),
        "inconsistent": report.inconsistent,
    }
    print(json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False))
    return 0


def _summarize(output: pipeline.PipelineOutput, threshold: float) -> None:
    total = len(output.results)
    print(f"valued {total} attractions; {len(output.retained)} above "
          f"{format_number(threshold)}: {', '.join(output.retained) or '(none)'}")
    if output.hotspots:
        print(f"hotspots: {', '.join(h.label for h in output.hotspots)}")
    if output.tour is not None:
        dmin, davg, dmax = output.tour.duration_hours
        print(f"tour: {' -> '.join(h.label for h in output.tour.stops)}, "
              f"{format_number(output.tour.length_km)} km, "
              f"{format_number(dmin)}-{format_number(dmax)} h "
              f"(avg {format_number(davg)})")
    for path in output.written:
        print(f"wrote {path}")


def _cmd_ftv(args: argparse.Namespace) -> int:
    config = _effective_config(args)
    output = pipeline.run_valuation(config, allow_inconsistent=args.allow_inconsistent)
    _summarize(output, config.filter_threshold)
    return 0


def _cmd_run(args: argparse.Namespace) -> int:
    config = _effective_config(args)
    output = pipeline.run_pipeline(config, allow_inconsistent=args.allow_inconsistent)
    _summarize(output, config.filter_threshold)
    return 0


def _cmd_tour(args: argparse.Namespace) -> int:
    config = _effective_config(args)
    output = pipeline.run_tour(config)
    _summarize(output, config.filter_threshold)
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "weights": _cmd_weights,
    "ftv": _cmd_ftv,
    "run": _cmd_run,
    "tour": _cmd_tour,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except TourvalError as e:
        print(f"error: {e}", file=sys.stderr)
        return getattr(e, "exit_code", 2)


if __name__ == "__main__":
    sys.exit(main())
