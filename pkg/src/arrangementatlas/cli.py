from __future__ import annotations

import argparse
from dataclasses import replace
import logging
from pathlib import Path
import sys
from typing import Optional, Sequence

from arrangementatlas.analysis.bench import bench, write_bench
from arrangementatlas.analysis.io import load_arrangement
from arrangementatlas.analysis.pipeline import AnalysisOptions, analyze
from arrangementatlas.analysis.report import render_text, to_json
from arrangementatlas.analysis.survey import survey, write_survey
from arrangementatlas.catalog.registry import describe, names
from arrangementatlas.config.loader import load_config
from arrangementatlas.errors import ArrangementError, ContractViolation, ReportInvariantError, ResourceCapExceeded
from arrangementatlas.utils.logging import configure_logging


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arrangementatlas",
        description="Exact sign-vector and algebra invariants of central real hyperplane arrangements.",
        epilog="Catalog entries: " + ", ".join(names()),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="Config JSON path (overrides ARRANGEMENTATLAS_CONFIG_PATH).")
    common.add_argument("--log-level", default=None, help="Overrides logging.level for this run.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", parents=[common], help="Analyze a file or catalog entry.")
    p_analyze.add_argument("input", help="Path to a text/JSON arrangement, or a catalog spec such as d4 or er:-1.")
    p_analyze.add_argument("--json", action="store_true", help="Emit the JSON report (schema 1).")
    p_analyze.add_argument("--field", default=None, help="q or fp:<prime>.")
    p_analyze.add_argument("--sigma-chain", action="store_true", default=None, help="Also compute sigma_3..sigma_{r-1}.")
    p_analyze.add_argument("--export-cas", type=Path, default=None, help="Write the I_2 / I_r presentation here.")
    p_analyze.add_argument("--cas-format", choices=["plain", "m2"], default="plain")
    p_analyze.add_argument("--node-cap", type=_positive_int, default=None)
    p_analyze.add_argument("--chamber-cap", type=_positive_int, default=None)
    p_analyze.add_argument("--chamber-method", choices=["restriction", "lp"], default=None)
    p_analyze.add_argument("--no-cordovil", action="store_true", help="Skip the Cordovil stage.")
    p_analyze.add_argument("--out", type=Path, default=None, help="Write the report to a file instead of stdout.")

    p_bench = sub.add_parser("bench", parents=[common], help="Time chambers, sigma_2 and the VG verdict on a catalog entry.")
    p_bench.add_argument("spec", help="Catalog spec, e.g. remark13 or boolean:10.")
    p_bench.add_argument("--repeats", type=_positive_int, default=None)
    p_bench.add_argument("--out-dir", type=Path, default=None)

    p_survey = sub.add_parser("survey", parents=[common], help="Property table over catalog entries as CSV.")
    p_survey.add_argument("specs", nargs="*", help="Catalog specs (default: the named examples).")
    p_survey.add_argument("--out", type=Path, default=Path("data/survey.csv"))
    p_survey.add_argument("--no-cordovil", action="store_true")

    sub.add_parser("catalog", parents=[common], help="List catalog entries.")
    return parser


def _run(args: argparse.Namespace) -> int:
    config = load_config(args.config)
    logging_settings = config.logging
    if args.log_level:
        logging_settings = replace(logging_settings, level=args.log_level)
    configure_logging(logging_settings)

    if args.command == "catalog":
        for name in names():
            print(f"{name:16s} {describe(name)}")
        return EXIT_OK

    if args.command == "analyze":
        options = AnalysisOptions.from_config(
            config,
            field=args.field,
            sigma_chain=args.sigma_chain,
            node_cap=args.node_cap,
            chamber_cap=args.chamber_cap,
            chamber_method=args.chamber_method,
            export_cas=args.export_cas,
            cas_format=args.cas_format,
            cordovil=False if args.no_cordovil else None,
        )
        report = analyze(load_arrangement(args.input), options)
        text = to_json(report, indent=config.report.indent) + "\n" if args.json else render_text(report)
        if args.out is not None:
            args.out.parent.mkdir(parents=True, exist_ok=True)
            args.out.write_text(text, encoding="utf-8")
            logger.info("Wrote report to %s", args.out)
        else:
            sys.stdout.write(text)
        return EXIT_OK

    if args.command == "bench":
        df = bench(
            args.spec,
            repeats=args.repeats or config.bench.repeats,
            field=config.algebra.field,
            node_cap=config.search.node_cap,
            chamber_cap=config.search.chamber_cap,
            method=config.chambers.method,
        )
        write_bench(df, args.spec, args.out_dir or config.bench.out_dir)
        sys.stdout.write(df.to_string(index=False) + "\n")
        return EXIT_OK

    if args.command == "survey":
        options = AnalysisOptions.from_config(config, cordovil=False if args.no_cordovil else None)
        df = survey(args.specs or None, options)
        write_survey(df, args.out)
        sys.stdout.write(df.to_string(index=False) + "\n")
        return EXIT_OK

    raise ArrangementError(f"Unknown command: {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; maps invalid input to exit 1 and exhausted caps to exit 2."""

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for exhausted caps here.
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    try:
        return _run(args)
    except ResourceCapExceeded as exc:
        logger.error("Resource cap %s=%s exceeded in stage %s: %s", exc.cap, exc.limit, exc.stage, exc)
        return EXIT_CAP
    except (ArrangementError, FileNotFoundError, ValueError) as exc:
        logger.error("Invalid input: %s", exc)
        return EXIT_INVALID
    except (ReportInvariantError, ContractViolation) as exc:
        logger.error("Internal consistency failure: %s", exc)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
