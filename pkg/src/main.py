"""
foliation-kit - command-line entry point.

    foliation-kit run <script.fol> [--json] [--order N] [--bound B] [--seed S] [--samples K]
    foliation-kit corpus [--dir PATH] [--no-determinism]
    foliation-kit schema

Reports go to stdout, logs to stderr. The exit code is the largest error
class recorded: 1 usage/syntax, 2 precondition, 3 certificate failure.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import structlog
from rich.console import Console
from rich.table import Table

from .config import get_config
from .errors import FoliationKitError
from .models import OutputFormat, Report, RunOptions
from .script import render_report, run_corpus, run_script_file


def configure_logging(level: str, json_logs: bool) -> None:
    """Structured logging to stderr."""
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=getattr(logging, level.upper(), logging.WARNING))
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.processors.JSONRenderer() if json_logs else structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


logger = structlog.get_logger()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foliation-kit", description="Exact symbolic toolkit for germs of foliations")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="Run a .fol script")
    run.add_argument("script", type=Path)
    run.add_argument("--json", action="store_true", help="Print the JSON report")
    run.add_argument("--order", type=int, help="Truncation order for normal forms")
    run.add_argument("--bound", type=int, help="Resonance search bound")
    run.add_argument("--seed", type=int, help="Seed for parameter sampling")
    run.add_argument("--samples", type=int, help="Number of sampled pencil members")
    run.add_argument("--no-timing", action="store_true", help="Omit timing from the JSON report")

    corpus = sub.add_parser("corpus", help="Run the regression corpus")
    corpus.add_argument("--dir", type=Path, help="Corpus directory (default from configuration)")
    corpus.add_argument("--no-determinism", action="store_true", help="Skip the second run per script")

    sub.add_parser("schema", help="Print the JSON schema of reports")
    return parser


def options_from_args(args: argparse.Namespace) -> RunOptions:
    """Configuration values, overridden by command-line flags."""
    cfg = get_config()
    defaults = cfg.analysis
    output = OutputFormat.JSON if getattr(args, "json", False) or cfg.output.format == "json" else OutputFormat.TEXT
    return RunOptions(
        truncation_order=args.order if getattr(args, "order", None) is not None else defaults.truncation_order,
        resonance_bound=args.bound if getattr(args, "bound", None) is not None else defaults.resonance_bound,
        sample_count=args.samples if getattr(args, "samples", None) is not None else defaults.sample_count,
        seed=args.seed if getattr(args, "seed", None) is not None else defaults.seed,
        exceptional_cap=defaults.exceptional_cap,
        parameter_range=defaults.parameter_range,
        surface_degree_cap=defaults.surface_degree_cap,
        output=output,
    )


def cmd_run(args: argparse.Namespace, console: Console) -> int:
    options = options_from_args(args)
    if not args.script.exists():
        logger.error("Script not found", path=str(args.script))
        return 1
    report = run_script_file(args.script, options)
    if options.output == OutputFormat.JSON:
        sys.stdout.write(report.to_json(include_timing=not args.no_timing) + "\n")
    else:
        render_report(report, console)
    return report.exit_code


def cmd_corpus(args: argparse.Namespace, console: Console) -> int:
    options = options_from_args(args)
    try:
        outcomes = run_corpus(args.dir, options, check_determinism=not args.no_determinism)
    except FoliationKitError as e:
        logger.error("Corpus run failed", error=str(e))
        return e.exit_code
    table = Table(title="Corpus")
    table.add_column("Script")
    table.add_column("Exit", justify="right")
    table.add_column("Result")
    for o in outcomes:
        table.add_row(o.script, str(o.exit_code), "ok" if o.passed else "; ".join(o.mismatches))
    console.print(table)
    return 0 if all(o.passed for o in outcomes) else 1


def cmd_schema(args: argparse.Namespace, console: Console) -> int:
    sys.stdout.write(json.dumps(Report.model_json_schema(), indent=2) + "\n")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    cfg = get_config()
    configure_logging(cfg.output.log_level, cfg.output.log_json)
    args = build_parser().parse_args(argv)
    console = Console()
    handlers = {"run": cmd_run, "corpus": cmd_corpus, "schema": cmd_schema}
    return handlers[args.command](args, console)


if __name__ == "__main__":
    sys.exit(main())
