"""Command-line entry point.

Exit codes: 0 on success (including results consistent with the published
theorems), 1 on usage, configuration or precondition errors, 2 when a
verifier finds a counterexample.
"""

import argparse
import logging
import sys
import time
from typing import List, Optional

from expdiophantine import __version__
from expdiophantine.commands import bound, fields, search
from expdiophantine.config import configure_logging, get_settings
from expdiophantine.errors import UsageError, VerifierError
from expdiophantine.models import OutputFormat
from expdiophantine.report import build_report, render

logger = logging.getLogger(__name__)

COMMAND_MODULES = (search, fields, bound)


class ArgumentParser(argparse.ArgumentParser):
    """Raise ``UsageError`` instead of printing usage and exiting."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="expdiophantine", description="Exact checks for exponential Diophantine equations")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    started = time.perf_counter()
    # exact results and arguments may run to any number of digits
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        settings = get_settings()
        configure_logging(settings.log_level)
        args = build_parser().parse_args(argv)
        fmt = OutputFormat(args.format) if args.format else settings.output_format
        logger.info("running %s", args.command)
        outcome = args.handler(args, settings)
    except VerifierError as e:
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code

    exit_code = 2 if outcome.violation else 0
    if outcome.violation:
        logger.warning("%s: result contradicts the expected solution set", args.command)
    report = build_report(args.command, outcome.parameters, outcome.payload, started, exit_code)
    print(render(report, fmt))
    return exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
