# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
The ``bug`` command-line program
"""
import argparse
import logging

from ..constants import DEFAULT_BOUND, DEFAULT_SEED, DEFAULT_TRIALS
from .gallery import FIXTURES, verify_all, verify_example
from .report import Report
from .session import EXIT_FAILED, EXIT_INPUT_ERROR, EXIT_OK, run_session

LOGGER = logging.getLogger(__name__)


def parse_args(argv=None):
    "Parse the command line of ``bug``."
    parser = argparse.ArgumentParser(
        prog="bug",
        description=(
            "Exact computations with graded Artinian Gorenstein algebras and "
            "their cohomological blow-ups."
        ),
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log fixture outcomes (-v) and every statement (-vv).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Evaluate a session file.")
    run.add_argument("path", help="Session file.")
    run.add_argument(
        "--trials",
        type=int,
        default=DEFAULT_TRIALS,
        help="Random linear forms per Lefschetz search (default: %(default)s)",
    )
    run.add_argument(
        "--bound",
        type=int,
        default=DEFAULT_BOUND,
        help="Bound of the random coefficients (default: %(default)s)",
    )

    verify = commands.add_parser(
        "verify", help="Check a worked example against its known answers."
    )
    verify.add_argument(
        "example",
        help="One of: all, {}.".format(", ".join(sorted(FIXTURES))),
    )

    for command in (run, verify):
        command.add_argument(
            "--seed",
            type=int,
            default=DEFAULT_SEED,
            help="Seed of the random searches (default: %(default)s)",
        )
        command.add_argument(
            "--json", action="store_true", help="Print the report as JSON."
        )
    return parser.parse_args(argv)


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s:%(name)s: %(message)s")


def _verify(args):
    if args.example == "all":
        report = verify_all(seed=args.seed)
    else:
        try:
            report = verify_example(args.example, seed=args.seed)
        except ValueError as error:
            LOGGER.error(str(error))
            report = Report(source=args.example, seed=args.seed, error=str(error))
            return report, EXIT_INPUT_ERROR
    return report, EXIT_OK if report.passed else EXIT_FAILED


def main(argv=None):
    """
    Entry point of ``bug``

    Parameters
    ----------
    argv : list of str or None
        Arguments without the program name. Defaults to ``sys.argv[1:]``.

    Returns
    -------
    status : int
        0 on success, 1 if a check or an internal consistency test failed,
        2 for an input error.
    """
    args = parse_args(argv)
    _configure_logging(args.verbose)
    if args.command == "run":
        report, status = run_session(
            args.path, seed=args.seed, trials=args.trials, bound=args.bound
        )
    else:
        report, status = _verify(args)
    print(report.to_json() if args.json else report.to_text())
    return status

