# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Structured reports and their text and JSON renderings
"""
import json
from dataclasses import dataclass, field

from .._apolarity import ArtinianAlgebra, GradedIdeal, OrientedAlgebra
from .._polys import Polynomial


def plain(value, field_spec=None):
    """
    Convert a computed value to JSON-compatible data

    Polynomials, ideals and field elements become their canonical strings,
    tuples become lists and algebras their Hilbert functions. Booleans,
    integers, strings and None pass through.

    Parameters
    ----------
    value : object
    field_spec : :class:`gorenstein.FieldSpec` or None
        Used to print bare field elements.
    """
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (Polynomial, GradedIdeal)):
        return str(value)
    if isinstance(value, (ArtinianAlgebra, OrientedAlgebra)):
        return plain(value.hilbert)
    if isinstance(value, dict):
        return {str(k): plain(v, field_spec) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item, field_spec) for item in value]
    if field_spec is not None:
        return field_spec.to_str(value)
    return str(value)


def render(value):
    """
    Canonical text of plain data, as written in ``check`` statements

    Examples
    --------
    >>> render([1, 2, [3, True]])
    '(1, 2, (3, true))'
    >>> render(None)
    'none'
    """
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "({})".format(", ".join(render(item) for item in value))
    if isinstance(value, dict):
        return "{{{}}}".format(
            ", ".join("{}: {}".format(k, render(v)) for k, v in sorted(value.items()))
        )
    return str(value)


def same_text(first, second):
    "Compare two renderings ignoring whitespace."
    return "".join(first.split()) == "".join(second.split())


@dataclass
class Entry:
    """
    Result of one command or one fixture

    Attributes
    ----------
    label : str
        Binding name, or the command name for anonymous commands.
    command : str
    line : int or None
        Line of the session file (None for fixtures).
    values : dict
        Plain data, in insertion order.
    """

    label: str
    command: str
    line: object
    values: dict


@dataclass
class Check:
    """
    Outcome of a comparison with an expected value
    """

    target: str
    expected: str
    actual: str
    passed: bool
    line: object = None


@dataclass
class Report:
    """
    Everything a session or a fixture run produced

    Attributes
    ----------
    source : str
        Path of the session file or fixture identifier.
    seed : int
    entries : list of :class:`Entry`
    checks : list of :class:`Check`
    error : str or None
        Input error that stopped the run.
    """

    source: str
    seed: int
    entries: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    error: object = None

    @property
    def passed(self):
        "True if no check failed and no error occurred."
        return self.error is None and all(check.passed for check in self.checks)

    def failures(self):
        "The failed checks."
        return [check for check in self.checks if not check.passed]

    def tree(self):
        "The report as nested plain data."
        return {
            "source": self.source,
            "seed": self.seed,
            "passed": self.passed,
            "error": self.error,
            "entries": [
                {
                    "label": entry.label,
                    "command": entry.command,
                    "line": entry.line,
                    "values": entry.values,
                }
                for entry in self.entries
            ],
            "checks": [
                {
                    "target": check.target,
                    "expected": check.expected,
                    "actual": check.actual,
                    "passed": check.passed,
                    "line": check.line,
                }
                for check in self.checks
            ],
        }

    def to_json(self):
        "Deterministic JSON text."
        return json.dumps(self.tree(), sort_keys=True, indent=2, ensure_ascii=True)

    def to_text(self):
        "Human readable text with the same data as :meth:`to_json`."
        lines = ["# {} (seed {})".format(self.source, self.seed)]
        for entry in self.entries:
            where = "" if entry.line is None else " [line {}]".format(entry.line)
            lines.append("{} = {}{}".format(entry.label, entry.command, where))
            for key, value in entry.values.items():
                lines.append("    {}: {}".format(key, render(value)))
        for check in self.checks:
            where = "" if check.line is None else " [line {}]".format(check.line)
            status = "ok" if check.passed else "FAILED"
            lines.append(
                "check {} == {}: {}{}".format(
                    check.target, check.expected, status, where
                )
            )
            if not check.passed:
                lines.append("    actual: {}".format(check.actual))
        if self.error is not None:
            lines.append("error: {}".format(self.error))
        lines.append("passed: {}".format(render(self.passed)))
        return "\n".join(lines)


def merge(reports, source="all"):
    """
    Combine fixture reports into one, ordered by source
    """
    reports = sorted(reports, key=lambda report: report.source)
    merged = Report(source=source, seed=reports[0].seed if reports else 0)
    errors = []
    for report in reports:
        merged.entries.extend(report.entries)
        merged.checks.extend(report.checks)
        if report.error is not None:
            errors.append("{}: {}".format(report.source, report.error))
    if errors:
        merged.error = "; ".join(errors)
    return merged
