# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Session files: parsing and evaluation

A session is a line-oriented text file. ``#`` starts a comment and a
trailing backslash continues a statement on the next line. Statements::

    field GF(5)
    ring R = x, y, u:2
    let F = dual R: X^2*Y^2
    let t = poly R: x*y^2
    let f = poly R[xi]: xi^3 + x*xi^2 + x*y^2
    let I = ideal R: x^3, y^3
    let g = factored R: x*x*x; y^3
    let pi = map I -> J: x -> x, y -> 0
    let S = fan: (1, 0), (0, 1), (-1, -1) | (0, 1), (1, 2), (0, 2)
    let h = hilbert algebra=I
    socle algebra=I
    check h.hilbert == (1, 2, 3, 2, 1)

Dual forms are written in the mirror ring (``Xi`` is the dual of ``xi``).
A binding made by a command exposes its results as ``name.key``.
"""
import logging
import re
from dataclasses import dataclass, field

from .._apolarity import (
    ArtinianAlgebra,
    GradedIdeal,
    OrientedAlgebra,
    annihilator,
    make_map,
    orient,
    quotient,
)
from .._errors import ConsistencyError, PolynomialSyntaxError
from .._exact import QQ_FIELD, FieldSpec
from .._polys import GradedRing, Polynomial, parse_factored, parse_poly
from .._structure import ToricFan
from ..constants import DEFAULT_BOUND, DEFAULT_SEED, DEFAULT_TRIALS, EXHAUSTIVE_CAP
from .report import Check, Entry, Report, render, same_text

LOGGER = logging.getLogger(__name__)

_IDENTIFIER = r"[A-Za-z][A-Za-z0-9_]*"
_REFERENCE = re.compile(r"^({0})(?:\.([A-Za-z][A-Za-z0-9_-]*))?$".format(_IDENTIFIER))
_RING_SPEC = re.compile(
    r"^({0}(?:\.[A-Za-z][A-Za-z0-9_-]*)?)\s*(?:\[([^\]]*)\])?$".format(_IDENTIFIER)
)
_VARIABLE = re.compile(r"^({0})(?::(\d+))?$".format(_IDENTIFIER))
_TUPLE = re.compile(r"\(([^()]*)\)")


class SessionError(ValueError):
    """
    Input error in a session file

    Parameters
    ----------
    message : str
    line : int or None
        One-based line number.
    column : int or None
        One-based column, when known.
    """

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def located(self, path):
        "The message prefixed with ``path:line:column``."
        where = [str(path)]
        if self.line is not None:
            where.append(str(self.line))
            if self.column is not None:
                where.append(str(self.column))
        return "{}: {}".format(":".join(where), self.message)


@dataclass(frozen=True)
class Statement:
    """
    A parsed statement

    Attributes
    ----------
    kind : str
        ``"field"``, ``"ring"``, ``"let"``, ``"command"`` or ``"check"``.
    line : int
    text : str
        The statement with comments and continuations removed.
    name : str or None
        Bound name for ``let`` and ``ring``, checked binding for ``check``.
    head : str or None
        The command or binding type.
    body : str
        The rest of the statement.
    offset : int
        Zero-based column where ``body`` starts in ``text``.
    """

    kind: str
    line: int
    text: str
    name: object = None
    head: object = None
    body: str = ""
    offset: int = 0


def _logical_lines(text):
    "Join continued lines and drop comments, keeping the first line number"
    pending, start = "", None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if start is None:
            start = number
        if line.endswith("\\"):
            pending += line[:-1] + " "
            continue
        pending += line
        if pending.strip():
            yield start, pending
        pending, start = "", None
    if pending.strip():
        yield start, pending


def _statement(number, text):
    stripped = text.strip()
    indent = len(text) - len(text.lstrip())
    keyword, _, rest = stripped.partition(" ")
    rest_offset = indent + len(keyword) + (len(stripped) - len(keyword) - len(rest))
    if keyword == "field":
        return Statement("field", number, text, body=rest.strip(), offset=rest_offset)
    if keyword == "ring":
        match = re.match(r"^({0})\s*=\s*(.*)$".format(_IDENTIFIER), rest.strip())
        if match is None:
            raise SessionError("Expected 'ring NAME = VARIABLES'.", number)
        return Statement("ring", number, text, name=match.group(1), body=match.group(2))
    if keyword == "let":
        match = re.match(r"^\s*({0})\s*=\s*(\S+)\s*(.*)$".format(_IDENTIFIER), rest)
        if match is None:
            raise SessionError("Expected 'let NAME = ...'.", number)
        head = match.group(2)
        body = match.group(3)
        if head.endswith(":"):
            head = head[:-1]
            body = ":" + body
        return Statement(
            "let",
            number,
            text,
            name=match.group(1),
            head=head,
            body=body,
            offset=rest_offset + match.start(3),
        )
    if keyword == "check":
        match = re.match(
            r"^({0})\.([A-Za-z][A-Za-z0-9_-]*)\s*==\s*(.+)$".format(_IDENTIFIER),
            rest.strip(),
        )
        if match is None:
            raise SessionError("Expected 'check NAME.KEY == VALUE'.", number)
        return Statement(
            "check",
            number,
            text,
            name=match.group(1),
            head=match.group(2),
            body=match.group(3).strip(),
        )
    return Statement(
        "command", number, text, head=keyword, body=rest, offset=rest_offset
    )


def parse_session(text):
    """
    Split a session file into statements

    Parameters
    ----------
    text : str

    Returns
    -------
    statements : list of :class:`Statement`

    Raises
    ------
    SessionError
        For a statement that does not match any form.
    """
    return [_statement(number, line) for number, line in _logical_lines(text)]


def split_top(text, separator=","):
    """
    Split on a separator outside parentheses

    Returns
    -------
    pieces : list of tuples
        Pairs ``(offset, piece)`` with the offset of each piece in ``text``.
    """
    pieces, depth, start = [], 0, 0
    for position, character in enumerate(text):
        if character == "(":
            depth += 1
        elif character == ")":
            depth -= 1
        elif depth == 0 and text.startswith(separator, position):
            pieces.append((start, text[start:position]))
            start = position + len(separator)
    pieces.append((start, text[start:]))
    return pieces


@dataclass
class Result:
    """
    Values and objects produced by a command

    Attributes
    ----------
    values : dict
        Plain data reported and checked.
    objects : dict
        Computed objects reachable as ``name.key`` from later statements.
    """

    values: dict
    objects: dict = field(default_factory=dict)


class Session:
    """
    Evaluation state of a session file

    Parameters
    ----------
    path : str
        Used in messages and in the report.
    seed, trials, bound, cap : int
        Defaults of the randomized and exhaustive Lefschetz searches.
    """

    def __init__(
        self,
        path="<session>",
        seed=DEFAULT_SEED,
        trials=DEFAULT_TRIALS,
        bound=DEFAULT_BOUND,
        cap=EXHAUSTIVE_CAP,
    ):
        self.path = str(path)
        self.seed = seed
        self.trials = trials
        self.bound = bound
        self.cap = cap
        self.field = None
        self.rings = {}
        self.bindings = {}
        self.report = Report(source=self.path, seed=seed)
        self.line = None

    @property
    def field_spec(self):
        "The session field, the rationals until declared."
        return QQ_FIELD if self.field is None else self.field

    # Name resolution
    # -------------------------------------------------------------------------

    def error(self, message, column=None):
        "A :class:`SessionError` at the current line."
        return SessionError(message, self.line, column)

    def resolve(self, token):
        """
        Object bound to ``name`` or ``name.key``
        """
        match = _REFERENCE.match(token)
        if match is None:
            raise self.error("Invalid reference '{}'.".format(token))
        name, key = match.groups()
        if name not in self.bindings:
            raise self.error("Unknown name '{}'.".format(name))
        value = self.bindings[name]
        if key is None:
            return value
        if not isinstance(value, Result):
            raise self.error("'{}' has no field '{}'.".format(name, key))
        if key in value.objects:
            return value.objects[key]
        if key in value.values:
            return value.values[key]
        raise self.error(
            "'{}' has no field '{}'. Available: {}.".format(
                name, key, ", ".join(list(value.objects) + list(value.values))
            )
        )

    def ring(self, spec):
        """
        Ring named by ``R``, ``B.ring`` or ``R[xi, u:2]``
        """
        match = _RING_SPEC.match(spec.strip())
        if match is None:
            raise self.error("Invalid ring '{}'.".format(spec))
        base, extra = match.groups()
        if base in self.rings:
            ring = self.rings[base]
        else:
            ring = self.resolve(base)
            if not isinstance(ring, GradedRing):
                raise self.error("'{}' is not a ring.".format(base))
        if extra:
            for name, weight in self._variables(extra):
                ring = ring.adjoin(name, weight)
        return ring

    def _variables(self, text):
        variables = []
        for piece in text.split(","):
            match = _VARIABLE.match(piece.strip())
            if match is None:
                raise self.error("Invalid variable '{}'.".format(piece.strip()))
            variables.append((match.group(1), int(match.group(2) or 1)))
        return variables

    def polynomial(self, text, ring, offset=0):
        "Parse an expression, reporting syntax errors with their column."
        try:
            return parse_poly(text, ring)
        except PolynomialSyntaxError as error:
            raise SessionError(
                "{} in '{}'.".format(error.message, text.strip()),
                self.line,
                offset + error.position + 1,
            ) from None

    # Statements
    # -------------------------------------------------------------------------

    def execute(self, statement):
        """
        Evaluate one statement and record its outcome in the report
        """
        self.line = statement.line
        LOGGER.debug("%s:%d: %s", self.path, statement.line, statement.text.strip())
        if statement.kind == "field":
            self._field(statement)
        elif statement.kind == "ring":
            self._ring(statement)
        elif statement.kind == "let":
            self._let(statement)
        elif statement.kind == "command":
            result = self.command(statement.head, statement.body)
            self._record(statement.head, statement.head, result)
        elif statement.kind == "check":
            self._check(statement)

    def _field(self, statement):
        if self.field is not None:
            raise self.error("The field can only be declared once.")
        if self.rings:
            raise self.error("The field must be declared before the rings.")
        try:
            self.field = FieldSpec.from_name(statement.body)
        except ValueError as error:
            raise self.error(str(error)) from None

    def _ring(self, statement):
        if statement.name in self.rings or statement.name in self.bindings:
            raise self.error("Name '{}' is already bound.".format(statement.name))
        variables = self._variables(statement.body)
        self.rings[statement.name] = GradedRing(
            tuple(name for name, _ in variables),
            tuple(weight for _, weight in variables),
            field=self.field_spec,
        )

    def _bind(self, name, value):
        if name in self.rings or name in self.bindings:
            raise self.error("Name '{}' is already bound.".format(name))
        self.bindings[name] = value

    def _let(self, statement):
        head, body = statement.head, statement.body
        if head in ("poly", "dual", "ideal", "factored"):
            spec, colon, expression = body.partition(":")
            if not colon:
                raise self.error("Expected '{} RING: ...'.".format(head))
            ring = self.ring(spec)
            offset = statement.offset + len(spec) + 1
            if head == "dual":
                ring = ring.mirror()
            if head in ("poly", "dual"):
                value = self.polynomial(expression, ring, offset)
            elif head == "ideal":
                value = GradedIdeal(
                    ring,
                    [
                        self.polynomial(piece, ring, offset + start)
                        for start, piece in split_top(expression)
                    ],
                )
            else:
                value = [
                    self._factored(piece, ring, offset + start)
                    for start, piece in split_top(expression, ";")
                ]
            self._bind(statement.name, value)
        elif head == "map":
            self._bind(statement.name, self._map(body, statement.offset))
        elif head == "fan":
            self._bind(statement.name, self._fan(body))
        else:
            result = self.command(head, body)
            self._bind(statement.name, result)
            self._record(statement.name, head, result)

    def _factored(self, text, ring, offset):
        try:
            return parse_factored(text, ring)
        except PolynomialSyntaxError as error:
            raise SessionError(
                "{} in '{}'.".format(error.message, text.strip()),
                self.line,
                offset + error.position + 1,
            ) from None

    def algebra(self, value, oriented=False):
        """
        Algebra of a bound ideal, dual form or algebra

        With ``oriented``, Gorenstein algebras come with the orientation of
        their dual form (the given one for dual forms).
        """
        if isinstance(value, OrientedAlgebra):
            return value if oriented else value.algebra
        if isinstance(value, ArtinianAlgebra):
            plain = value
        elif isinstance(value, GradedIdeal):
            plain = quotient(value)
        elif isinstance(value, Polynomial) and value.ring.dual:
            plain = quotient(annihilator(value))
            if oriented:
                return orient(plain, dual_generator=value)
        else:
            raise self.error("Expected an ideal, a dual form or an algebra.")
        if oriented and plain.is_gorenstein():
            return orient(plain)
        return plain

    def _map(self, body, offset):
        header, colon, assignments = body.partition(":")
        if not colon or "->" not in header:
            raise self.error("Expected 'map SOURCE -> TARGET: x -> image, ...'.")
        names = [part.strip() for part in header.split("->")]
        if len(names) != 2:
            raise self.error("Expected 'map SOURCE -> TARGET: x -> image, ...'.")
        source = self.algebra(self.resolve(names[0]), oriented=True)
        target = self.algebra(self.resolve(names[1]), oriented=True)
        images = {}
        start = offset + len(header) + 1
        for position, piece in split_top(assignments):
            variable, arrow, image = piece.partition("->")
            if not arrow:
                raise self.error(
                    "Expected 'variable -> image' in '{}'.".format(piece.strip()),
                    start + position + 1,
                )
            images[variable.strip()] = self.polynomial(
                image, target.ring, start + position + len(variable) + 2
            )
        return make_map(source, target, images)

    def _fan(self, body):
        text = body.lstrip(":")
        rays, bar, cones = text.partition("|")
        if not bar:
            raise self.error("Expected 'fan: RAYS | CONES'.")
        try:
            return ToricFan(
                tuple(
                    tuple(int(v) for v in group.split(","))
                    for group in _TUPLE.findall(rays)
                ),
                tuple(
                    tuple(int(v) for v in group.split(","))
                    for group in _TUPLE.findall(cones)
                ),
            )
        except ValueError as error:
            raise self.error(str(error)) from None

    def command(self, name, body):
        "Run a command with ``key=value`` arguments."
        from .commands import COMMANDS, Arguments

        if name not in COMMANDS:
            raise self.error(
                "Unknown command '{}'. Must be one of: {}.".format(
                    name, ", ".join(sorted(COMMANDS))
                )
            )
        arguments = {}
        for token in body.split():
            key, equals, value = token.partition("=")
            if not equals or not key or not value:
                raise self.error("Expected 'key=value' but found '{}'.".format(token))
            if key in arguments:
                raise self.error("Repeated argument '{}'.".format(key))
            arguments[key] = value
        return COMMANDS[name](Arguments(self, name, arguments))

    def _record(self, label, command, result):
        self.report.entries.append(
            Entry(label=label, command=command, line=self.line, values=result.values)
        )

    def _check(self, statement):
        value = self.bindings.get(statement.name)
        if not isinstance(value, Result):
            raise self.error(
                "'{}' is not bound to a command result.".format(statement.name)
            )
        if statement.head not in value.values:
            raise self.error(
                "'{}' has no value '{}'. Available: {}.".format(
                    statement.name, statement.head, ", ".join(value.values)
                )
            )
        actual = render(value.values[statement.head])
        passed = same_text(actual, statement.body)
        self.report.checks.append(
            Check(
                target="{}.{}".format(statement.name, statement.head),
                expected=statement.body,
                actual=actual,
                passed=passed,
                line=statement.line,
            )
        )
        if not passed:
            LOGGER.info(
                "%s:%d: check %s.%s failed: %s",
                self.path,
                statement.line,
                statement.name,
                statement.head,
                actual,
            )


#: Exit status of a successful run
EXIT_OK = 0
#: Exit status when a check or an internal consistency test fails
EXIT_FAILED = 1
#: Exit status for malformed input
EXIT_INPUT_ERROR = 2


def run_text(text, path="<session>", **kwargs):
    """
    Evaluate a session given as text

    Parameters
    ----------
    text : str
    path : str
        Name used in messages.
    kwargs
        Passed to :class:`Session`.

    Returns
    -------
    report : :class:`gorenstein._cli.report.Report`
    status : int
        0 on success, 1 if a check or a consistency test failed, 2 for an
        input error. The run stops at the first error.
    """
    session = Session(path, **kwargs)
    try:
        statements = parse_session(text)
    except SessionError as error:
        session.report.error = error.located(path)
        LOGGER.error(session.report.error)
        return session.report, EXIT_INPUT_ERROR
    for statement in statements:
        try:
            session.execute(statement)
        except SessionError as error:
            session.report.error = error.located(path)
            LOGGER.error(session.report.error)
            return session.report, EXIT_INPUT_ERROR
        except ConsistencyError as error:
            session.report.error = "{}:{}: {}".format(path, statement.line, error)
            LOGGER.error(session.report.error)
            return session.report, EXIT_FAILED
        except ValueError as error:
            session.report.error = "{}:{}: {}".format(path, statement.line, error)
            LOGGER.error(session.report.error)
            return session.report, EXIT_INPUT_ERROR
    if session.report.failures():
        return session.report, EXIT_FAILED
    return session.report, EXIT_OK


def run_session(path, **kwargs):
    """
    Evaluate a session file

    See :func:`run_text` for the parameters and the returned values.
    """
    try:
        with open(path, encoding="utf-8") as stream:
            text = stream.read()
    except OSError as error:
        report = Report(source=str(path), seed=kwargs.get("seed", DEFAULT_SEED))
        report.error = "{}: {}".format(path, error.strerror or error)
        LOGGER.error(report.error)
        return report, EXIT_INPUT_ERROR
    return run_text(text, path=str(path), **kwargs)
