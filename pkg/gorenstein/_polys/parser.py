# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Recursive descent parser for polynomial expressions

Grammar::

    expr   := [("+" | "-")] term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom ["^" INTEGER]
    atom   := INTEGER | NAME | "(" expr ")"

Division is only allowed by nonzero constants, so ``1/2*x`` is valid and
``x/y`` is not. Multiplication must be explicit: ``2x`` is an error.
"""
import re

from .._errors import PolynomialSyntaxError, UnknownVariable
from .polynomial import Polynomial

_NUMBER = re.compile(r"[0-9]+")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def _tokenize(text):
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        character = text[position]
        number = _NUMBER.match(text, position)
        name = _NAME.match(text, position)
        if number:
            tokens.append(("number", number.group(0), position))
            position = number.end()
        elif name:
            tokens.append(("name", name.group(0), position))
            position = name.end()
        elif character in "+-*/^()":
            tokens.append((character, character, position))
            position += 1
        else:
            raise PolynomialSyntaxError(
                "Unexpected character '{}'".format(character), position
            )
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.position = 0

    @property
    def current(self):
        return self.tokens[self.position]

    def advance(self):
        token = self.current
        self.position += 1
        return token

    def expect(self, kind):
        token = self.current
        if token[0] != kind:
            raise PolynomialSyntaxError(
                "Expected '{}' but found '{}'".format(kind, token[1] or "end of input"),
                token[2],
            )
        return self.advance()

    def parse(self):
        result = self.expr()
        token = self.current
        if token[0] != "end":
            if token[0] in ("number", "name", "("):
                raise PolynomialSyntaxError(
                    "Implicit multiplication is not allowed", token[2]
                )
            raise PolynomialSyntaxError("Unexpected '{}'".format(token[1]), token[2])
        return result

    def expr(self):
        negative = False
        if self.current[0] in ("+", "-"):
            negative = self.advance()[0] == "-"
        result = self.term()
        if negative:
            result = -result
        while self.current[0] in ("+", "-"):
            operator = self.advance()[0]
            value = self.term()
            result = result + value if operator == "+" else result - value
        return result

    def term(self):
        result = self.factor()
        while self.current[0] in ("*", "/"):
            operator, _, start = self.advance()
            value = self.factor()
            if operator == "*":
                result = result * value
            else:
                if not value.is_constant() or not value:
                    raise PolynomialSyntaxError(
                        "Can only divide by a nonzero constant", start
                    )
                result = result / value
        return result

    def factor(self):
        kind, text, start = self.current
        if kind == "name":
            self.advance()
            if text not in self.ring.names:
                raise UnknownVariable(text, start)
            exponent = self.exponent()
            exponents = [0] * self.ring.nvars
            exponents[self.ring.index(text)] = exponent
            return Polynomial.monomial(self.ring, exponents)
        base = self.atom()
        if self.current[0] == "^":
            return base ** self.exponent()
        return base

    def exponent(self):
        if self.current[0] != "^":
            return 1
        self.advance()
        return int(self.expect("number")[1])

    def atom(self):
        kind, text, start = self.current
        if kind == "number":
            self.advance()
            return Polynomial.constant(self.ring, int(text))
        if kind == "(":
            self.advance()
            result = self.expr()
            self.expect(")")
            return result
        raise PolynomialSyntaxError(
            "Unexpected '{}'".format(text or "end of input"), start
        )


def parse_poly(text, ring):
    """
    Parse a polynomial expression

    Parameters
    ----------
    text : str
        Expression using integers, variable names of ``ring``, ``+ - * / ^``
        and parentheses.
    ring : :class:`gorenstein.GradedRing`
        Ring of the result. For a dual ring, ``Xi^2*X*Y`` builds the divided
        power monomial directly.

    Returns
    -------
    polynomial : :class:`gorenstein.Polynomial`

    Examples
    --------
    >>> from gorenstein import GradedRing
    >>> ring = GradedRing(("x", "y"))
    >>> str(parse_poly("(x + y)*(x - y)", ring))
    'x^2 - y^2'
    >>> str(parse_poly("1/2*x - 3", ring))
    '1/2*x - 3'
    """
    return _Parser(text, ring).parse()


def parse_factored(text, ring):
    """
    Parse a product of factors, keeping the factors apart

    The text is split on the multiplication signs outside parentheses, so
    ``"(x + y)*x*x"`` gives the three factors ``x + y``, ``x`` and ``x``
    while ``"x^3"`` is a single factor.

    Returns
    -------
    factors : list of :class:`gorenstein.Polynomial`
    """
    pieces = []
    depth = 0
    start = 0
    for position, character in enumerate(text):
        if character == "(":
            depth += 1
        elif character == ")":
            depth -= 1
        elif character == "*" and depth == 0:
            pieces.append((start, text[start:position]))
            start = position + 1
    pieces.append((start, text[start:]))
    factors = []
    for offset, piece in pieces:
        if not piece.strip():
            raise PolynomialSyntaxError("Empty factor", offset)
        try:
            factors.append(parse_poly(piece, ring))
        except UnknownVariable as error:
            raise UnknownVariable(error.name, offset + error.position) from None
        except PolynomialSyntaxError as error:
            raise PolynomialSyntaxError(
                error.message, offset + error.position
            ) from None
    return factors
