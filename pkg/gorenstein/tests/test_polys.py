# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Test graded rings, polynomials, contraction and the parser
"""
import pytest

from .. import (
    DualProductOverlap,
    DuplicateVariable,
    FieldSpec,
    GradedRing,
    Polynomial,
    PolynomialSyntaxError,
    RingMismatch,
    UnknownVariable,
    adjoin_variable,
    contract,
    parse_factored,
    parse_poly,
)
from .utils import random_form, random_generator, random_polynomial, ring


@pytest.fixture(name="plane")
def fixture_plane():
    """
    Standard graded ring in two variables
    """
    return ring("x y")


def test_ring_validation():
    "Names must be distinct identifiers and weights positive integers"
    with pytest.raises(DuplicateVariable):
        GradedRing(("x", "x"))
    with pytest.raises(ValueError, match="Invalid variable name"):
        GradedRing(("1x",))
    with pytest.raises(ValueError, match="Invalid weight"):
        GradedRing(("x", "y"), (1, 0))
    with pytest.raises(ValueError, match="weights for"):
        GradedRing(("x", "y"), (1,))


def test_mirror_and_adjoin():
    "The mirror capitalizes the first letter and adjoining checks clashes"
    big = adjoin_variable(ring("x y"), "xi")
    assert big.names == ("x", "y", "xi")
    dual = big.mirror()
    assert dual.names == ("X", "Y", "Xi")
    assert dual.dual
    assert dual.mirror() == big
    with pytest.raises(DuplicateVariable):
        big.adjoin("Xi")


def test_weighted_monomials():
    "Monomials of a weighted degree, in decreasing module order"
    weighted = ring("x u", weights=(1, 2))
    assert weighted.monomials(2) == ((2, 0), (0, 1))
    assert weighted.dimension(4) == 3
    assert weighted.dimension(-1) == 0
    assert not weighted.is_standard
    assert str(weighted) == "QQ[x, u:2]"


@pytest.mark.parametrize(
    "text, expected",
    [
        ("(x + y)*(x - y)", "x^2 - y^2"),
        ("1/2*x - 3", "1/2*x - 3"),
        ("-(x - y)^2", "-x^2 + 2*x*y - y^2"),
        ("x^0 + 0", "1"),
        ("y - y", "0"),
    ],
    ids=["product", "fraction", "power", "constant", "zero"],
)
def test_parse_and_print(plane, text, expected):
    "Canonical text of parsed expressions"
    assert str(parse_poly(text, plane)) == expected


@pytest.mark.parametrize(
    "text, position, message",
    [
        ("x + * y", 4, "Unexpected"),
        ("2x", 1, "Implicit multiplication"),
        ("x/y", 1, "divide"),
        ("x + (y", 6, "Expected"),
        ("x $ y", 2, "Unexpected character"),
        ("x²", 1, "Unexpected character"),
        ("y + é", 4, "Unexpected character"),
        ("x^²", 2, "Unexpected character"),
    ],
    ids=[
        "operator",
        "implicit",
        "division",
        "parenthesis",
        "character",
        "superscript",
        "accent",
        "superscript-exponent",
    ],
)
def test_parse_errors(plane, text, position, message):
    "Syntax errors carry the offset of the offending token"
    with pytest.raises(PolynomialSyntaxError, match=message) as error:
        parse_poly(text, plane)
    assert error.value.position == position


def test_parse_unknown_variable(plane):
    "Unknown names are reported with their position"
    with pytest.raises(UnknownVariable) as error:
        parse_poly("x + w^2", plane)
    assert error.value.name == "w"
    assert error.value.position == 4


def test_parse_factored(plane):
    "Factors are split on top level multiplication signs"
    factors = parse_factored("(x + y)*x*x", plane)
    assert [str(f) for f in factors] == ["x + y", "x", "x"]
    assert len(parse_factored("x^3", plane)) == 1
    with pytest.raises(PolynomialSyntaxError) as error:
        parse_factored("x**y", plane)
    assert error.value.position == 2
    with pytest.raises(UnknownVariable) as error:
        parse_factored("x*w", plane)
    assert error.value.position == 2


def test_dual_products(plane):
    "Dual forms multiply only with disjoint supports"
    dual = plane.mirror()
    assert str(parse_poly("X^2*Y", dual)) == "X^2*Y"
    with pytest.raises(DualProductOverlap):
        parse_poly("X*X", dual)
    with pytest.raises(DualProductOverlap):
        parse_poly("(X + Y)^2", dual)
    assert parse_poly("3*(X + Y)", dual) == parse_poly("3*X + 3*Y", dual)


def test_ring_mismatch(plane):
    "Arithmetic between different rings raises"
    other = ring("x z")
    with pytest.raises(RingMismatch):
        parse_poly("x", plane) + parse_poly("x", other)
    with pytest.raises(RingMismatch):
        parse_poly("y", plane).embed(other)


def test_embed_and_split(plane):
    "Embedding keeps the variables by name and coefficients split by powers"
    big = plane.adjoin("xi")
    polynomial = parse_poly("xi^2*x + xi*y^2 + x^3", big)
    assert parse_poly("x*y", plane).embed(big) == parse_poly("x*y", big)
    parts = polynomial.coefficients_in("xi")
    assert sorted(parts) == [0, 1, 2]
    assert parts[1] == parse_poly("y^2", big)
    assert polynomial.is_homogeneous()
    assert polynomial.degree == 3
    assert polynomial.support() == {"x", "y", "xi"}


def test_graded_pieces_and_normalized(plane):
    "Homogeneous components and leading coefficient one"
    polynomial = parse_poly("2*x^2 + 4*x*y + 6*y", plane)
    pieces = polynomial.graded_pieces()
    assert sorted(pieces) == [1, 2]
    assert pieces[2].normalized() == parse_poly("x^2 + 2*x*y", plane)
    assert polynomial.component(1) == parse_poly("6*y", plane)
    assert not polynomial.is_homogeneous()
    assert Polynomial.zero(plane).normalized() == 0


def test_division_by_constant(plane):
    "Division only by nonzero scalars"
    assert parse_poly("x", plane) / 2 == parse_poly("1/2*x", plane)
    with pytest.raises(ValueError):
        parse_poly("x", plane) / parse_poly("y", plane)


def test_contraction(plane):
    "Monomials lower exponents without factorials"
    form = parse_poly("X^2*Y^2 + X*Y^3", plane.mirror())
    result = contract(parse_poly("x*y", plane), form)
    assert result == parse_poly("X*Y + Y^2", plane.mirror())
    assert contract(parse_poly("x^3", plane), form) == 0
    with pytest.raises(RingMismatch):
        contract(form, form)


def test_contraction_positive_characteristic():
    "Contraction is the same in characteristic 2"
    binary = ring("x y", field=FieldSpec(2))
    form = parse_poly("X^2 + X*Y", binary.mirror())
    expected = parse_poly("X + Y", binary.mirror())
    assert contract(parse_poly("x", binary), form) == expected


@pytest.mark.parametrize("seed", range(5))
def test_contraction_is_an_action(seed):
    "Contracting by a product is contracting twice"
    random = random_generator(seed)
    space = ring("x y z")
    first = random_polynomial(space, 1, random)
    second = random_polynomial(space, 2, random)
    form = random_form(space, 5, random)
    assert contract(first * second, form) == contract(first, contract(second, form))
    assert contract(first + second, form) == contract(first, form) + contract(
        second, form
    )
