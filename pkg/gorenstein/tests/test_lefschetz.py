# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Test Jordan types and the Lefschetz properties
"""
import numpy as np
import pytest
import sympy

from .. import (
    BlowUpParameters,
    ConsistencyError,
    EnumerationTooLarge,
    FieldSpec,
    NotSquare,
    RingMismatch,
    annihilator,
    cohomological_blowup,
    dominates,
    enumerate_forms,
    generic_lefschetz,
    hilbert_combinatorics,
    jordan_from_ranks,
    jordan_type,
    lefschetz_status,
    matrix,
    multiplication_matrix,
    natural_map,
    nilpotent_jordan_type,
    orient,
    parse_poly,
    quotient,
    random_forms,
    symbolic_lefschetz_determinant,
)
from .utils import (
    ideal,
    random_form,
    random_generator,
    random_polynomial,
    random_restriction,
    ring,
    seeds,
)


def block_sizes(rows):
    """
    Jordan block sizes of a nilpotent matrix, computed by sympy
    """
    _, jordan = sympy.Matrix(rows).jordan_form()
    sizes, size = [], 1
    for i in range(jordan.rows - 1):
        if jordan[i, i + 1] == 1:
            size += 1
        else:
            sizes.append(size)
            size = 1
    sizes.append(size)
    return tuple(sorted(sizes, reverse=True))


def full_operator(algebra, form):
    """
    Multiplication by a linear form on the whole algebra as a sympy matrix
    """
    offsets = [int(value) for value in np.cumsum((0,) + tuple(algebra.hilbert))]
    operator = sympy.zeros(algebra.dimension, algebra.dimension)
    for degree in range(algebra.top_degree):
        block = multiplication_matrix(algebra, form, degree).to_Matrix()
        row, column = offsets[degree + 1], offsets[degree]
        operator[row : row + block.rows, column : column + block.cols] = block
    return operator


@pytest.fixture(name="complete")
def fixture_complete():
    """
    The monomial complete intersection F[x,y]/(x^3, y^3)
    """
    plane = ring("x y")
    return quotient(ideal(plane, "x^3", "y^3"))


@pytest.mark.parametrize(
    "hilbert, conjugate, sperner",
    [
        ((1, 2, 1), (3, 1), 2),
        ((1, 3, 5, 3, 1), (5, 3, 3, 1, 1), 5),
        ((1, 1, 1, 1), (4,), 1),
        ((), (), 0),
    ],
    ids=["short", "blowup", "line", "empty"],
)
def test_hilbert_combinatorics(hilbert, conjugate, sperner):
    "Conjugate partitions and Sperner numbers"
    combinatorics = hilbert_combinatorics(hilbert)
    assert combinatorics.conjugate == conjugate
    assert combinatorics.sperner == sperner


def test_hilbert_combinatorics_negative():
    "Negative values are not Hilbert functions"
    with pytest.raises(ValueError, match="nonnegative"):
        hilbert_combinatorics((1, -1))


@pytest.mark.parametrize(
    "ranks, jordan",
    [((4, 2, 0), (2, 2)), ((5, 3, 1, 0), (3, 2)), ((3,), (1, 1, 1)), ((0,), ())],
)
def test_jordan_from_ranks(ranks, jordan):
    "Block counts are differences of consecutive ranks"
    assert jordan_from_ranks(ranks) == jordan


def test_jordan_from_ranks_invalid():
    "Ranks must decrease by weakly decreasing amounts"
    with pytest.raises(ConsistencyError):
        jordan_from_ranks((3, 2, 0))


@pytest.mark.parametrize(
    "first, second, expected",
    [
        ((3, 1), (2, 2), True),
        ((2, 2), (3, 1), False),
        ((2, 1, 1), (2, 2), False),
        ((4,), (1, 1, 1, 1), True),
        ((2, 2), (2, 2), True),
    ],
)
def test_dominates(first, second, expected):
    "Dominance compares partial sums"
    assert dominates(first, second) == expected


@pytest.mark.parametrize("seed", range(5))
def test_nilpotent_jordan_type_against_sympy(seed):
    "Jordan types from ranks agree with the Jordan form computed by sympy"
    random = random_generator(seed)
    rows = np.triu(random.integers(-2, 3, size=(6, 6)), k=1)
    rows[:, random.integers(0, 6)] = 0
    rows = rows.tolist()
    assert nilpotent_jordan_type(matrix(rows)) == block_sizes(rows)


def test_nilpotent_jordan_type_invalid():
    "Square nilpotent matrices only"
    with pytest.raises(NotSquare):
        nilpotent_jordan_type(matrix([[0, 1, 0]]))
    with pytest.raises(ValueError, match="not nilpotent"):
        nilpotent_jordan_type(matrix([[1, 1], [0, 0]]))


def test_multiplication_matrix(complete):
    "Matrices of powers of a linear form between degrees"
    plane = complete.ring
    form = parse_poly("x + y", plane)
    assert multiplication_matrix(complete, form, 0, 4).to_Matrix() == sympy.Matrix(
        [[6]]
    )
    assert multiplication_matrix(complete, form, 1).shape == (3, 2)
    zero = multiplication_matrix(complete, parse_poly("0", plane), 2)
    assert zero.shape == (2, 3)
    with pytest.raises(ValueError, match="Invalid degrees"):
        multiplication_matrix(complete, form, 3, 2)
    with pytest.raises(ValueError, match="not a linear form"):
        multiplication_matrix(complete, parse_poly("x^2", plane), 0)
    with pytest.raises(RingMismatch):
        multiplication_matrix(complete, parse_poly("x", ring("x")), 0)


@pytest.mark.parametrize("seed", range(3))
def test_jordan_type_against_sympy(seed):
    "Jordan types of random forms on random Gorenstein algebras"
    random = random_generator(seed)
    space = ring("x y z")
    algebra = quotient(annihilator(random_form(space, 3, random)))
    form = parse_poly("x", space)
    for name, value in zip(("y", "z"), random.integers(-3, 4, size=2)):
        form = form + parse_poly("{}*{}".format(int(value), name), space)
    assert jordan_type(algebra, form) == block_sizes(full_operator(algebra, form))


def test_lefschetz_status(complete):
    "A variable is a weak but not a strong Lefschetz element"
    plane = complete.ring
    verdict = lefschetz_status(complete, parse_poly("x", plane))
    assert verdict.jordan == (3, 3, 3)
    assert verdict.wlp
    assert not verdict.slp
    assert verdict.failing_map == (1, 2)
    strong = lefschetz_status(complete, parse_poly("x + y", plane))
    assert strong.slp
    assert strong.jordan == (5, 3, 1)
    assert strong.failing_map is None


def test_lefschetz_status_weighted():
    "The Jordan type comparison is skipped for non-standard gradings"
    weighted = ring("x u", weights=(1, 2))
    algebra = quotient(ideal(weighted, "x^2", "u^2"))
    with pytest.warns(UserWarning, match="non-standard grading"):
        verdict = lefschetz_status(algebra, parse_poly("x", weighted))
    assert not verdict.wlp
    assert verdict.jordan == (2, 2)


def test_random_forms():
    "Random forms are reproducible and bounded"
    space = ring("x y z")
    forms = random_forms(space, trials=4, bound=3, seed=7)
    assert len(forms) == 4
    assert forms == random_forms(space, trials=4, bound=3, seed=7)
    assert forms[:2] == random_forms(space, trials=2, bound=3, seed=7)
    for form in forms:
        assert form.degree in (-1, 1)
        for value in form.terms.values():
            assert abs(value) <= 3


@pytest.mark.parametrize(
    "kwargs, message",
    [({"trials": 0}, "trials"), ({"bound": 0}, "bound")],
    ids=["trials", "bound"],
)
def test_random_forms_invalid(kwargs, message):
    "Invalid numbers of trials and bounds"
    with pytest.raises(ValueError, match=message):
        random_forms(ring("x y"), **kwargs)


def test_random_forms_need_linear_variables():
    "Rings without variables of degree 1 have no linear forms"
    with pytest.raises(ValueError, match="no variables of degree 1"):
        random_forms(ring("u", weights=(2,)))


def test_enumerate_forms():
    "Forms over GF(3) up to scalar start with coefficient one"
    binary = ring("x y", field=FieldSpec(3))
    forms = [str(form) for form in enumerate_forms(binary)]
    assert forms == ["x", "x + y", "x + 2*y", "y"]
    with pytest.raises(EnumerationTooLarge):
        list(enumerate_forms(binary, cap=3))
    with pytest.raises(ValueError, match="finite field"):
        list(enumerate_forms(ring("x y")))


def test_generic_lefschetz_random(complete):
    "A random form is a strong Lefschetz element in characteristic zero"
    verdict = generic_lefschetz(complete, seed=3)
    assert verdict.slp
    assert verdict.wlp
    assert verdict.maximal_types == ((5, 3, 1),)


def test_generic_lefschetz_exhaustive():
    "The cube of every linear form vanishes in characteristic 3"
    space = ring("x y", field=FieldSpec(3))
    algebra = quotient(ideal(space, "x^3", "y^3"))
    verdict = generic_lefschetz(algebra, strategy="exhaustive")
    assert verdict.searched == 4
    assert not verdict.slp
    assert verdict.wlp
    with pytest.raises(ValueError, match="Invalid strategy"):
        generic_lefschetz(algebra, strategy="greedy")


def test_symbolic_determinant():
    "The determinant of a diagonal multiplication map"
    plane = ring("x y")
    algebra = quotient(ideal(plane, "x*y", "x^3 - y^3"))
    assert algebra.hilbert == (1, 2, 2, 1)
    determinant = symbolic_lefschetz_determinant(algebra, 1)
    assert determinant.normalized() == parse_poly("a*b", determinant.ring)
    named = symbolic_lefschetz_determinant(algebra, 1, parameter_names=("s", "t"))
    assert named.normalized() == parse_poly("s*t", named.ring)
    with pytest.raises(ValueError, match="parameter names"):
        symbolic_lefschetz_determinant(algebra, 1, parameter_names=("a",))


def test_symbolic_determinant_invalid(complete):
    "Only square maps between valid degrees"
    with pytest.raises(NotSquare):
        symbolic_lefschetz_determinant(complete, 1)
    with pytest.raises(ValueError, match="Invalid degree"):
        symbolic_lefschetz_determinant(complete, 4)


@pytest.mark.parametrize("seed", seeds(30))
def test_blowup_keeps_strong_lefschetz(seed):
    "Blow-ups of plane algebras along plane algebras have Lefschetz elements"
    random = random_generator(seed)
    plane = ring("x y")
    degree = int(random.integers(3, 6))
    codegree = int(random.integers(2, degree))
    form, _, target = random_restriction(plane, degree, codegree, random)
    source = orient(quotient(annihilator(form)), dual_generator=form)
    restricted = orient(quotient(annihilator(target)), dual_generator=target)
    for algebra in (source.algebra, restricted.algebra):
        assert generic_lefschetz(algebra, seed=seed).slp
    parameters = BlowUpParameters(
        coefficients=tuple(
            random_polynomial(plane, i, random) for i in range(1, codegree)
        ),
        lam=int(random.choice([-2, -1, 1, 2])),
    )
    result = cohomological_blowup(natural_map(source, restricted), parameters)
    verdict = generic_lefschetz(result.tilde_A.algebra, seed=seed)
    assert verdict.slp
    assert verdict.wlp
    assert verdict.jordan == hilbert_combinatorics(result.tilde_A.hilbert).conjugate
