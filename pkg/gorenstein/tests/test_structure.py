# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Test connected sums, minimal generators, compressed algebras, the quadratic
embedding and toric presentations
"""
from itertools import combinations

import pytest

from .. import (
    NO_OBSTRUCTION,
    NOT_BLOWUP,
    BlowUpParameters,
    ConditionFailed,
    ConsistencyError,
    InvalidFan,
    NotFactored,
    NotGorenstein,
    NotRegularSequence,
    Polynomial,
    RingMismatch,
    ToricFan,
    annihilator,
    blowup_ring,
    bug_obstruction,
    ci_classification,
    cohomological_blowup,
    colon,
    connected_sum,
    exact_zero_divisor_partner,
    is_compressed,
    make_map,
    maximal_hilbert,
    mingen_coordinates,
    mingen_homology,
    minimal_nonfaces,
    natural_map,
    orient,
    parse_factored,
    parse_poly,
    quotient,
    toric_presentation,
    verify_blowdown_as_connected_sum,
    verify_blowup_as_connected_sum,
    watanabe_embed,
)
from .._structure import generators
from .utils import (
    dual,
    ideal,
    random_generator,
    random_polynomial,
    random_restriction,
    ring,
    seeds,
)


@pytest.fixture(name="plane")
def fixture_plane():
    """
    Standard graded ring in two variables
    """
    return ring("x y")


@pytest.fixture(name="projective_plane")
def fixture_projective_plane():
    """
    Fan of the projective plane
    """
    return ToricFan(((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2)))


@pytest.mark.parametrize(
    "embedding_dimension, socle_degree, expected",
    [
        (2, 4, (1, 2, 3, 2, 1)),
        (3, 5, (1, 3, 6, 6, 3, 1)),
        (3, 6, (1, 3, 6, 10, 6, 3, 1)),
        (4, 2, (1, 4, 1)),
        (5, 0, (1,)),
    ],
)
def test_maximal_hilbert(embedding_dimension, socle_degree, expected):
    "Symmetric minimum of the dimensions of the polynomial ring"
    assert maximal_hilbert(embedding_dimension, socle_degree) == expected


def test_compressed(plane):
    "Monomial complete intersections with and without maximal Hilbert function"
    assert is_compressed(quotient(ideal(plane, "x^3", "y^3")))
    assert not is_compressed(quotient(ideal(plane, "x^2", "y^4")))
    assert bug_obstruction(quotient(ideal(plane, "x^3", "y^3"))) == NO_OBSTRUCTION


def test_compressed_quartic_is_not_a_blowup():
    "Compressed algebras of socle degree 4 in three variables are obstructed"
    space = ring("x y z")
    form = dual("X^4 + Y^4 + Z^4 + X^2*Y*Z + X*Y^2*Z + X*Y*Z^2", space)
    algebra = quotient(annihilator(form))
    assert algebra.hilbert == (1, 3, 6, 3, 1)
    assert is_compressed(algebra)
    assert bug_obstruction(algebra) == NOT_BLOWUP


def test_compressed_invalid(plane):
    "Weighted gradings and non-Gorenstein quotients raise"
    weighted = ring("x u", weights=(1, 2))
    with pytest.raises(ValueError, match="standard gradings"):
        is_compressed(quotient(ideal(weighted, "x^2", "u^2")))
    with pytest.raises(NotGorenstein):
        bug_obstruction(quotient(ideal(plane, "x^2", "x*y", "y^2")))


def test_connected_sum_of_lines(plane):
    "Two conics glued over a point"
    sigma = parse_poly("x^2 + y^2", plane)
    data = connected_sum(dual("X^2", plane), dual("Y^2", plane), sigma)
    assert data.connected_sum.hilbert == (1, 2, 1)
    assert data.fibered_product.hilbert == (1, 2, 2)
    assert data.hilbert_identities() == ((1, 2, 2), (1, 2, 1))
    assert data.total_thom == (parse_poly("x^2", plane), parse_poly("y^2", plane))
    assert data.common_quotient.hilbert == (1,)


def test_connected_sum_first_condition(plane):
    "Sigma must contract both forms onto the same nonzero form"
    with pytest.raises(ConditionFailed, match=r"\(1\)") as error:
        connected_sum(dual("X^2", plane), dual("Y^2", plane), parse_poly("x^2", plane))
    assert error.value.condition == 1
    assert error.value.degree is None


def test_connected_sum_second_condition():
    "The annihilators must add up to the annihilator of the common quotient"
    space = ring("x y z")
    with pytest.raises(ConditionFailed) as error:
        connected_sum(
            dual("X^2*Y^2", space),
            dual("X^2*Y^2 + Z^4", space),
            parse_poly("x*y", space),
        )
    assert error.value.condition == 2
    assert error.value.degree == 2


def test_connected_sum_invalid(plane):
    "Forms must be independent of one degree and sigma primal"
    sigma = parse_poly("x^2 + y^2", plane)
    with pytest.raises(ValueError, match="linearly dependent"):
        connected_sum(dual("X^2", plane), dual("2*X^2", plane), sigma)
    with pytest.raises(ValueError, match="different degrees"):
        connected_sum(dual("X^2", plane), dual("Y^3", plane), sigma)
    with pytest.raises(RingMismatch):
        connected_sum(dual("X^2", plane), dual("Y^2", plane), dual("X", plane))


def test_blowup_as_connected_sum(plane):
    "A dual blow-up splits off the exceptional summand"
    big = blowup_ring(plane)
    arguments = (dual("X^2*Y^2", plane), dual("X*Y", plane), parse_poly("x*y", plane))
    report = verify_blowup_as_connected_sum(
        *arguments, parse_poly("xi^2 - x*y", big), -1
    )
    assert report.passed
    assert report.exceptional_thom is not None
    assert report.data.connected_sum.hilbert == (1, 3, 5, 3, 1)
    with pytest.raises(ValueError, match="does not define a blow-up"):
        verify_blowup_as_connected_sum(*arguments, parse_poly("xi^2", big), 1)


def test_blowdown_as_connected_sum():
    "Blowing up a point of a truncated line"
    space = ring("x")
    source = orient(quotient(ideal(space, "x^3")))
    point = orient(quotient(ideal(space, "x")))
    zero = Polynomial.zero(space)
    result = cohomological_blowup(
        make_map(source, point, [zero]), BlowUpParameters(coefficients=(zero,))
    )
    big = result.tilde_A.ring
    assert result.tilde_A.dual_generator == dual("X^2 - Xi^2", big)
    report = verify_blowdown_as_connected_sum(result)
    assert report.passed
    assert report.data.connected_sum.ideal.equals(ideal(big, "x^3", "xi"))


def test_mingen_coordinates(plane):
    "Coordinates of an element modulo the maximal ideal times the ideal"
    complete = ideal(plane, "x^2", "y^2")
    element = parse_poly("2*x^2 - y^2", plane)
    coordinates = mingen_coordinates(complete, element)
    generators = complete.minimal_generators()
    rebuilt = Polynomial.zero(plane)
    for position, value in coordinates.items():
        rebuilt = rebuilt + generators[position].scale(value)
    assert rebuilt == element
    assert mingen_coordinates(complete, parse_poly("x^3 + x*y^2", plane)) == {}
    assert mingen_coordinates(complete, Polynomial.zero(plane)) == {}
    with pytest.raises(ConsistencyError, match="not in the ideal"):
        mingen_coordinates(complete, parse_poly("x*y", plane))


def test_mingen_homology_nonzero(plane):
    "Both homology spaces are two dimensional along (x^3, y^3) -> (x^2, y^2)"
    big = blowup_ring(plane)
    complete = ideal(plane, "x^3", "y^3")
    polynomial = parse_poly("xi^2 - x*y", big)
    report = mingen_homology(complete, parse_poly("x*y", plane), polynomial)
    assert (report.mu_I, report.mu_colon, report.mu_tilde) == (2, 2, 5)
    assert (report.dim_H, report.dim_H_prime) == (2, 2)
    assert report.U == ()
    assert report.W == ()
    classification = ci_classification(complete, parse_poly("x*y", plane), polynomial)
    assert classification.a_is_ci
    assert classification.t_is_ci
    assert not classification.tau_exact_zd
    assert not classification.blowup_is_ci
    assert classification.mu == (2, 2, 5)


def test_mingen_homology_needs_blowup(plane):
    "The constant coefficient must be a nonzero multiple of tau"
    big = blowup_ring(plane)
    complete = ideal(plane, "x^3", "y^3")
    with pytest.raises(ValueError, match="nonzero multiple"):
        mingen_homology(complete, parse_poly("x*y", plane), parse_poly("xi^2", big))


@pytest.mark.parametrize(
    "element, partner",
    [("y^2", "y"), ("x", "x^2"), ("x^2", "x"), ("x*y", None)],
    ids=["square", "linear", "linear-square", "not-exact"],
)
def test_exact_zero_divisor_partner(plane, element, partner):
    "Exact pairs in F[x,y]/(x^3, y^3)"
    algebra = quotient(ideal(plane, "x^3", "y^3"))
    found = exact_zero_divisor_partner(algebra, parse_poly(element, plane))
    if partner is None:
        assert found is None
    else:
        assert found.normalized() == parse_poly(partner, plane)


def test_exact_zero_divisor_invalid(plane):
    "Elements of the ideal and constants are rejected"
    algebra = quotient(ideal(plane, "x^3", "y^3"))
    with pytest.raises(ValueError, match="positive degree"):
        exact_zero_divisor_partner(algebra, parse_poly("x^3", plane))
    with pytest.raises(ValueError, match="positive degree"):
        exact_zero_divisor_partner(algebra, parse_poly("1", plane))


def test_exact_zero_divisor_not_principal():
    "The colon by z^2 - xy also contains x^3 and y^3, so there is no partner"
    space = ring("x y z")
    relations = ideal(space, "x^4", "y^4", "z*x^2", "z*y^2", "z^4 - x^2*y^2")
    element = parse_poly("z^2 - x*y", space)
    assert colon(relations, element).equals(
        ideal(space, "z^2 + x*y", "x^3", "y^3", "x^2*z", "y^2*z")
    )
    assert exact_zero_divisor_partner(quotient(relations), element) is None


def test_exact_zero_divisor_partner_inconsistent(plane, monkeypatch):
    "A partner whose own annihilator is wrong is reported as such"
    algebra = quotient(ideal(plane, "x^3", "y^3"))
    calls = []

    def skewed(relations, element):
        calls.append(element)
        if len(calls) == 2:
            return colon(relations, parse_poly("x", plane))
        return colon(relations, element)

    monkeypatch.setattr(generators, "colon", skewed)
    with pytest.raises(ConsistencyError, match="annihilator of the partner 'y'"):
        exact_zero_divisor_partner(algebra, parse_poly("y^2", plane))


def test_watanabe_single_step(plane):
    "A cubic and a quadric become three quadrics"
    factored = [parse_factored("x*x*x", plane), parse_factored("y*y", plane)]
    report = watanabe_embed(factored)
    assert report.degrees == (3, 2)
    assert report.defect == 1
    assert report.final_defect == 0
    (step,) = report.steps
    assert step.variable == "xi"
    assert step.thom == parse_poly("x^2", plane)
    assert step.cofactor == parse_poly("x", plane)
    assert step.degrees == (2, 2, 2)
    big = blowup_ring(plane)
    assert report.algebra.ideal.equals(ideal(big, "y^2", "xi*x", "xi^2 - x^2"))
    assert report.algebra.hilbert == (1, 3, 3, 1)
    assert report.socle_image


def test_watanabe_two_steps():
    "A quartic in one variable needs two new variables"
    line = ring("x")
    report = watanabe_embed([parse_factored("x*x*x*x", line)])
    assert [step.variable for step in report.steps] == ["xi", "eta"]
    assert [step.defect for step in report.steps] == [1, 0]
    assert report.algebra.hilbert == (1, 3, 3, 1)
    assert report.embedding.image_dimension(3) == 1


def test_watanabe_invalid(plane):
    "Factors of degree 3, dependent generators and linear generators raise"
    with pytest.raises(NotFactored):
        watanabe_embed([[parse_poly("x^3", plane)], parse_factored("y*y", plane)])
    with pytest.raises(NotRegularSequence, match="regular sequence"):
        watanabe_embed([parse_factored("x*x", plane), parse_factored("x*y", plane)])
    with pytest.raises(NotRegularSequence, match="eliminated"):
        watanabe_embed([[parse_poly("x", plane)], parse_factored("y*y", plane)])
    with pytest.raises(ValueError, match="at least one factor"):
        watanabe_embed([])


def test_toric_projective_plane(projective_plane):
    "The cohomology of the projective plane is a truncated line"
    assert projective_plane.validated
    assert minimal_nonfaces(projective_plane) == [(0, 1, 2)]
    presentation = toric_presentation(projective_plane)
    assert presentation.hilbert == (1, 1, 1)
    assert str(presentation.reduced_ideal) == "(x1^3)"
    assert presentation.ideal.mu == 3


def test_toric_blown_up_plane():
    "Adding the ray (1, 1) blows up a torus fixed point"
    fan = ToricFan(
        ((1, 0), (1, 1), (0, 1), (-1, -1)), ((0, 1), (1, 2), (2, 3), (0, 3))
    )
    assert minimal_nonfaces(fan) == [(0, 2), (1, 3)]
    presentation = toric_presentation(fan, names=("a", "e", "b", "c"))
    assert presentation.hilbert == (1, 2, 1)
    assert presentation.reduced_ring.names == ("a", "e")
    with pytest.raises(ValueError, match="variable names"):
        toric_presentation(fan, names=("a", "b"))


@pytest.mark.parametrize(
    "rays, cones, message",
    [
        (((1, 0), (0, 1)), ((0, 1),), "at least 3 rays"),
        (((2, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2)), "primitive"),
        (((1, 0), (0, 1), (1, 0)), ((0, 1), (1, 2)), "Repeated"),
        (((1, 0), (0, 1), (-1, 0)), ((0, 1), (1, 2), (0, 2)), "strictly convex"),
        (((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2)), "maximal cones"),
        (((1, 0), (0, 1), (-1, -1)), ((0, 1, 2),), "Invalid cone"),
        (((1.0, 0.0), (0.0, 1.0), (-1.0, -1.0)), ((0, 1),), "integer"),
    ],
    ids=["few", "primitive", "repeated", "convex", "cones", "cone", "float"],
)
def test_invalid_fans(rays, cones, message):
    "Fans in the plane are checked to be complete and simplicial"
    with pytest.raises(InvalidFan, match=message):
        ToricFan(rays, cones)


def test_fan_in_space_warns():
    "Fans of dimension 3 are accepted without validation"
    rays = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))
    with pytest.warns(UserWarning, match="not checked"):
        fan = ToricFan(rays, tuple(combinations(range(4), 3)))
    assert not fan.validated
    assert toric_presentation(fan).hilbert == (1, 1, 1, 1)


def _random_blowup_data(seed):
    "Random dual form, Thom class, target form and blow-up polynomial"
    random = random_generator(seed)
    space = ring("x y z") if seed % 2 else ring("x y")
    big = blowup_ring(space)
    degree = int(random.integers(3, 6))
    codegree = int(random.integers(2, degree))
    form, thom, target = random_restriction(space, degree, codegree, random)
    lam = int(random.choice([-3, -2, -1, 1, 2, 3]))
    xi = Polynomial.variable(big, "xi")
    coefficients = tuple(
        random_polynomial(space, i, random) for i in range(1, codegree)
    )
    polynomial = xi**codegree + thom.scale(lam).embed(big)
    for i, coefficient in enumerate(coefficients, start=1):
        polynomial = polynomial + xi ** (codegree - i) * coefficient.embed(big)
    return form, thom, target, polynomial, lam, coefficients


@pytest.mark.parametrize("seed", seeds(50))
def test_random_connected_sums(seed):
    "Random blow-ups and their blow-downs are connected sums"
    form, thom, target, polynomial, lam, coefficients = _random_blowup_data(seed)
    report = verify_blowup_as_connected_sum(form, target, thom, polynomial, lam)
    assert report.passed
    source = orient(quotient(annihilator(form)), dual_generator=form)
    restricted = orient(quotient(annihilator(target)), dual_generator=target)
    result = cohomological_blowup(
        natural_map(source, restricted),
        BlowUpParameters(coefficients=coefficients, lam=lam),
    )
    assert verify_blowdown_as_connected_sum(result).passed


@pytest.mark.parametrize("seed", seeds(100))
def test_random_generator_counts(seed):
    "Minimal generators of random blow-up ideals follow the homology"
    form, thom, _, polynomial, _, _ = _random_blowup_data(seed)
    relations = annihilator(form)
    report = mingen_homology(relations, thom, polynomial)
    assert report.mu_tilde == report.mu_I + report.dim_H_prime + 1
    assert report.mu_tilde == report.mu_colon + report.dim_H + 1
    classification = ci_classification(relations, thom, polynomial)
    assert classification.mu == (report.mu_I, report.mu_colon, report.mu_tilde)
    assert classification.blowup_is_ci == (
        classification.a_is_ci and classification.tau_exact_zd
    )
    if relations.ring.nvars == 2:
        assert classification.a_is_ci


@pytest.mark.parametrize("seed", seeds(20))
def test_random_watanabe_embeddings(seed):
    "Powers of independent linear forms embed into quadratic complete intersections"
    random = random_generator(seed)
    space = ring("x y z") if seed % 2 else ring("x y")
    linear = []
    for position, name in enumerate(space.names):
        form = Polynomial.variable(space, name)
        for other in space.names[position + 1 :]:
            scalar = int(random.integers(-3, 4))
            form = form + Polynomial.variable(space, other).scale(scalar)
        linear.append(form)
    largest = 4 if space.nvars == 3 else 5
    factored = []
    for form in linear:
        factors = [form] * int(random.integers(2, largest))
        if random.random() < 0.5:
            factors = [form * form] + factors[2:]
        factored.append(factors)
    report = watanabe_embed(factored)
    assert report.final_defect == 0
    assert len(report.steps) == report.defect
    assert report.algebra.top_degree == report.source.top_degree
    assert report.algebra.is_gorenstein()
    assert report.socle_image
    if report.steps:
        assert set(report.steps[-1].degrees) == {2}
