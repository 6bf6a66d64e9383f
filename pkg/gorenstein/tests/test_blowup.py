# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Test blow-ups by quotients, by dual generators and by ideals
"""
import pytest

from .. import (
    BlowUpParameters,
    DegenerateColon,
    NotGorenstein,
    NotMonic,
    NotSurjective,
    Polynomial,
    RingMismatch,
    ThomMismatch,
    WrongDegree,
    annihilator,
    blowup_dual,
    blowup_ideal,
    blowup_polynomial,
    blowup_ring,
    bumd_status,
    cohomological_blowup,
    colon,
    construct_hat,
    contract,
    dual_pair_from_cofactor,
    exceptional_divisor,
    exceptional_form,
    family_fiber,
    g_dual_polynomial,
    gorenstein_criterion,
    hat_ideal,
    hilbert_combination,
    lambda_family_fiber,
    make_map,
    monic_polynomial,
    natural_map,
    orient,
    parse_poly,
    quotient,
    rescale_blowup_variable,
    split_monic,
    truncated_extension,
    verify_blowup_axioms,
)
from .._blowup import construction
from .utils import (
    dual,
    ideal,
    random_form,
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


@pytest.fixture(name="big")
def fixture_big(plane):
    """
    The plane with the blow-up variable adjoined
    """
    return blowup_ring(plane)


@pytest.fixture(name="projection")
def fixture_projection(plane):
    """
    Projection of F[x,y]/(x^3, y^3) onto F[x,y]/(x^2, y), of degree n = 3
    """
    source = orient(quotient(ideal(plane, "x^3", "y^3")))
    target = orient(quotient(ideal(plane, "x^2", "y")))
    return make_map(source, target, [parse_poly("x", plane), parse_poly("0", plane)])


@pytest.fixture(name="line")
def fixture_line():
    """
    Projection of F[x]/(x^3) onto the field, of degree n = 2
    """
    space = ring("x")
    source = orient(quotient(ideal(space, "x^3")))
    target = orient(quotient(ideal(space, "x")))
    return make_map(source, target, [Polynomial.zero(space)])


def test_split_monic(plane, big):
    "Coefficients are listed from the highest power down"
    polynomial = parse_poly("xi^3 + x*xi^2 + x*y^2", big)
    variable, degree, coefficients = split_monic(polynomial, plane)
    assert variable == "xi"
    assert degree == 3
    assert coefficients == [
        parse_poly("x", plane),
        Polynomial.zero(plane),
        parse_poly("x*y^2", plane),
    ]
    assert monic_polynomial(plane, coefficients) == polynomial


def test_split_monic_invalid(plane, big):
    "Non-monic, inhomogeneous and misplaced polynomials raise"
    with pytest.raises(NotMonic):
        split_monic(parse_poly("2*xi^2 + x^2", big), plane)
    with pytest.raises(ValueError, match="not homogeneous"):
        split_monic(parse_poly("xi^2 + x", big), plane)
    with pytest.raises(RingMismatch):
        split_monic(parse_poly("x^2", plane), plane)
    heavy = plane.adjoin("xi", 2)
    with pytest.raises(ValueError, match="weight 1"):
        split_monic(parse_poly("xi + x^2", heavy), plane)
    with pytest.raises(WrongDegree):
        monic_polynomial(plane, [parse_poly("x^2", plane)])


def test_hat_ideal(projection, big):
    "The quotient presentation adds xi times the kernel and the polynomial"
    polynomial = parse_poly("xi^3 + x*y^2", big)
    expected = ideal(big, "x^3", "y^3", "xi*x^2", "xi*y", "xi^3 + x*y^2")
    assert hat_ideal(projection, polynomial).equals(expected)
    hat = construct_hat(projection, polynomial)
    assert hat.algebra.ideal.equals(expected)
    assert hat.exceptional.hilbert == (1, 2, 2, 1)
    assert hat.degree == 3
    with pytest.raises(WrongDegree, match="d - k"):
        construct_hat(projection, parse_poly("xi^2 + x^2", big))


@pytest.mark.parametrize(
    "text, injective, gorenstein, lam",
    [
        ("xi^3 + 2*x*y^2", True, True, 2),
        ("xi^3 + y*xi^2 + x*y*xi", True, False, 0),
        ("xi^3 + x^2*y", False, False, None),
    ],
    ids=["gorenstein", "boundary", "not-injective"],
)
def test_gorenstein_criterion(projection, big, text, injective, gorenstein, lam):
    "The constant coefficient decides injectivity and the socle"
    report = gorenstein_criterion(projection, parse_poly(text, big))
    assert report.beta_injective == injective
    assert report.gorenstein == gorenstein
    if lam is None:
        assert report.lam is None
    else:
        assert report.lam == big.field(lam)


def test_default_blowup(projection, plane, big):
    "Zero coefficients and lambda one"
    result = cohomological_blowup(projection)
    assert result.degree == 3
    assert result.lam == big.field.one
    assert result.thom == parse_poly("x*y^2", plane)
    assert result.polynomial == parse_poly("xi^3 + x*y^2", big)
    assert result.tilde_A.hilbert == (1, 3, 5, 3, 1)
    assert result.tilde_T.hilbert == (1, 2, 2, 1)
    assert result.tilde_thom == result.tilde_A.normal_form(parse_poly("-xi", big))
    assert result.tilde_A.integral(result.beta.apply(parse_poly("x^2*y^2", plane)))
    assert result.tilde_T.socle_generator == parse_poly("xi^2*x", big)


def test_blowup_thom_class_scales(line):
    "The exceptional Thom class is minus xi over lambda"
    result = cohomological_blowup(
        line, BlowUpParameters(coefficients=(Polynomial.zero(ring("x")),), lam=4)
    )
    big = result.tilde_A.ring
    assert result.tilde_A.ideal.equals(ideal(big, "x*xi", "xi^2 + 4*x^2"))
    assert result.tilde_thom == parse_poly("-1/4*xi", big)


def test_blowup_parameters_invalid(projection, plane):
    "Wrong coefficient counts and a zero scalar are rejected"
    with pytest.raises(ValueError, match="Expected n - 1 = 2"):
        blowup_polynomial(projection, BlowUpParameters())
    zero = Polynomial.zero(plane)
    with pytest.raises(ValueError, match="nonzero"):
        blowup_polynomial(
            projection, BlowUpParameters(coefficients=(zero, zero), lam=0)
        )


def test_blowup_needs_positive_degree(plane):
    "The identity map has d - k = 0"
    algebra = orient(quotient(ideal(plane, "x^2", "y^2")))
    with pytest.raises(WrongDegree, match="d - k >= 1"):
        cohomological_blowup(natural_map(algebra, algebra))


def test_blowup_needs_surjection():
    "A map missing the target socle cannot be blown up"
    space, plane = ring("x"), ring("y z")
    source = orient(quotient(ideal(space, "x^3")))
    target = orient(quotient(ideal(plane, "y^2", "z^2")))
    algebra_map = make_map(source, target, [parse_poly("y", plane)])
    with pytest.raises(NotSurjective):
        cohomological_blowup(algebra_map)


def test_blowup_axioms(projection, plane):
    "The maps of a blow-up satisfy the characterization"
    parameters = BlowUpParameters(
        coefficients=(parse_poly("y", plane), Polynomial.zero(plane)), lam=3
    )
    result = cohomological_blowup(projection, parameters)
    report = verify_blowup_axioms(
        result.algebra_map, result.pi_hat, result.beta, result.beta0
    )
    assert report.commuting
    assert report.euler_generates
    assert report.exact_sequence
    assert report.passed
    assert len(report.relation) == 3


@pytest.mark.parametrize("seed", seeds(100))
def test_random_blowups(seed):
    "Blow-ups along random restrictions satisfy the Hilbert function identity"
    random = random_generator(seed)
    space = ring("x y z")
    form = random_form(space, 4, random)
    tau = random_polynomial(space, int(random.integers(1, 3)), random)
    target_form = contract(tau, form)
    source = orient(quotient(annihilator(form)), dual_generator=form)
    target = orient(quotient(annihilator(target_form)), dual_generator=target_form)
    result = cohomological_blowup(natural_map(source, target))
    shifted = [(1, target.hilbert, i) for i in range(1, tau.degree)]
    assert result.tilde_A.hilbert == hilbert_combination(
        (1, source.hilbert, 0), *shifted
    )
    assert result.tilde_thom == result.tilde_A.normal_form(
        parse_poly("-xi", result.tilde_A.ring)
    )
    report = verify_blowup_axioms(
        result.algebra_map, result.pi_hat, result.beta, result.beta0
    )
    assert report.passed


def test_blowup_axioms_fail_for_the_wrong_divisor(projection):
    "Mapping onto a smaller divisor breaks the characterization"
    result = cohomological_blowup(projection)
    wrong = truncated_extension(projection.target, 2)
    pi_hat = make_map(result.tilde_A, wrong, result.pi_hat.images)
    beta0 = make_map(projection.target, wrong, result.beta0.images)
    report = verify_blowup_axioms(projection, pi_hat, result.beta, beta0)
    assert not report.passed


def test_blowup_axioms_without_an_euler_relation(projection, monkeypatch):
    "An unsolvable relation for the Euler class fails without an error"
    result = cohomological_blowup(projection)
    monkeypatch.setattr(construction, "mat_solve", lambda matrix, rhs: None)
    report = verify_blowup_axioms(
        result.algebra_map, result.pi_hat, result.beta, result.beta0
    )
    assert report.commuting
    assert not report.euler_generates
    assert report.relation is None
    assert not report.passed


def test_exceptional_divisor(plane, big):
    "Free extensions of the target and their orientation"
    target = orient(quotient(ideal(plane, "x^2", "y")))
    extension = truncated_extension(target, 3)
    assert extension.hilbert == (1, 2, 2, 1)
    assert extension.socle_generator == parse_poly("xi^2*x", big)
    divisor = exceptional_divisor(target.algebra, parse_poly("xi^2 + x*xi", big))
    assert divisor.hilbert == (1, 2, 1)
    with pytest.raises(WrongDegree):
        exceptional_divisor(target, parse_poly("1", big))


def test_family_fiber(projection, plane, big):
    "The special fiber keeps the Hilbert function and loses the socle"
    parameters = BlowUpParameters(
        coefficients=(parse_poly("x", plane), Polynomial.zero(plane)), lam=1
    )
    special = family_fiber(projection, parameters, 0)
    assert special.polynomial == parse_poly("xi^3", big)
    assert special.algebra.hilbert == (1, 3, 5, 3, 1)
    assert not special.is_gorenstein
    general = family_fiber(projection, parameters, 2)
    assert general.polynomial == parse_poly("xi^3 + 2*x*xi^2 + 8*x*y^2", big)
    assert general.is_gorenstein


@pytest.mark.parametrize("lam, gorenstein", [(0, False), (5, True), ("-1/2", True)])
def test_lambda_family_fiber(line, lam, gorenstein):
    "Only the fiber at zero fails to be Gorenstein"
    zero = Polynomial.zero(ring("x"))
    fiber = lambda_family_fiber(line, [zero], lam)
    assert fiber.algebra.hilbert == (1, 2, 1)
    assert fiber.is_gorenstein == gorenstein


def test_rescale_blowup_variable(line):
    "Substituting xi by xi/3 multiplies lambda by 9"
    zero = Polynomial.zero(ring("x"))
    result = cohomological_blowup(line, BlowUpParameters(coefficients=(zero,)))
    rescaled = rescale_blowup_variable(result, 3)
    assert rescaled.equals(ideal(result.tilde_A.ring, "x*xi", "xi^2 + 9*x^2"))
    with pytest.raises(ValueError, match="nonzero"):
        rescale_blowup_variable(result, 0)


def test_blowup_ideal_colon(plane, big):
    "The colon by xi of a blow-up ideal"
    complete = ideal(plane, "x^3", "y^3")
    blown = blowup_ideal(
        complete, parse_poly("y^2", plane), parse_poly("xi^2 - y^2", big)
    )
    assert blown.equals(ideal(big, "x^3", "xi*y", "xi^2 - y^2"))
    xi = parse_poly("xi", big)
    assert colon(blown, xi).equals(ideal(big, "x^3", "y", "xi^2 - y^2"))


def test_blowup_ideal_invalid(plane, big):
    "Degenerate colons and non-Gorenstein ideals raise"
    complete = ideal(plane, "x^3", "y^3")
    polynomial = parse_poly("xi^2 - y^2", big)
    with pytest.raises(DegenerateColon, match="whole ring"):
        blowup_ideal(complete, parse_poly("x^3", plane), polynomial)
    with pytest.raises(DegenerateColon, match="itself"):
        blowup_ideal(complete, parse_poly("1", plane), polynomial)
    with pytest.raises(NotGorenstein):
        blowup_ideal(
            ideal(plane, "x^2", "x*y", "y^2"), parse_poly("x", plane), polynomial
        )


def test_g_dual_polynomial(plane, big):
    "The dual of xi^3 - y*xi^2 with respect to Y"
    pair = g_dual_polynomial(parse_poly("xi^3 - xi^2*y", big), dual("Y", plane))
    assert pair.h == parse_poly("xi + y", big)
    assert pair.unit == parse_poly("1 - y", plane)
    assert pair.inverse == parse_poly("1 + y", plane)
    other = dual_pair_from_cofactor(pair.h, dual("Y", plane), degree=3)
    assert other.f == parse_poly("xi^3 - xi^2*y", big)


def test_dual_polynomial_invalid(plane, big):
    "Forms must be nonzero dual forms and cofactors of degree deg G"
    with pytest.raises(RingMismatch):
        g_dual_polynomial(parse_poly("xi^2", big), parse_poly("y", plane))
    with pytest.raises(ValueError, match="nonzero and homogeneous"):
        g_dual_polynomial(parse_poly("xi^2", big), dual("0", plane))
    with pytest.raises(WrongDegree, match="deg G"):
        dual_pair_from_cofactor(parse_poly("xi^2", big), dual("Y", plane))
    with pytest.raises(WrongDegree, match="below the top degree"):
        dual_pair_from_cofactor(
            parse_poly("xi^2 + y*xi", big), dual("Y^2", plane), 1
        )


def test_exceptional_form(plane, big):
    "Contraction of a shifted form by the cofactor"
    form = exceptional_form(parse_poly("xi + y", big), dual("Y", plane), 3)
    assert form == dual("Xi^2*Y + Xi^3", big)


def test_blowup_dual_invalid(plane, big):
    "The Thom element must contract F onto G"
    form, target = dual("X^2*Y^2", plane), dual("X*Y", plane)
    polynomial = parse_poly("xi^2 - x*y", big)
    with pytest.raises(ThomMismatch):
        blowup_dual(form, target, parse_poly("x", plane), polynomial, 1)
    thom = parse_poly("x*y", plane)
    with pytest.raises(ValueError, match="nonzero"):
        blowup_dual(form, target, thom, polynomial, 0)
    with pytest.raises(WrongDegree, match="d - k"):
        blowup_dual(form, target, thom, parse_poly("xi^3", big), 1)


def test_bumd_status_correction(plane, big):
    "The correction term of a dual blow-up is unique modulo the ideal"
    report = bumd_status(
        dual("X^2*Y^2", plane),
        dual("Y", plane),
        parse_poly("x^2*y", plane),
        parse_poly("xi^3 - xi^2*y", big),
        2,
    )
    assert report.conditions == (True, True, True, True)
    complete = quotient(ideal(plane, "x^3", "y^3"))
    assert complete.normal_form(report.correction) == parse_poly("-2*x^2*y", plane)
    assert report.constant_correction is not None


@pytest.mark.parametrize("seed", seeds(100))
def test_random_dual_blowup_conditions_agree(seed):
    "The four blow-up conditions agree whatever the constant coefficient"
    random = random_generator(seed)
    space = ring("x y z") if seed % 3 else ring("x y")
    big = blowup_ring(space)
    form, thom, target = random_restriction(space, 4, 2, random)
    lam = int(random.choice([-3, -2, -1, 1, 2, 3]))
    if seed % 2:
        constant = random_polynomial(space, 2, random)
    else:
        constant = thom.scale(lam)
    xi = Polynomial.variable(big, "xi")
    linear = random_polynomial(space, 1, random).embed(big)
    polynomial = xi**2 + xi * linear + constant.embed(big)
    report = bumd_status(form, target, thom, polynomial, lam)
    assert len(set(report.conditions)) == 1
    if not seed % 2:
        assert report.is_blowup


@pytest.mark.parametrize("seed", seeds(20))
def test_random_family_fibers(seed):
    "Fibers share the Hilbert function, the special one has a larger socle"
    random = random_generator(seed)
    space = ring("x y z")
    form, thom, target = random_restriction(space, 4, 2, random)
    source = orient(quotient(annihilator(form)), dual_generator=form)
    restricted = orient(quotient(annihilator(target)), dual_generator=target)
    projection = natural_map(source, restricted)
    parameters = BlowUpParameters(
        coefficients=(random_polynomial(space, 1, random),),
        lam=int(random.choice([-2, -1, 1, 2])),
    )
    result = cohomological_blowup(projection, parameters)
    values = [0, 1, int(random.integers(2, 9)), "-1/3"]
    fibers = [family_fiber(projection, parameters, value) for value in values]
    for fiber in fibers:
        assert fiber.algebra.hilbert == result.tilde_A.hilbert
    assert fibers[0].algebra.socle_dimension == 2
    assert fibers[1].algebra.ideal.equals(result.tilde_A.ideal)
    assert all(fiber.is_gorenstein for fiber in fibers[1:])
