# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Worked examples with known answers, checked end to end
"""
import logging

import numpy as np

from .._apolarity import (
    GradedIdeal,
    annihilator,
    colon,
    dual_generator,
    make_map,
    orient,
    quotient,
    thom_class,
)
from .._blowup import (
    BlowUpParameters,
    blowup_dual,
    blowup_ideal,
    blowup_ring,
    bumd_status,
    cohomological_blowup,
    construct_hat,
    dual_pair_from_cofactor,
    exceptional_form,
    gorenstein_criterion,
    is_free_extension,
    lambda_family_fiber,
    rescale_blowup_variable,
    truncated_extension,
)
from .._errors import ConsistencyError
from .._exact import QQ_FIELD, FieldSpec
from .._lefschetz import (
    generic_lefschetz,
    hilbert_combinatorics,
    lefschetz_status,
    symbolic_lefschetz_determinant,
)
from .._polys import GradedRing, Polynomial, parse_poly
from .._structure import (
    NO_OBSTRUCTION,
    NOT_BLOWUP,
    ToricFan,
    bug_obstruction,
    ci_classification,
    exact_zero_divisor_partner,
    is_compressed,
    mingen_homology,
    minimal_nonfaces,
    toric_presentation,
    verify_blowdown_as_connected_sum,
    verify_blowup_as_connected_sum,
)
from ..constants import DEFAULT_BOUND, DEFAULT_SEED
from .report import Check, Entry, Report, merge, plain, render

LOGGER = logging.getLogger(__name__)

#: Fixture functions by identifier
FIXTURES = {}


def fixture(identifier):
    "Register a function as the fixture with this identifier."

    def decorator(function):
        FIXTURES[identifier] = function
        return function

    return decorator


class Recorder:
    """
    Collects the quantities computed by a fixture and compares them

    Every comparison becomes a :class:`gorenstein._cli.report.Check` named
    ``identifier.quantity``. Computed values are also kept, as plain data, in
    the single report entry of the fixture.

    Parameters
    ----------
    identifier : str
    seed : int
        Seed of the randomized Lefschetz searches.
    """

    def __init__(self, identifier, seed=DEFAULT_SEED):
        self.identifier = identifier
        self.seed = seed
        self.report = Report(source=identifier, seed=seed)
        self.values = {}
        self.report.entries.append(
            Entry(label=identifier, command="verify", line=None, values=self.values)
        )

    def _record(self, quantity, actual, expected, passed):
        self.values[quantity] = actual
        self.report.checks.append(
            Check(
                target="{}.{}".format(self.identifier, quantity),
                expected=expected,
                actual=render(actual),
                passed=passed,
            )
        )
        if not passed:
            LOGGER.info(
                "%s: %s is %s instead of %s",
                self.identifier,
                quantity,
                render(actual),
                expected,
            )

    def __call__(self, quantity, actual, expected):
        """
        Compare the canonical renderings of a computed and an expected value
        """
        actual = plain(actual)
        expected = render(plain(expected))
        self._record(quantity, actual, expected, render(actual) == expected)

    def ideal(self, quantity, actual, expected):
        "Compare two ideals of the same ring degree by degree."
        self._record(quantity, str(actual), str(expected), actual.equals(expected))

    def polynomial(self, quantity, actual, expected):
        """
        Compare two polynomials up to a nonzero scalar

        Either side may be None when no polynomial exists.
        """
        if actual is not None:
            actual = actual.normalized()
        if expected is not None:
            expected = expected.normalized()
        self(quantity, actual, expected)


def _ring(names, weights=None, field=QQ_FIELD):
    return GradedRing(tuple(names.split()), weights, field=field)


def _ideal(ring, *generators):
    return GradedIdeal(ring, [parse_poly(text, ring) for text in generators])


def _dual(text, ring):
    "A form of the mirror of a primal ring."
    return parse_poly(text, ring.mirror())


def _oriented(ring, form):
    "Algebra of a dual form, oriented by it."
    form = _dual(form, ring)
    return orient(quotient(annihilator(form)), dual_generator=form)


def _images(ring, *texts):
    return [parse_poly(text, ring) for text in texts]


def _coefficient(form, name):
    "Coefficient of a variable in a linear form."
    (exponents,) = Polynomial.variable(form.ring, name).terms
    return form.coefficient(exponents)


def _generic_form(ring, degree, seed):
    "Dual form with pseudo-random integer coefficients on every monomial"
    random = np.random.default_rng(seed)
    monomials = ring.monomials(degree)
    values = random.integers(-DEFAULT_BOUND, DEFAULT_BOUND + 1, size=len(monomials))
    return Polynomial(ring, {m: int(value) for m, value in zip(monomials, values)})


@fixture("hat-trichotomy")
def _hat_trichotomy(check):
    "Three constant coefficients over the same projection"
    ring = _ring("x y")
    source = orient(quotient(_ideal(ring, "x^3", "y^3")))
    target = orient(quotient(_ideal(ring, "x^2", "y")))
    projection = make_map(source, target, _images(ring, "x", "0"))
    check("thom", thom_class(projection).thom_class, parse_poly("x*y^2", ring))
    big = blowup_ring(ring)
    cases = [
        ("not-injective", "xi^3 + x*xi^2 + x^2*y + x*y^2", (1, 3, 5, 3), None),
        ("gorenstein", "xi^3 + x*xi^2 + x*y^2", (1, 3, 5, 3, 1), "1"),
        ("boundary", "xi^3 + x*xi^2", (1, 3, 5, 3, 1), "0"),
    ]
    for name, text, hilbert, lam in cases:
        polynomial = parse_poly(text, big)
        hat = construct_hat(projection, polynomial)
        criterion = gorenstein_criterion(projection, polynomial)
        check(name + ".hilbert", hat.algebra.hilbert, hilbert)
        check(name + ".gorenstein", criterion.gorenstein, lam not in (None, "0"))
        check(name + ".beta_injective", criterion.beta_injective, lam is not None)
        found = None if criterion.lam is None else ring.field.to_str(criterion.lam)
        check(name + ".lam", found, lam)
        if name == "boundary":
            check(name + ".socle_dimension", hat.algebra.socle_dimension, 2)
    result = cohomological_blowup(
        projection,
        BlowUpParameters(
            coefficients=(parse_poly("x", ring), Polynomial.zero(ring)), lam=1
        ),
    )
    check("blowup.polynomial", result.polynomial, parse_poly(cases[1][1], big))
    check("blowup.hilbert", result.tilde_A.hilbert, (1, 3, 5, 3, 1))
    check("blowup.exceptional_hilbert", result.tilde_T.hilbert, (1, 2, 2, 1))
    check(
        "blowup.tilde_thom",
        result.tilde_thom,
        result.tilde_A.normal_form(parse_poly("-xi", big)),
    )


@fixture("lambda-family")
def _lambda_family(check):
    "Blow-ups of a truncated line differing only in the scalar"
    ring = _ring("x")
    zero = Polynomial.zero(ring)
    source = orient(quotient(_ideal(ring, "x^3")))
    target = orient(quotient(_ideal(ring, "x")))
    projection = make_map(source, target, [zero])
    check("thom", thom_class(projection).thom_class, parse_poly("x^2", ring))
    big = blowup_ring(ring)
    results = {}
    for lam in (1, 2, 3, 4):
        results[lam] = cohomological_blowup(
            projection, BlowUpParameters(coefficients=(zero,), lam=lam)
        )
    for lam in (1, 2, 3):
        algebra = results[lam].tilde_A
        expected = _ideal(big, "x*xi", "xi^2 + {}*x^2".format(lam))
        check.ideal("lam-{}.ideal".format(lam), algebra.ideal, expected)
        check("lam-{}.hilbert".format(lam), algebra.hilbert, (1, 2, 1))
    check.ideal(
        "rescaled", rescale_blowup_variable(results[1], 2), results[4].tilde_A.ideal
    )
    boundary = lambda_family_fiber(projection, [zero], 0)
    check("boundary.hilbert", boundary.algebra.hilbert, (1, 2, 1))
    check("boundary.socle_dimension", boundary.algebra.socle_dimension, 2)


@fixture("free-extension")
def _free_extension(check):
    "Choosing the cofactor first decides the degree of the extension"
    ring = _ring("x y z")
    form = _dual("X*Y*Z", ring)
    big = blowup_ring(ring)
    dual = big.mirror()
    cofactor = parse_poly("xi^3 + (x*y + x*z + y*z)*xi + x*y*z", big)
    short = exceptional_form(cofactor, form, 4)
    check(
        "short.form",
        short,
        parse_poly("Xi*X*Y*Z + Xi^3*(X + Y + Z) + Xi^4", dual),
    )
    check("short.free", is_free_extension(short, form, 2), False)
    full = exceptional_form(cofactor, form, 5)
    check(
        "long.form",
        full,
        parse_poly("Xi^2*X*Y*Z + Xi^4*(X + Y + Z) + Xi^5", dual),
    )
    check("long.free", is_free_extension(full, form, 3), True)
    pair = dual_pair_from_cofactor(cofactor, form)
    polynomial = parse_poly("xi^3 - (x*y + x*z + y*z)*xi - x*y*z", big)
    check("dual.polynomial", pair.f, polynomial)
    check("dual.unit", pair.unit, parse_poly("1 - x*y - x*z - y*z - x*y*z", ring))
    check(
        "dual.inverse", pair.inverse, parse_poly("1 + x*y + x*z + y*z + x*y*z", ring)
    )
    check.ideal(
        "long.ideal",
        annihilator(full),
        _ideal(big, "x^2", "y^2", "z^2", str(polynomial)),
    )


@fixture("dual-choice")
def _dual_choice(check):
    "The dual construction with and without the right constant coefficient"
    ring = _ring("x y")
    big = blowup_ring(ring)
    form = _dual("X^2*Y^2", ring)
    target = _dual("X*Y", ring)
    thom = parse_poly("x*y", ring)
    plain_hat = bumd_status(form, target, thom, parse_poly("xi^2", big), 1)
    check("hat.form", plain_hat.dual.form, _dual("X^2*Y^2 - Xi^2*X*Y", big))
    check("hat.hilbert", plain_hat.dual.algebra.hilbert, (1, 3, 6, 3, 1))
    check("hat.conditions", plain_hat.conditions, (False,) * 4)
    blown = bumd_status(form, target, thom, parse_poly("xi^2 - x*y", big), -1)
    check("blowup.form", blown.dual.form, _dual("X^2*Y^2 + Xi^2*X*Y + Xi^4", big))
    check("blowup.hilbert", blown.dual.algebra.hilbert, (1, 3, 5, 3, 1))
    check("blowup.conditions", blown.conditions, (True,) * 4)
    check.ideal(
        "blowup.ideal",
        annihilator(blown.dual.form),
        _ideal(big, "x^3", "y^3", "xi*x^2", "xi*y^2", "xi^2 - x*y"),
    )


@fixture("connected-sum")
def _connected_sum(check):
    "A blow-up given by dual generators is a connected sum"
    ring = _ring("x y")
    big = blowup_ring(ring)
    form = _dual("X^2*Y^2", ring)
    target = _dual("Y", ring)
    thom = parse_poly("x^2*y", ring)
    polynomial = parse_poly("xi^3 - xi^2*y", big)
    dual = blowup_dual(form, target, thom, polynomial, 2)
    check("form", dual.form, _dual("X^2*Y^2 - 2*Xi^3*Y - 2*Xi^4", big))
    check("hilbert", dual.algebra.hilbert, (1, 3, 5, 3, 1))
    sigma = parse_poly("xi^3 - xi^2*y + 2*x^2*y", big)
    ideal = _ideal(big, "x^3", "y^3", "xi*x", "xi*y^2", str(sigma))
    check.ideal("ideal", annihilator(dual.form), ideal)
    report = verify_blowup_as_connected_sum(form, target, thom, polynomial, 2)
    check("passed", report.passed, True)
    _, total = report.data.hilbert_identities()
    check("connected_sum.hilbert", total, (1, 3, 5, 3, 1))
    check("sigma", ideal.contains(report.data.sigma - sigma), True)
    check("exceptional_thom", report.exceptional_thom is not None, True)


@fixture("blow-down")
def _blow_down(check):
    "Blowing up a point and recognizing the blow-down as a connected sum"
    ring = _ring("x y z")
    source = _oriented(ring, "Z^2*X*Y - X^2*Y^2")
    check("source.hilbert", source.hilbert, (1, 3, 6, 3, 1))
    point = orient(quotient(_ideal(ring, "x", "y", "z")))
    projection = make_map(source, point, _images(ring, "0", "0", "0"))
    zero = Polynomial.zero(ring)
    result = cohomological_blowup(
        projection, BlowUpParameters(coefficients=(zero,) * 3, lam=1)
    )
    check("thom", result.thom, source.normal_form(parse_poly("z^2*x*y", ring)))
    check("hilbert", result.tilde_A.hilbert, (1, 4, 7, 4, 1))
    check("exceptional_hilbert", result.tilde_T.hilbert, (1, 1, 1, 1))
    big = result.tilde_A.ring
    check(
        "form",
        result.tilde_A.dual_generator,
        _dual("Z^2*X*Y - X^2*Y^2 - Xi^4", big),
    )
    check("passed", verify_blowdown_as_connected_sum(result).passed, True)


@fixture("weighted-grading")
def _weighted_grading(check):
    "A non-standard grading whose blow-up has a standard presentation"
    ring = _ring("x y u", weights=(1, 1, 2))
    ideal = _ideal(ring, "x^2", "u^2", "x*y", "x*u - y*u", "x*u - y^3")
    check("source.hilbert", quotient(ideal).hilbert, (1, 2, 2, 1))
    form = _dual("X*U + Y*U + Y^3", ring)
    check("source.form", dual_generator(ideal), form.normalized())
    big = blowup_ring(ring)
    blown = blowup_ideal(
        ideal, parse_poly("u - y^2", ring), parse_poly("xi^2 - (u - y^2)", big)
    )
    algebra = quotient(blown)
    check("hilbert", algebra.hilbert, (1, 3, 3, 1))
    check(
        "form",
        dual_generator(blown),
        _dual("Xi^2*X + X*U + Y*U + Y^3", big).normalized(),
    )
    plane = _ring("x xi")
    other_big = blowup_ring(plane, "y")
    other = blowup_ideal(
        _ideal(plane, "x^2", "xi^3"),
        parse_poly("x*xi^2", plane),
        parse_poly("y^3 - x*xi^2", other_big),
    )
    check.ideal(
        "standard.ideal",
        other,
        _ideal(other_big, "x^2", "xi^3", "x*y", "x*xi^2 - y^3", "y*xi"),
    )
    standard = quotient(other)
    elimination = make_map(
        algebra,
        standard,
        dict(
            zip(
                ("x", "y", "u", "xi"),
                _images(other_big, "x", "y", "xi^2 + y^2", "xi"),
            )
        ),
    )
    check("isomorphic", elimination.surjective, True)
    check("standard.hilbert", standard.hilbert, algebra.hilbert)


@fixture("complete-intersection")
def _complete_intersection(check):
    "A blow-up that is a complete intersection"
    ring = _ring("x y")
    big = blowup_ring(ring)
    ideal = _ideal(ring, "x^3", "y^3")
    thom = parse_poly("y^2", ring)
    polynomial = parse_poly("xi^2 - y^2", big)
    blown = blowup_ideal(ideal, thom, polynomial)
    check.ideal("ideal", blown, _ideal(big, "x^3", "xi*y", "xi^2 - y^2"))
    check("mu", blown.mu, 3)
    check("hilbert", blown.hilbert(), (1, 3, 4, 3, 1))
    report = ci_classification(ideal, thom, polynomial)
    check("a_is_ci", report.a_is_ci, True)
    check("t_is_ci", report.t_is_ci, True)
    check("tau_exact_zd", report.tau_exact_zd, True)
    check("blowup_is_ci", report.blowup_is_ci, True)
    homology = mingen_homology(ideal, thom, polynomial)
    check("mu_tilde", homology.mu_tilde, 3)
    check("dim_H", (homology.dim_H, homology.dim_H_prime), (0, 0))


@fixture("vanishing-homology")
def _vanishing_homology(check):
    """
    Homology of a colon ideal that is not principal over the ideal

    The colon contains x^3 and y^3 besides z^2 + xy, so both homology
    groups are two dimensional and the blow-up needs eight generators.
    """
    ring = _ring("x y z")
    big = blowup_ring(ring)
    ideal = _ideal(ring, "x^4", "y^4", "z*x^2", "z*y^2", "z^4 - x^2*y^2")
    thom = parse_poly("z^2 - x*y", ring)
    polynomial = parse_poly("xi^2 - (z^2 - x*y)", big)
    check.ideal(
        "colon",
        colon(ideal, thom),
        _ideal(ring, "z^2 + x*y", "x^3", "y^3", "x^2*z", "y^2*z"),
    )
    report = mingen_homology(ideal, thom, polynomial)
    check("mu_I", report.mu_I, 5)
    check("mu_colon", report.mu_colon, 5)
    check("mu_tilde", report.mu_tilde, 8)
    check("dim_H", report.dim_H, 2)
    check("dim_H_prime", report.dim_H_prime, 2)
    classification = ci_classification(ideal, thom, polynomial)
    check("blowup_is_ci", classification.blowup_is_ci, False)


@fixture("exact-pairs")
def _exact_pairs(check):
    "Exact pairs of zero divisors, and an element without a partner"
    plane = _ring("x y")
    algebra = quotient(_ideal(plane, "x^3", "y^3"))
    partner = exact_zero_divisor_partner(algebra, parse_poly("y^2", plane))
    check.polynomial("plane.partner", partner, parse_poly("y", plane))
    space = _ring("x y z")
    algebra = quotient(
        _ideal(space, "x^4", "y^4", "z*x^2", "z*y^2", "z^4 - x^2*y^2")
    )
    partner = exact_zero_divisor_partner(algebra, parse_poly("z^2 - x*y", space))
    check.polynomial("space.partner", partner, None)


@fixture("exact-divisor-ci")
def _exact_divisor_ci(check):
    "A complete intersection with a linear exact zero divisor"
    ring = _ring("x y")
    algebra = quotient(_ideal(ring, "x^4 + y^4", "x^2*y^2"))
    check("hilbert", algebra.hilbert, (1, 2, 3, 4, 3, 2, 1))
    partner = exact_zero_divisor_partner(algebra, parse_poly("x", ring))
    check("exact", partner is not None, True)


@fixture("compressed")
def _compressed(check):
    "A compressed blow-up and a compressed algebra that is not one"
    ring = _ring("x y")
    source = orient(quotient(_ideal(ring, "x^4", "y^3")))
    target = orient(quotient(_ideal(ring, "x^2 - x*y", "y^2")))
    projection = make_map(source, target, _images(ring, "x", "y"))
    zero = Polynomial.zero(ring)
    result = cohomological_blowup(
        projection, BlowUpParameters(coefficients=(zero, zero), lam=1)
    )
    algebra = result.tilde_A.algebra
    check("hilbert", algebra.hilbert, (1, 3, 6, 6, 3, 1))
    check("compressed", is_compressed(algebra), True)
    check("obstruction", bug_obstruction(algebra), NO_OBSTRUCTION)
    space = _ring("x y z")
    generic = quotient(annihilator(_generic_form(space.mirror(), 6, check.seed)))
    check("generic.hilbert", generic.hilbert, (1, 3, 6, 10, 6, 3, 1))
    check("generic.compressed", is_compressed(generic), True)
    check("generic.obstruction", bug_obstruction(generic), NOT_BLOWUP)


@fixture("char-p-failure")
def _char_p_failure(check):
    "Blowing up can destroy the strong Lefschetz property in characteristic 5"
    ring = _ring("x y", field=FieldSpec(5))
    big = blowup_ring(ring)
    ideal = annihilator(_dual("X^7 + Y^7", ring))
    check.ideal("source.ideal", ideal, _ideal(ring, "x*y", "x^7 - y^7"))
    source = quotient(ideal)
    target = quotient(_ideal(ring, "y", "x^4"))
    check("source.slp", lefschetz_status(source, parse_poly("x + y", ring)).slp, True)
    check("target.slp", lefschetz_status(target, parse_poly("x", ring)).slp, True)
    algebra = quotient(
        blowup_ideal(ideal, parse_poly("x^4", ring), parse_poly("xi^4 - x^4", big))
    )
    check("hilbert", algebra.hilbert, (1, 3, 4, 5, 5, 4, 3, 1))
    verdict = generic_lefschetz(algebra, strategy="exhaustive")
    check("slp", verdict.slp, False)
    check("searched", verdict.searched, 31)


@fixture("perazzo-cubic")
def _perazzo_cubic(check):
    "A strong Lefschetz blow-up of an algebra without the weak property"
    ring = _ring("x y z u v")
    big = blowup_ring(ring)
    ideal = annihilator(_dual("X*U^2 + Y*U*V + Z*V^2", ring))
    source = quotient(ideal)
    check("source.hilbert", source.hilbert, (1, 5, 5, 1))
    check("source.wlp", generic_lefschetz(source, seed=check.seed).wlp, False)
    algebra = quotient(
        blowup_ideal(
            ideal, parse_poly("u^2", ring), parse_poly("xi^2 - x*xi + u^2", big)
        )
    )
    check("hilbert", algebra.hilbert, (1, 6, 6, 1))
    determinant = symbolic_lefschetz_determinant(algebra, 1)
    check(
        "determinant",
        determinant.normalized(),
        parse_poly("e^4*f^2", determinant.ring),
    )
    verdict = generic_lefschetz(algebra, seed=check.seed)
    check("slp", verdict.slp, True)
    witness = [_coefficient(verdict.form, name) for name in ("v", "xi")]
    check("witness", all(witness), True)


@fixture("wlp-failure")
def _wlp_failure(check):
    "Blowing up can destroy the weak Lefschetz property"
    ring = _ring("x y z u v")
    big = blowup_ring(ring)
    ideal = annihilator(_dual("X*U^6 + Y*U^4*V^2 + Z*U^5*V", ring))
    source = quotient(ideal)
    check("source.hilbert", source.hilbert, (1, 5, 6, 6, 6, 6, 5, 1))
    verdict = generic_lefschetz(source, seed=check.seed)
    check("source.jordan", verdict.jordan, (8, 6, 6, 6, 5, 5))
    check("source.lefschetz", (verdict.slp, verdict.wlp), (False, True))
    target = quotient(annihilator(_dual("X*U^3 + Y*U*V^2 + Z*U^2*V", ring)))
    check("target.hilbert", target.hilbert, (1, 5, 6, 5, 1))
    verdict = generic_lefschetz(target, seed=check.seed)
    check("target.jordan", verdict.jordan, (5, 3, 3, 3, 2, 2))
    check("target.lefschetz", (verdict.slp, verdict.wlp), (False, True))
    tensor = truncated_extension(target, 2)
    check("tensor.hilbert", tensor.hilbert, (1, 6, 11, 11, 6, 1))
    verdict = generic_lefschetz(tensor.algebra, seed=check.seed)
    check(
        "tensor.jordan", verdict.jordan, (6, 4, 4, 4, 4, 3, 3, 2, 2, 2, 1, 1)
    )
    check(
        "tensor.conjugate",
        hilbert_combinatorics(tensor.hilbert).conjugate,
        (6, 4, 4, 4, 4, 4, 2, 2, 2, 2, 2),
    )
    check("tensor.wlp", verdict.wlp, False)
    algebra = quotient(
        blowup_ideal(
            ideal, parse_poly("u^3", ring), parse_poly("xi^3 - u^3", big)
        )
    )
    check("hilbert", algebra.hilbert, (1, 6, 12, 17, 17, 12, 6, 1))
    verdict = generic_lefschetz(algebra, seed=check.seed)
    check(
        "jordan",
        verdict.jordan,
        (8, 6, 6, 6, 6, 6, 4, 4, 4, 4, 4, 4, 2, 2, 2, 2, 1, 1),
    )
    check("wlp", verdict.wlp, False)
    check("determinant", symbolic_lefschetz_determinant(algebra, 3), 0)


_FANS = {
    "plane": ([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)], (1, 1, 1)),
    "plane-blown-once": (
        [(1, 0), (0, 1), (-1, -1), (0, -1)],
        [(0, 1), (1, 2), (2, 3), (3, 0)],
        (1, 2, 1),
    ),
    "plane-blown-twice": (
        [(1, 0), (0, 1), (-1, -1), (0, -1), (-1, 0)],
        [(0, 1), (1, 4), (4, 2), (2, 3), (3, 0)],
        (1, 3, 1),
    ),
    "quadric": (
        [(1, 0), (0, 1), (0, -1), (-1, 0)],
        [(0, 1), (1, 3), (3, 2), (2, 0)],
        (1, 2, 1),
    ),
}


@fixture("toric-surfaces")
def _toric_surfaces(check):
    "Cohomology rings of smooth toric surfaces"
    presentations = {}
    for name, (rays, cones, hilbert) in _FANS.items():
        presentation = toric_presentation(ToricFan(rays, cones))
        presentations[name] = presentation
        check(name + ".hilbert", presentation.hilbert, hilbert)
        check(name + ".reduced_hilbert", presentation.reduced_algebra.hilbert, hilbert)
    plane = presentations["plane"]
    check("plane.nonfaces", minimal_nonfaces(plane.fan), [(0, 1, 2)])
    ring = plane.reduced_ring
    cube = Polynomial.variable(ring, ring.names[0]) ** 3
    check.ideal("plane.reduced_ideal", plane.reduced_ideal, GradedIdeal(ring, [cube]))
    line = _ring("x")
    zero = Polynomial.zero(line)
    projection = make_map(
        orient(quotient(_ideal(line, "x^3"))),
        orient(quotient(_ideal(line, "x"))),
        [zero],
    )
    result = cohomological_blowup(projection, BlowUpParameters(coefficients=(zero,)))
    check.ideal(
        "blowup.ideal",
        result.tilde_A.ideal,
        _ideal(blowup_ring(line), "x*xi", "xi^2 + x^2"),
    )
    check(
        "blowup.hilbert",
        result.tilde_A.hilbert,
        presentations["plane-blown-once"].hilbert,
    )


@fixture("nonsurjective-restriction")
def _nonsurjective_restriction(check):
    "A restriction map that is not surjective and a given presentation"
    line = _ring("x")
    plane = _ring("y z")
    restriction = make_map(
        quotient(_ideal(line, "x^6")),
        quotient(_ideal(plane, "y^2", "z^3")),
        _images(plane, "y + z"),
    )
    check("surjective", restriction.surjective, False)
    ring = _ring("x xi")
    ideal = _ideal(
        ring,
        "xi^3 - 6*x*xi^2 + 12*x^2*xi - 8*x^3",
        "3*xi^4 - 9*x*xi^3 + 6*x^2*xi^2 + 4*x^3*xi",
    )
    check("hilbert", quotient(ideal).hilbert, (1, 2, 3, 3, 2, 1))
    expected = _dual("X^5 - 3*X^3*Xi^2 - 10*X^2*Xi^3 - 24*X*Xi^4 - 48*Xi^5", ring)
    check("form", dual_generator(ideal), expected.normalized())


def verify_example(identifier, seed=DEFAULT_SEED):
    """
    Run one fixture and compare every quantity with its known value

    Parameters
    ----------
    identifier : str
        One of the keys of :data:`FIXTURES`.
    seed : int
        Seed of the randomized Lefschetz searches.

    Returns
    -------
    report : :class:`gorenstein._cli.report.Report`
        ``report.failures()[0].target`` names the first mismatched quantity.
        A failed internal consistency test is recorded as the error.
    """
    if identifier not in FIXTURES:
        raise ValueError(
            "Unknown example '{}'. Must be one of: {}.".format(
                identifier, ", ".join(sorted(FIXTURES))
            )
        )
    recorder = Recorder(identifier, seed=seed)
    try:
        FIXTURES[identifier](recorder)
    except ConsistencyError as error:
        recorder.report.error = str(error)
        LOGGER.error("%s: %s", identifier, error)
    LOGGER.info(
        "%s: %s (%d checks)",
        identifier,
        "passed" if recorder.report.passed else "FAILED",
        len(recorder.report.checks),
    )
    return recorder.report


def verify_all(seed=DEFAULT_SEED):
    """
    Run every fixture, in the order of their identifiers

    Returns
    -------
    report : :class:`gorenstein._cli.report.Report`
        The merged reports.
    """
    return merge([verify_example(identifier, seed) for identifier in sorted(FIXTURES)])
