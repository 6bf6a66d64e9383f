# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Blow-ups on the Macaulay dual side
"""
from dataclasses import dataclass

from .._apolarity import (
    GradedIdeal,
    annihilator,
    hilbert_combination,
    natural_map,
    quotient,
)
from .._errors import ConsistencyError, RingMismatch, ThomMismatch, WrongDegree
from .._exact import mat_solve, matrix
from .._polys import Polynomial, contract
from .construction import hat_ideal, monic_polynomial, split_monic


@dataclass
class GDualPolynomial:
    """
    A pair of monic polynomials dual to each other modulo a form

    Attributes
    ----------
    f : :class:`gorenstein.Polynomial`
        Monic of degree ``n`` in the blow-up variable.
    h : :class:`gorenstein.Polynomial`
        Monic of degree ``k = deg G`` in the blow-up variable, with
        :math:`f h \\equiv \\xi^{n+k}` modulo :math:`\\mathrm{Ann}(G) R[\\xi]`.
    unit : :class:`gorenstein.Polynomial`
        :math:`\\mu_f = 1 + r_1 + \\dots + r_n`, evaluation of ``f`` at
        :math:`\\xi = 1`, in normal form in :math:`T = R/\\mathrm{Ann}(G)`.
    inverse : :class:`gorenstein.Polynomial`
        :math:`\\mu_h`, the inverse of ``unit`` in :math:`T`.
    """

    f: Polynomial
    h: Polynomial
    unit: Polynomial
    inverse: Polynomial


def _check_form(form, ring, name):
    if not form.ring.dual or form.ring != ring.mirror():
        raise RingMismatch(
            "Form {} '{}' lives in {} instead of {}.".format(
                name, form, form.ring, ring.mirror()
            )
        )
    if not form or not form.is_homogeneous():
        raise ValueError(
            "Form {} '{}' must be nonzero and homogeneous.".format(name, form)
        )


def _inverse_series(coefficients, algebra, length):
    """
    Homogeneous components of the inverse of 1 + c_1 + c_2 + ... in an algebra

    Uses :math:`v_0 = 1` and :math:`v_i = -\\sum_{j \\geq 1} c_j v_{i-j}`.
    """
    ring = algebra.ring
    values = [Polynomial.constant(ring, 1)]
    for i in range(1, length + 1):
        total = Polynomial.zero(ring)
        for j in range(1, min(i, len(coefficients)) + 1):
            total = total + coefficients[j - 1] * values[i - j]
        values.append(algebra.normal_form(-total))
    return values


def _unit(coefficients, ring):
    return sum(coefficients, Polynomial.constant(ring, 1))


def _check_dual_pair(f, h, algebra, variable, unit, inverse):
    ring = algebra.ring
    total = f.degree + h.degree
    difference = f * h - Polynomial.variable(f.ring, variable) ** total
    for power, part in difference.coefficients_in(variable).items():
        if algebra.normal_form(part.embed(ring)):
            raise ConsistencyError(
                "Coefficient of {}^{} in f*h - {}^{} is not in the annihilator "
                "of the form.".format(variable, power, variable, total)
            )
    if algebra.normal_form(unit * inverse) != Polynomial.constant(ring, 1):
        raise ConsistencyError(
            "Units '{}' and '{}' are not inverse to each other.".format(unit, inverse)
        )


def g_dual_polynomial(polynomial, form):
    """
    The dual polynomial of a monic polynomial with respect to a form

    Parameters
    ----------
    polynomial : :class:`gorenstein.Polynomial`
        Monic :math:`f = \\xi^n + r_1\\xi^{n-1} + \\dots + r_n` over a base
        ring with the blow-up variable adjoined.
    form : :class:`gorenstein.Polynomial`
        Dual form :math:`G` of degree ``k`` over the base ring.

    Returns
    -------
    dual : :class:`gorenstein.GDualPolynomial`
        With ``h`` built from the homogeneous components of
        :math:`\\mu_f^{-1}` in :math:`T = R/\\mathrm{Ann}(G)`.

    Examples
    --------
    >>> from gorenstein import GradedRing, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> f = parse_poly("xi^3 - xi^2*y", ring.adjoin("xi"))
    >>> str(g_dual_polynomial(f, parse_poly("Y", ring.mirror())).h)
    'y + xi'
    """
    ring = form.ring.mirror()
    _check_form(form, ring, "G")
    variable, _, coefficients = split_monic(polynomial, ring)
    algebra = quotient(annihilator(form))
    k = form.degree
    values = _inverse_series(coefficients, algebra, k)
    cofactor = monic_polynomial(ring, values[1:], variable)
    unit = algebra.normal_form(_unit(coefficients, ring))
    inverse = _unit(values[1:], ring)
    _check_dual_pair(polynomial, cofactor, algebra, variable, unit, inverse)
    return GDualPolynomial(f=polynomial, h=cofactor, unit=unit, inverse=inverse)


def dual_pair_from_cofactor(cofactor, form, degree=None):
    """
    The monic polynomial whose dual with respect to a form is a given one

    Parameters
    ----------
    cofactor : :class:`gorenstein.Polynomial`
        Monic :math:`h` of degree :math:`k = \\deg G` in the blow-up variable.
    form : :class:`gorenstein.Polynomial`
        Dual form :math:`G`.
    degree : int or None
        Degree ``n`` of the result. Defaults to the largest degree of a
        nonzero component of :math:`\\mu_h^{-1}` (at least 1). A larger
        value pads with zero coefficients.

    Returns
    -------
    dual : :class:`gorenstein.GDualPolynomial`
    """
    ring = form.ring.mirror()
    _check_form(form, ring, "G")
    variable, k, coefficients = split_monic(cofactor, ring)
    if k != form.degree:
        raise WrongDegree(
            "Cofactor '{}' has degree {} in '{}' instead of deg G = {}.".format(
                cofactor, k, variable, form.degree
            )
        )
    algebra = quotient(annihilator(form))
    values = _inverse_series(coefficients, algebra, k)
    top = max([i for i, value in enumerate(values) if value] + [1])
    if degree is None:
        degree = top
    elif degree < top:
        raise WrongDegree(
            "Degree {} is below the top degree {} of the inverse unit.".format(
                degree, top
            )
        )
    values += [Polynomial.zero(ring)] * (degree + 1 - len(values))
    polynomial = monic_polynomial(ring, values[1 : degree + 1], variable)
    unit = _unit(values[1:], ring)
    inverse = algebra.normal_form(_unit(coefficients, ring))
    _check_dual_pair(polynomial, cofactor, algebra, variable, unit, inverse)
    return GDualPolynomial(f=polynomial, h=cofactor, unit=unit, inverse=inverse)


def _times_dual_variable(form, ring, power):
    "Monomial product of a form with the last dual variable"
    exponents = [0] * ring.nvars
    exponents[-1] = power
    return form.embed(ring).times_monomial(exponents)


def exceptional_form(cofactor, form, power):
    """
    The form :math:`h \\circ (\\Xi^{p} G)` over the big dual ring
    """
    big = cofactor.ring.mirror()
    return contract(cofactor, _times_dual_variable(form, big, power))


def is_free_extension(exceptional, form, degree):
    """
    True if :math:`R[\\xi]/\\mathrm{Ann}(\\tilde{G})` is free of rank ``n``
    over :math:`T = R/\\mathrm{Ann}(G)`

    Compares the Hilbert function with
    :math:`\\sum_{i < n} H(T)[i]`.
    """
    target = annihilator(form).hilbert()
    expected = hilbert_combination(*[(1, target, i) for i in range(degree)])
    return annihilator(exceptional).hilbert() == expected


@dataclass
class DualBlowUp:
    """
    Output of the Macaulay dual construction

    Attributes
    ----------
    form : :class:`gorenstein.Polynomial`
        :math:`\\hat{F} = F - \\lambda \\Xi \\tilde{G}`.
    exceptional_form : :class:`gorenstein.Polynomial`
        :math:`\\tilde{G} = h \\circ (\\Xi^{d-1} G)`.
    dual : :class:`gorenstein.GDualPolynomial`
    algebra : :class:`gorenstein.ArtinianAlgebra`
        :math:`R[\\xi]/\\mathrm{Ann}(\\hat{F})`.
    exceptional : :class:`gorenstein.ArtinianAlgebra`
        :math:`R[\\xi]/\\mathrm{Ann}(\\tilde{G})`.
    """

    form: Polynomial
    exceptional_form: Polynomial
    dual: GDualPolynomial
    algebra: object
    exceptional: object


def _check_thom(form, target, thom):
    ring = thom.ring
    _check_form(form, ring, "F")
    _check_form(target, ring, "G")
    contracted = contract(thom, form)
    if contracted != target:
        raise ThomMismatch(
            "Contraction of '{}' by '{}' is '{}' instead of '{}'.".format(
                form, thom, contracted, target
            )
        )


def blowup_dual(form, target, thom, polynomial, lam):
    """
    Blow-up of a dual generator along a projection

    Parameters
    ----------
    form : :class:`gorenstein.Polynomial`
        Dual generator :math:`F` of degree ``d``.
    target : :class:`gorenstein.Polynomial`
        Dual generator :math:`G = \\tau \\circ F` of degree ``k``.
    thom : :class:`gorenstein.Polynomial`
        The element :math:`\\tau` of degree :math:`n = d - k`.
    polynomial : :class:`gorenstein.Polynomial`
        Monic :math:`f` of degree ``n`` in the blow-up variable.
    lam : field element, int or str
        Nonzero scalar.

    Returns
    -------
    dual : :class:`gorenstein.DualBlowUp`

    Raises
    ------
    gorenstein.ThomMismatch
        If :math:`\\tau \\circ F \\neq G`.
    """
    _check_thom(form, target, thom)
    ring = thom.ring
    lam = ring.field(lam)
    if not lam:
        raise ValueError("The scalar lambda must be nonzero.")
    _, degree, _ = split_monic(polynomial, ring)
    if degree != form.degree - target.degree:
        raise WrongDegree(
            "Polynomial '{}' has degree {} instead of d - k = {}.".format(
                polynomial, degree, form.degree - target.degree
            )
        )
    dual = g_dual_polynomial(polynomial, target)
    big = polynomial.ring
    exceptional = exceptional_form(dual.h, target, form.degree - 1)
    hat_form = form.embed(big.mirror()) - _times_dual_variable(
        exceptional, big.mirror(), 1
    ).scale(lam)
    expected = GradedIdeal(
        big,
        [g.embed(big) for g in annihilator(target).minimal_generators()]
        + [polynomial],
    )
    ideal = annihilator(exceptional)
    if not ideal.equals(expected):
        raise ConsistencyError(
            "Annihilator {} of '{}' differs from {}.".format(
                ideal, exceptional, expected
            )
        )
    return DualBlowUp(
        form=hat_form,
        exceptional_form=exceptional,
        dual=dual,
        algebra=quotient(annihilator(hat_form)),
        exceptional=quotient(ideal),
    )


@dataclass(frozen=True)
class DualBlowUpReport:
    """
    Four equivalent conditions for the dual construction to be a blow-up

    Attributes
    ----------
    is_blowup : bool
        Some :math:`f - r` with :math:`r \\in R_n` annihilates
        :math:`\\hat{F}` and :math:`\\mathrm{Ann}(\\hat{F})` is the quotient
        presentation built with it.
    hilbert : bool
        :math:`H(\\hat{A}) = H(A) + \\sum_{i=1}^{n-1} H(T)[i]`.
    correction : :class:`gorenstein.Polynomial` or None
        An :math:`r \\in R_n` with :math:`(f - r) \\circ \\hat{F} = 0`.
    constant_correction : :class:`gorenstein.Polynomial` or None
        An :math:`r \\in \\mathrm{Ann}(G)_n` with
        :math:`(r_n - r) \\circ F = \\lambda G`.
    dual : :class:`gorenstein.DualBlowUp`
    """

    is_blowup: bool
    hilbert: bool
    correction: object
    constant_correction: object
    dual: DualBlowUp

    @property
    def conditions(self):
        "The four conditions in order."
        return (
            self.is_blowup,
            self.hilbert,
            self.correction is not None,
            self.constant_correction is not None,
        )


def _solve_contraction(ring, candidates, form, rhs):
    """
    Combination of candidate primal elements contracting a form onto ``rhs``
    """
    images = [contract(c, form) for c in candidates]
    keys = sorted(
        {m for image in images + [rhs] for m in image.terms}, key=form.ring.order
    )
    rows = [[image.coefficient(m) for image in images] for m in keys]
    solution = mat_solve(
        matrix(rows, form.field, len(candidates)), [rhs.coefficient(m) for m in keys]
    )
    if solution is None:
        return None
    result = Polynomial.zero(ring)
    for candidate, value in zip(candidates, solution):
        result = result + candidate.scale(value)
    return result


def bumd_status(form, target, thom, polynomial, lam):
    """
    Decide whether the dual construction gives a blow-up, four ways

    Evaluates the Hilbert function identity, the existence of
    :math:`r \\in R_n` with :math:`(f - r) \\circ \\hat{F} = 0`, the existence
    of :math:`r \\in \\mathrm{Ann}(G)_n` with
    :math:`(r_n - r) \\circ F = \\lambda G` and the equality of
    :math:`\\mathrm{Ann}(\\hat{F})` with the quotient presentation. Raises
    :class:`gorenstein.ConsistencyError` if they disagree.

    Parameters
    ----------
    form, target, thom, polynomial, lam
        As in :func:`gorenstein.blowup_dual`.

    Returns
    -------
    report : :class:`gorenstein.DualBlowUpReport`
    """
    dual = blowup_dual(form, target, thom, polynomial, lam)
    ring = thom.ring
    big = polynomial.ring
    lam = ring.field(lam)
    _, degree, coefficients = split_monic(polynomial, ring)
    source = quotient(annihilator(form))
    exceptional_target = quotient(annihilator(target))
    expected = hilbert_combination(
        (1, source.hilbert, 0),
        *[(1, exceptional_target.hilbert, i) for i in range(1, degree)],
    )
    hilbert = dual.algebra.hilbert == expected
    candidates = [Polynomial.monomial(big, m + (0,)) for m in ring.monomials(degree)]
    correction = _solve_contraction(
        big, candidates, dual.form, contract(polynomial, dual.form)
    )
    if correction is not None:
        correction = correction.embed(ring)
    kernel = exceptional_target.ideal.space(degree)
    basis = [Polynomial(ring, row) for row in kernel.rows()]
    rhs = contract(coefficients[-1], form) - target.scale(lam)
    constant_correction = _solve_contraction(ring, basis, form, rhs)
    is_blowup = False
    if correction is not None:
        projection = natural_map(source, exceptional_target)
        corrected = polynomial - correction.embed(big)
        is_blowup = annihilator(dual.form).equals(hat_ideal(projection, corrected))
    answers = (
        is_blowup,
        hilbert,
        correction is not None,
        constant_correction is not None,
    )
    if len(set(answers)) != 1:
        raise ConsistencyError(
            "Blow-up conditions disagree for '{}': presentation={}, Hilbert={}, "
            "correction={}, constant correction={}.".format(dual.form, *answers)
        )
    return DualBlowUpReport(
        is_blowup=is_blowup,
        hilbert=hilbert,
        correction=correction,
        constant_correction=constant_correction,
        dual=dual,
    )
