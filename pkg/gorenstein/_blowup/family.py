# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Degenerations of blow-ups: the flat family, the family in lambda and the
rescaling of the blow-up variable
"""
from dataclasses import dataclass

from .._apolarity import GradedIdeal, hilbert_combination
from .._errors import ConsistencyError
from .._polys import Polynomial
from .construction import (
    BlowUpParameters,
    _plain,
    _thom,
    cohomological_blowup,
    construct_hat,
    gorenstein_criterion,
    monic_polynomial,
)


@dataclass
class FamilyFiber:
    """
    One fiber of a family of quotients of :math:`A[\\xi]`

    Attributes
    ----------
    parameter : field element
        The value of the family parameter.
    algebra : :class:`gorenstein.ArtinianAlgebra`
    polynomial : :class:`gorenstein.Polynomial`
        The monic polynomial of the fiber.
    """

    parameter: object
    algebra: object
    polynomial: Polynomial

    @property
    def is_gorenstein(self):
        "True if the fiber has a one dimensional socle."
        return self.algebra.is_gorenstein()


def _power(field, value, exponent):
    result = field.one
    base = value if exponent >= 0 else field.inverse(value)
    for _ in range(abs(exponent)):
        result = result * base
    return result


def _expected_hilbert(algebra_map, degree):
    source = _plain(algebra_map.source)
    target = _plain(algebra_map.target)
    return hilbert_combination(
        (1, source.hilbert, 0), *[(1, target.hilbert, i) for i in range(1, degree)]
    )


def _fiber_polynomial(algebra_map, coefficients, constant, variable):
    source = _plain(algebra_map.source)
    coefficients = [
        source.normal_form(c) if c else Polynomial.zero(source.ring)
        for c in coefficients
    ]
    return monic_polynomial(source.ring, coefficients + [constant], variable)


def _degree(algebra_map, parameters):
    source = _plain(algebra_map.source)
    target = _plain(algebra_map.target)
    degree = source.top_degree - target.top_degree
    if len(parameters.coefficients) != degree - 1:
        raise ValueError(
            "Got {} coefficients for n = {}. Expected n - 1 = {}.".format(
                len(parameters.coefficients), degree, degree - 1
            )
        )
    return degree


def family_fiber(algebra_map, parameters, value):
    """
    Fiber at :math:`z = c` of the flat family degenerating a blow-up

    The fiber is :math:`A[\\xi]/(\\xi K, \\xi^n + \\sum_i c^i a_i \\xi^{n-i}
    + c^n \\lambda \\tau)`. It is the blow-up with parameters
    :math:`(c^i t_i, c^n \\lambda)` when :math:`c \\neq 0` and the
    non-Gorenstein algebra :math:`A[\\xi]/(\\xi K, \\xi^n)` when
    :math:`c = 0`. Every fiber has the Hilbert function of the blow-up,
    which is checked.

    Parameters
    ----------
    algebra_map : :class:`gorenstein.AlgebraMap`
        As in :func:`gorenstein.cohomological_blowup`.
    parameters : :class:`gorenstein.BlowUpParameters`
    value : field element, int or str
        The parameter :math:`c`.

    Returns
    -------
    fiber : :class:`gorenstein.FamilyFiber`
    """
    source = _plain(algebra_map.source)
    field = source.field
    value = field(value)
    degree = _degree(algebra_map, parameters)
    lam = field(parameters.lam)
    tau = _thom(algebra_map).thom_class
    coefficients = [
        c.scale(_power(field, value, i))
        for i, c in enumerate(parameters.coefficients, start=1)
    ]
    constant = tau.scale(lam * _power(field, value, degree))
    polynomial = _fiber_polynomial(
        algebra_map, coefficients, constant, parameters.variable
    )
    hat = construct_hat(algebra_map, polynomial)
    expected = _expected_hilbert(algebra_map, degree)
    if hat.algebra.hilbert != expected:
        raise ConsistencyError(
            "Fiber at {} has Hilbert function {} instead of {}.".format(
                field.to_str(value), hat.algebra.hilbert, expected
            )
        )
    return FamilyFiber(parameter=value, algebra=hat.algebra, polynomial=polynomial)


def lambda_family_fiber(algebra_map, coefficients, lam):
    """
    Fiber of the family :math:`A[\\xi]/(\\xi K, \\xi^n + \\sum_i a_i
    \\xi^{n-i} + \\lambda \\tau)` for any :math:`\\lambda`

    The fiber is Gorenstein exactly when :math:`\\lambda \\neq 0`, which is
    checked with :func:`gorenstein.gorenstein_criterion`. The fiber at
    :math:`\\lambda = 0` is the boundary algebra: ``beta`` is injective but
    the socle has dimension at least 2.

    Parameters
    ----------
    algebra_map : :class:`gorenstein.AlgebraMap`
    coefficients : sequence of :class:`gorenstein.Polynomial`
        :math:`a_1, \\dots, a_{n-1}`.
    lam : field element, int or str

    Returns
    -------
    fiber : :class:`gorenstein.FamilyFiber`
    """
    source = _plain(algebra_map.source)
    field = source.field
    lam = field(lam)
    parameters = BlowUpParameters(coefficients=tuple(coefficients))
    _degree(algebra_map, parameters)
    tau = _thom(algebra_map).thom_class
    polynomial = _fiber_polynomial(
        algebra_map, list(coefficients), tau.scale(lam), parameters.variable
    )
    report = gorenstein_criterion(algebra_map, polynomial)
    if report.gorenstein != bool(lam) or not report.beta_injective:
        raise ConsistencyError(
            "Fiber at lambda = {} has Gorenstein={} and injective={}.".format(
                field.to_str(lam), report.gorenstein, report.beta_injective
            )
        )
    hat = construct_hat(algebra_map, polynomial)
    return FamilyFiber(parameter=lam, algebra=hat.algebra, polynomial=polynomial)


def rescale_blowup_variable(result, scale):
    """
    Defining ideal of a blow-up after the substitution :math:`\\xi \\mapsto
    \\mu^{-1} \\xi`

    The substitution carries the blow-up with parameters
    :math:`(t_1, \\dots, t_{n-1}, \\lambda)` onto the one with
    :math:`(\\mu t_1, \\dots, \\mu^{n-1} t_{n-1}, \\mu^n \\lambda)`. When
    :math:`\\lambda` has an ``n``-th root in the field, taking
    :math:`\\mu^{-1}` to be that root normalizes :math:`\\lambda` to 1. The
    equality with the ideal of the second blow-up is checked.

    Parameters
    ----------
    result : :class:`gorenstein.BlowUpResult`
    scale : field element, int or str
        Nonzero :math:`\\mu`.

    Returns
    -------
    ideal : :class:`gorenstein.GradedIdeal`
    """
    algebra = result.tilde_A
    field = algebra.field
    scale = field(scale)
    if not scale:
        raise ValueError("The rescaling factor must be nonzero.")
    position = algebra.ring.nvars - 1
    generators = [
        Polynomial(
            algebra.ring,
            {e: c * _power(field, scale, -e[position]) for e, c in g.terms.items()},
        )
        for g in algebra.ideal.minimal_generators()
    ]
    ideal = GradedIdeal(algebra.ring, generators)
    parameters = result.parameters
    rescaled = BlowUpParameters(
        coefficients=tuple(
            c.scale(_power(field, scale, i)) if c else c
            for i, c in enumerate(parameters.coefficients, start=1)
        ),
        lam=field(parameters.lam) * _power(field, scale, result.degree),
        variable=parameters.variable,
    )
    other = cohomological_blowup(result.algebra_map, rescaled)
    if not ideal.equals(other.tilde_A.ideal):
        raise ConsistencyError(
            "Rescaled ideal {} differs from the blow-up ideal {}.".format(
                ideal, other.tilde_A.ideal
            )
        )
    return ideal
