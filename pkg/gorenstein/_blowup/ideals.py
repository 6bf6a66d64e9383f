# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Blow-ups presented by their defining ideals
"""
from .._apolarity import GradedIdeal, colon, natural_map, quotient
from .._errors import ConsistencyError, DegenerateColon, NotGorenstein
from .._polys import Polynomial
from .construction import _scalar_multiple, hat_ideal, split_monic


def blowup_ideal(ideal, thom, polynomial):
    """
    The ideal :math:`I R[\\xi] + \\xi (I : \\tau) R[\\xi] + (f)`

    The result is checked degree by degree against the quotient
    presentation along :math:`R/I \\to R/(I : \\tau)`. When the constant
    coefficient of ``f`` is :math:`\\lambda \\tau` modulo :math:`I` with
    :math:`\\lambda \\neq 0`, the colon identity
    :math:`(\\tilde{I} : \\xi) = (I : \\tau) R[\\xi] + (f)` is checked too.

    Parameters
    ----------
    ideal : :class:`gorenstein.GradedIdeal`
        Gorenstein ideal :math:`I` with Artinian quotient.
    thom : :class:`gorenstein.Polynomial`
        Homogeneous :math:`\\tau` with :math:`I \\subsetneq (I : \\tau)
        \\subsetneq R`.
    polynomial : :class:`gorenstein.Polynomial`
        Monic homogeneous :math:`f` in the blow-up variable.

    Returns
    -------
    ideal : :class:`gorenstein.GradedIdeal`
        Over the ring of ``polynomial``.

    Raises
    ------
    gorenstein.DegenerateColon
        If :math:`(I : \\tau)` is :math:`I` or :math:`R`.
    """
    ring = ideal.ring
    source = quotient(ideal)
    if not source.is_gorenstein():
        raise NotGorenstein(
            "The quotient by {} has a socle of dimension {}.".format(
                ideal, source.socle_dimension
            )
        )
    kernel = colon(ideal, thom)
    if kernel.is_unit():
        raise DegenerateColon(
            "The colon of {} by '{}' is the whole ring.".format(ideal, thom)
        )
    if kernel.equals(ideal):
        raise DegenerateColon(
            "The colon of {} by '{}' is the ideal itself.".format(ideal, thom)
        )
    variable, _, coefficients = split_monic(polynomial, ring)
    big = polynomial.ring
    xi = Polynomial.variable(big, variable)
    result = GradedIdeal(
        big,
        [g.embed(big) for g in ideal.minimal_generators()]
        + [xi * g.embed(big) for g in kernel.minimal_generators()]
        + [polynomial],
    )
    projection = natural_map(source, quotient(kernel))
    presentation = hat_ideal(projection, polynomial)
    if not result.equals(presentation):
        raise ConsistencyError(
            "Ideal {} differs from the quotient presentation {}.".format(
                result, presentation
            )
        )
    lam = _scalar_multiple(
        source.normal_form(coefficients[-1]), source.normal_form(thom)
    )
    if lam:
        expected = GradedIdeal(
            big, [g.embed(big) for g in kernel.minimal_generators()] + [polynomial]
        )
        if not colon(result, xi).equals(expected):
            raise ConsistencyError(
                "The colon of {} by '{}' is not {}.".format(result, variable, expected)
            )
    return result
