# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Connected sums and fibered products of Artinian Gorenstein algebras
"""
from dataclasses import dataclass

from .._apolarity import (
    GradedIdeal,
    annihilator,
    hilbert_combination,
    ideal_combine,
    natural_map,
    orient,
    quotient,
    thom_class,
)
from .._blowup import bumd_status, split_monic
from .._blowup.construction import _scalar_multiple
from .._errors import ConditionFailed, ConsistencyError, RingMismatch
from .._polys import Polynomial, contract


@dataclass
class ConnectedSumData:
    """
    A connected sum :math:`A \\#_T B` presented through dual generators

    Attributes
    ----------
    form, other : :class:`gorenstein.Polynomial`
        The dual forms :math:`F` and :math:`H` of common degree ``d``.
    sigma : :class:`gorenstein.Polynomial`
        Primal element of degree :math:`d - k` with
        :math:`\\sigma \\circ F = \\sigma \\circ H \\neq 0`.
    source, other_algebra : :class:`gorenstein.OrientedAlgebra`
        :math:`A = Q/\\mathrm{Ann}(F)` and :math:`B = Q/\\mathrm{Ann}(H)`.
    common_quotient : :class:`gorenstein.OrientedAlgebra`
        :math:`T = Q/\\mathrm{Ann}(\\sigma \\circ F)`.
    fibered_product : :class:`gorenstein.ArtinianAlgebra`
        :math:`Q/(\\mathrm{Ann}(F) \\cap \\mathrm{Ann}(H))`.
    connected_sum : :class:`gorenstein.ArtinianAlgebra`
        :math:`Q/\\mathrm{Ann}(F - H)`.
    total_thom : tuple of :class:`gorenstein.Polynomial`
        The Thom classes :math:`(\\tau_A, \\tau_B)` of the projections onto
        ``common_quotient``, in normal form.
    """

    form: Polynomial
    other: Polynomial
    sigma: Polynomial
    source: object
    other_algebra: object
    common_quotient: object
    fibered_product: object
    connected_sum: object
    total_thom: tuple

    def hilbert_identities(self):
        """
        Check the Hilbert functions of the fibered product and the sum

        :math:`H(A \\times_T B) = H(A) + H(B) - H(T)` and
        :math:`H(A \\#_T B) = H(A \\times_T B) - H(T)[d - k]`, in every
        degree. Raises :class:`gorenstein.ConsistencyError` otherwise.

        Returns
        -------
        hilbert : tuple
            The Hilbert functions of the fibered product and of the connected
            sum.
        """
        source = self.source.hilbert
        other = self.other_algebra.hilbert
        common = self.common_quotient.hilbert
        product = hilbert_combination((1, source, 0), (1, other, 0), (-1, common, 0))
        total = hilbert_combination((1, product, 0), (-1, common, self.sigma.degree))
        for name, expected, algebra in [
            ("fibered product", product, self.fibered_product),
            ("connected sum", total, self.connected_sum),
        ]:
            if algebra.hilbert != expected:
                raise ConsistencyError(
                    "The {} has Hilbert function {} instead of {}.".format(
                        name, algebra.hilbert, expected
                    )
                )
        return self.fibered_product.hilbert, self.connected_sum.hilbert


def _first_difference(first, second, top):
    "First degree where two ideals have pieces of different dimension"
    for degree in range(top + 1):
        if first.dimension(degree) != second.dimension(degree):
            return degree
    return None


def connected_sum(form, other, sigma):
    """
    Recognize :math:`Q/\\mathrm{Ann}(F - H)` as a connected sum over
    :math:`T = Q/\\mathrm{Ann}(\\sigma \\circ F)`

    Checks the two conditions :math:`\\sigma \\circ F = \\sigma \\circ H \\neq
    0` and :math:`\\mathrm{Ann}(\\sigma \\circ F) = \\mathrm{Ann}(F) +
    \\mathrm{Ann}(H)`, then builds the fibered product and the connected sum.
    The Thom classes of both projections onto ``T`` are computed from the
    orientations and compared with :math:`\\sigma`.

    Parameters
    ----------
    form, other : :class:`gorenstein.Polynomial`
        Linearly independent dual forms of the same degree.
    sigma : :class:`gorenstein.Polynomial`
        Homogeneous element of the mirror primal ring.

    Returns
    -------
    data : :class:`gorenstein.ConnectedSumData`

    Raises
    ------
    gorenstein.ConditionFailed
        With ``condition`` 1 or 2. For the second condition, ``degree`` is
        the first degree where the ideals differ.

    Examples
    --------
    >>> from gorenstein import GradedRing, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> dual = ring.mirror()
    >>> forms = [parse_poly("X^2", dual), parse_poly("Y^2", dual)]
    >>> data = connected_sum(*forms, parse_poly("x^2 + y^2", ring))
    >>> data.connected_sum.hilbert
    (1, 2, 1)
    """
    if form.ring != other.ring:
        raise RingMismatch(
            "Forms of different rings: {} and {}.".format(form.ring, other.ring)
        )
    if sigma.ring != form.ring.mirror():
        raise RingMismatch(
            "Element '{}' of {} does not act on {}.".format(
                sigma, sigma.ring, form.ring
            )
        )
    for name, value in [("F", form), ("H", other)]:
        if not value or not value.is_homogeneous():
            raise ValueError(
                "Form {} = '{}' must be nonzero and homogeneous.".format(name, value)
            )
    if form.degree != other.degree:
        raise ValueError(
            "Forms of different degrees: {} and {}.".format(form.degree, other.degree)
        )
    if _scalar_multiple(other, form) is not None:
        raise ValueError(
            "Forms '{}' and '{}' are linearly dependent.".format(form, other)
        )
    if not sigma.is_homogeneous():
        raise ValueError("Element '{}' is not homogeneous.".format(sigma))
    common = contract(sigma, form)
    if not common or common != contract(sigma, other):
        raise ConditionFailed(1)
    ann_form, ann_other = annihilator(form), annihilator(other)
    ann_common = annihilator(common)
    total = ideal_combine("sum", ann_form, ann_other)
    degree = _first_difference(ann_common, total, form.degree + 1)
    if degree is not None:
        raise ConditionFailed(2, degree=degree)
    source = orient(quotient(ann_form), dual_generator=form)
    other_algebra = orient(quotient(ann_other), dual_generator=other)
    target = orient(quotient(ann_common), dual_generator=common)
    thom_classes = []
    for algebra in (source, other_algebra):
        thom = thom_class(natural_map(algebra, target)).thom_class
        expected = algebra.normal_form(sigma)
        if thom != expected:
            raise ConsistencyError(
                "Thom class '{}' differs from the class '{}' of '{}'.".format(
                    thom, expected, sigma
                )
            )
        thom_classes.append(thom)
    return ConnectedSumData(
        form=form,
        other=other,
        sigma=sigma,
        source=source,
        other_algebra=other_algebra,
        common_quotient=target,
        fibered_product=quotient(ideal_combine("intersection", ann_form, ann_other)),
        connected_sum=quotient(annihilator(form - other)),
        total_thom=tuple(thom_classes),
    )


@dataclass(frozen=True)
class ConnectedSumReport:
    """
    Outcome of a check that an algebra is a connected sum

    Attributes
    ----------
    passed : bool
        True if the connected sum defines the expected algebra.
    data : :class:`gorenstein.ConnectedSumData`
    exceptional_thom : :class:`gorenstein.Polynomial` or None
        Thom class of :math:`B \\to T` when ``T`` is oriented by its own
        dual generator (blow-ups only).
    """

    passed: bool
    data: ConnectedSumData
    exceptional_thom: object = None


def verify_blowup_as_connected_sum(form, target, thom, polynomial, lam):
    """
    Check that a blow-up given by dual generators is a connected sum

    With :math:`\\hat{F} = F - \\lambda \\Xi \\tilde{G}`, the blow-up
    :math:`R[\\xi]/\\mathrm{Ann}(\\hat{F})` is the connected sum of
    :math:`A = R[\\xi]/\\mathrm{Ann}(F)` and
    :math:`B = R[\\xi]/\\mathrm{Ann}(H)`, :math:`H = \\lambda \\Xi \\tilde{G}`,
    over :math:`T = R[\\xi]/\\mathrm{Ann}(G)` with :math:`\\sigma = f - r`,
    where ``r`` is the correction found by
    :func:`gorenstein.bumd_status`. The Thom class of :math:`B \\to T` with
    ``T`` oriented by ``G`` is checked to be :math:`\\lambda^{-1}\\sigma`.

    Parameters
    ----------
    form, target, thom, polynomial, lam
        As in :func:`gorenstein.blowup_dual`. The data must define a
        blow-up.

    Returns
    -------
    report : :class:`gorenstein.ConnectedSumReport`
    """
    status = bumd_status(form, target, thom, polynomial, lam)
    if not status.is_blowup:
        raise ValueError(
            "The dual form '{}' does not define a blow-up.".format(status.dual.form)
        )
    big = polynomial.ring
    dual_ring = big.mirror()
    lam = big.field(lam)
    sigma = polynomial - status.correction.embed(big)
    embedded = form.embed(dual_ring)
    other = embedded - status.dual.form
    data = connected_sum(embedded, other, sigma)
    passed = annihilator(status.dual.form).equals(data.connected_sum.ideal)
    exceptional = data.other_algebra
    base = target.embed(dual_ring)
    projection = natural_map(
        exceptional, orient(quotient(annihilator(base)), dual_generator=base)
    )
    exceptional_thom = thom_class(projection).thom_class
    expected = exceptional.normal_form(sigma.scale(big.field.inverse(lam)))
    if exceptional_thom != expected:
        raise ConsistencyError(
            "Thom class '{}' of the exceptional summand is not '{}'.".format(
                exceptional_thom, expected
            )
        )
    return ConnectedSumReport(
        passed=passed, data=data, exceptional_thom=exceptional_thom
    )


def verify_blowdown_as_connected_sum(result):
    """
    Check that a blow-down is a connected sum

    Splits the dual generator of the blow-up as :math:`\\tilde{F} = F_0 + P`
    with :math:`F_0` free of the blow-up variable, and runs
    :func:`gorenstein.connected_sum` on :math:`(\\tilde{F}, P)` with
    :math:`\\sigma = \\xi`. The connected sum must be
    :math:`\\mathrm{Ann}_R(F) R[\\xi] + (\\xi)` and the common quotient the
    exceptional divisor.

    Parameters
    ----------
    result : :class:`gorenstein.BlowUpResult`

    Returns
    -------
    report : :class:`gorenstein.ConnectedSumReport`
    """
    algebra = result.tilde_A
    ring = algebra.ring
    variable, _, _ = split_monic(result.polynomial, result.algebra_map.source.ring)
    position = ring.index(variable)
    dual = algebra.dual_generator
    exceptional = Polynomial(
        dual.ring, {e: c for e, c in dual.terms.items() if e[position]}
    )
    data = connected_sum(dual, exceptional, Polynomial.variable(ring, variable))
    source = result.algebra_map.source
    expected = GradedIdeal(
        ring,
        [g.embed(ring) for g in source.ideal.minimal_generators()]
        + [Polynomial.variable(ring, variable)],
    )
    passed = data.connected_sum.ideal.equals(expected) and (
        data.common_quotient.ideal.equals(result.tilde_T.ideal)
    )
    return ConnectedSumReport(passed=passed, data=data)
