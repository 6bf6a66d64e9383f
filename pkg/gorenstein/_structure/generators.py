# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Minimal generators of blow-up ideals, exact zero divisors and complete
intersections
"""
from dataclasses import dataclass

from .._apolarity import GradedIdeal, colon, kernel_space, map_rank, quotient
from .._blowup import blowup_ideal, split_monic
from .._blowup.construction import _scalar_multiple
from .._errors import ConsistencyError
from .._exact import Echelon, matrix
from .._polys import Polynomial


@dataclass(frozen=True)
class MinGenReport:
    """
    Minimal generators of a blow-up ideal through the complex
    :math:`(I:\\tau)/\\mathfrak{m}(I:\\tau) \\to I/\\mathfrak{m}I \\to
    (I:\\tau)/\\mathfrak{m}(I:\\tau) \\to I/\\mathfrak{m}I`

    Attributes
    ----------
    mu_I, mu_colon, mu_tilde : int
        Number of minimal generators of :math:`I`, :math:`(I : \\tau)` and
        the blow-up ideal.
    phi1 : dict
        Matrix of the map induced by inclusion, :math:`I/\\mathfrak{m}I \\to
        (I:\\tau)/\\mathfrak{m}(I:\\tau)`, for each source degree.
    phi2 : dict
        Matrix of multiplication by :math:`\\tau`,
        :math:`(I:\\tau)/\\mathfrak{m}(I:\\tau) \\to I/\\mathfrak{m}I`, for
        each source degree.
    dim_H, dim_H_prime : int
        Dimensions of :math:`\\ker\\phi_1/\\mathrm{im}\\,\\phi_2` and
        :math:`\\ker\\phi_2/\\mathrm{im}\\,\\phi_1`.
    U, W : tuple of :class:`gorenstein.Polynomial`
        Minimal generators spanning complements of :math:`\\ker\\phi_1` and
        :math:`\\ker\\phi_2`.
    """

    mu_I: int
    mu_colon: int
    mu_tilde: int
    phi1: dict
    phi2: dict
    dim_H: int
    dim_H_prime: int
    U: tuple
    W: tuple


def _constant_scalar(ideal, thom, polynomial):
    "The scalar of the constant coefficient of f against tau modulo I"
    _, _, coefficients = split_monic(polynomial, ideal.ring)
    algebra = quotient(ideal)
    return _scalar_multiple(
        algebra.normal_form(coefficients[-1]), algebra.normal_form(thom)
    )


def _require_blowup(ideal, thom, polynomial):
    lam = _constant_scalar(ideal, thom, polynomial)
    if not lam:
        raise ValueError(
            "The constant coefficient of '{}' is not a nonzero multiple of "
            "'{}' modulo {}.".format(polynomial, thom, ideal)
        )
    return blowup_ideal(ideal, thom, polynomial)


def mingen_coordinates(ideal, element):
    """
    Coordinates of an element of an ideal in :math:`J/\\mathfrak{m}J`

    Parameters
    ----------
    ideal : :class:`gorenstein.GradedIdeal`
    element : :class:`gorenstein.Polynomial`
        Homogeneous element of the ideal.

    Returns
    -------
    coordinates : dict
        Maps the position of each minimal generator in
        ``ideal.minimal_generators()`` to its nonzero coefficient.
    """
    if not element:
        return {}
    degree = element.degree
    remainder = ideal.multiples(degree).reduce(element.terms)
    order = ideal.ring.order
    coordinates = {}
    rebuilt = {}
    for position, generator in enumerate(ideal.minimal_generators()):
        if generator.degree != degree:
            continue
        pivot = max(generator.terms, key=order)
        value = remainder.get(pivot)
        if not value:
            continue
        coordinates[position] = value
        for key, coefficient in generator.terms.items():
            rebuilt[key] = rebuilt.get(key, ideal.field.zero) + value * coefficient
    if {k: v for k, v in rebuilt.items() if v} != remainder:
        raise ConsistencyError(
            "Element '{}' is not in the ideal {}.".format(element, ideal)
        )
    return coordinates


def _matrices(field, sources, targets, images, shift):
    "Per-degree matrices of a graded map given by sparse images"
    result = {}
    for degree in sorted({g.degree for g in sources}):
        columns = [i for i, g in enumerate(sources) if g.degree == degree]
        lines = [i for i, g in enumerate(targets) if g.degree == degree + shift]
        rows = [
            [images[column].get(line, field.zero) for column in columns]
            for line in lines
        ]
        result[degree] = matrix(rows, field, len(columns))
    return result


def _compose(outer, inner, field):
    "Image of a sparse vector under a map given by sparse images"
    result = {}
    for key, value in inner.items():
        for target, coefficient in outer[key].items():
            result[target] = result.get(target, field.zero) + value * coefficient
    return {k: v for k, v in result.items() if v}


def _complement(generators, kernel):
    "Generators whose positions are not echelon pivots of the kernel"
    pivots = set(kernel.pivots)
    return tuple(g for i, g in enumerate(generators) if i not in pivots)


def mingen_homology(ideal, thom, polynomial):
    """
    Compare the minimal generators of a blow-up ideal with those of
    :math:`I` and :math:`(I : \\tau)`

    Builds the maps :math:`\\phi_1` (inclusion) and :math:`\\phi_2`
    (multiplication by :math:`\\tau`) between the spaces of minimal
    generators, checks that they form a complex and that
    :math:`\\mu(\\tilde{I}) = \\mu(I) + \\dim H' + 1 =
    \\mu(I : \\tau) + \\dim H + 1`, counting :math:`\\mu(\\tilde{I})` directly.

    Parameters
    ----------
    ideal, thom, polynomial
        As in :func:`gorenstein.blowup_ideal`. The constant coefficient of
        ``polynomial`` must be :math:`\\lambda \\tau` modulo :math:`I` with
        :math:`\\lambda \\neq 0`.

    Returns
    -------
    report : :class:`gorenstein.MinGenReport`
    """
    blown = _require_blowup(ideal, thom, polynomial)
    field = ideal.field
    kernel = colon(ideal, thom)
    gens_ideal = ideal.minimal_generators()
    gens_kernel = kernel.minimal_generators()
    phi1 = [mingen_coordinates(kernel, g) for g in gens_ideal]
    phi2 = [mingen_coordinates(ideal, thom * g) for g in gens_kernel]
    for position, image in enumerate(phi2):
        if _compose(phi1, image, field):
            raise ConsistencyError(
                "The inclusion does not kill tau times '{}'.".format(
                    gens_kernel[position]
                )
            )
    for position, image in enumerate(phi1):
        if _compose(phi2, image, field):
            raise ConsistencyError(
                "Multiplication by '{}' does not kill the class of '{}'.".format(
                    thom, gens_ideal[position]
                )
            )
    kernel1 = kernel_space(field, lambda key: key, list(range(len(gens_ideal))), phi1)
    kernel2 = kernel_space(field, lambda key: key, list(range(len(gens_kernel))), phi2)
    rank1 = map_rank(field, list(range(len(gens_ideal))), phi1)
    rank2 = map_rank(field, list(range(len(gens_kernel))), phi2)
    dim_H = len(kernel1) - rank2
    dim_H_prime = len(kernel2) - rank1
    mu_tilde = blown.mu
    counts = (len(gens_ideal) + dim_H_prime + 1, len(gens_kernel) + dim_H + 1)
    if counts != (mu_tilde, mu_tilde):
        raise ConsistencyError(
            "Blow-up ideal {} has {} minimal generators; the homology predicts "
            "{} and {}.".format(blown, mu_tilde, *counts)
        )
    return MinGenReport(
        mu_I=len(gens_ideal),
        mu_colon=len(gens_kernel),
        mu_tilde=mu_tilde,
        phi1=_matrices(field, gens_ideal, gens_kernel, phi1, 0),
        phi2=_matrices(field, gens_kernel, gens_ideal, phi2, thom.degree),
        dim_H=dim_H,
        dim_H_prime=dim_H_prime,
        U=_complement(gens_ideal, kernel1),
        W=_complement(gens_kernel, kernel2),
    )


def exact_zero_divisor_partner(algebra, element):
    """
    Partner of an exact pair of zero divisors, if there is one

    The annihilator :math:`(0 :_A a)` is :math:`(I : a)/I`. When it is
    principal, its generator ``b`` is returned, and both
    :math:`(0 : a) = (b)` and :math:`(0 : b) = (a)` are checked.

    Parameters
    ----------
    algebra : :class:`gorenstein.ArtinianAlgebra`
    element : :class:`gorenstein.Polynomial`
        Homogeneous element of positive degree, nonzero in the algebra.

    Returns
    -------
    partner : :class:`gorenstein.Polynomial` or None
        In normal form.

    Examples
    --------
    >>> from gorenstein import GradedRing, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> ideal = GradedIdeal(ring, [parse_poly("x^3", ring), parse_poly("y^3", ring)])
    >>> str(exact_zero_divisor_partner(quotient(ideal), parse_poly("y^2", ring)))
    'y'
    """
    ideal = algebra.ideal
    ring = algebra.ring
    reduced = algebra.normal_form(element)
    if not reduced or not element.is_homogeneous() or element.degree < 1:
        raise ValueError(
            "Element '{}' must be homogeneous of positive degree and nonzero in "
            "the algebra.".format(element)
        )
    annihilator = colon(ideal, element)
    partner = None
    count = 0
    for degree in range(algebra.top_degree + 1):
        base = annihilator.multiples(degree).copy()
        base.extend(ideal.space(degree).rows())
        extra = Echelon(algebra.field, ring.order)
        for row in annihilator.space(degree).rows():
            extra.insert(base.reduce(row))
        count += len(extra)
        if len(extra) == 1 and partner is None:
            partner = Polynomial(ring, extra.rows()[0])
    if count != 1:
        return None
    partner = algebra.normal_form(partner)
    generated = GradedIdeal(ring, list(ideal.generators) + [partner])
    if not annihilator.equals(generated):
        raise ConsistencyError(
            "The annihilator of '{}' differs from the ideal plus its partner "
            "'{}'.".format(element, partner)
        )
    expected = GradedIdeal(ring, list(ideal.generators) + [element])
    if not colon(ideal, partner).equals(expected):
        raise ConsistencyError(
            "The annihilator of the partner '{}' differs from the ideal plus "
            "'{}'.".format(partner, element)
        )
    return partner


@dataclass(frozen=True)
class CompleteIntersectionReport:
    """
    Which of :math:`A`, :math:`T` and the blow-up are complete intersections

    Attributes
    ----------
    a_is_ci, t_is_ci, blowup_is_ci : bool
        Complete intersection tests as generator counts against the number
        of variables.
    tau_exact_zd : bool
        True if the Thom class is part of an exact pair of zero divisors.
    partner : :class:`gorenstein.Polynomial` or None
        The other element of the exact pair.
    mu : tuple of int
        :math:`\\mu(I)`, :math:`\\mu(I : \\tau)` and :math:`\\mu(\\tilde{I})`.
    """

    a_is_ci: bool
    t_is_ci: bool
    tau_exact_zd: bool
    blowup_is_ci: bool
    partner: object
    mu: tuple


def ci_classification(ideal, thom, polynomial):
    """
    Decide whether a blow-up is a complete intersection, three ways

    The blow-up is a complete intersection exactly when :math:`A` is one and
    :math:`\\tau` is part of an exact pair of zero divisors, and exactly when
    :math:`T` is one and the same holds. All three decisions are computed
    independently and a :class:`gorenstein.ConsistencyError` is raised if
    they disagree.

    Parameters
    ----------
    ideal, thom, polynomial
        As in :func:`gorenstein.mingen_homology`.

    Returns
    -------
    report : :class:`gorenstein.CompleteIntersectionReport`
    """
    blown = _require_blowup(ideal, thom, polynomial)
    nvars = ideal.ring.nvars
    kernel = colon(ideal, thom)
    partner = exact_zero_divisor_partner(quotient(ideal), thom)
    report = CompleteIntersectionReport(
        a_is_ci=ideal.mu == nvars,
        t_is_ci=kernel.mu == nvars,
        tau_exact_zd=partner is not None,
        blowup_is_ci=blown.mu == nvars + 1,
        partner=partner,
        mu=(ideal.mu, kernel.mu, blown.mu),
    )
    answers = (
        report.blowup_is_ci,
        report.a_is_ci and report.tau_exact_zd,
        report.t_is_ci and report.tau_exact_zd,
    )
    if len(set(answers)) != 1:
        raise ConsistencyError(
            "Complete intersection tests disagree: blow-up={}, A and exact={}, "
            "T and exact={}.".format(*answers)
        )
    return report
