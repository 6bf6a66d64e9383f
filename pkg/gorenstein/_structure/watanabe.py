# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Embedding of complete intersections into complete intersections of quadrics
"""
import math
from dataclasses import dataclass
from itertools import count

from .._apolarity import GradedIdeal, natural_map, quotient
from .._blowup import blowup_ideal, blowup_ring
from .._errors import ConsistencyError, NotArtinian, NotFactored, NotRegularSequence
from .._polys import Polynomial
from ..constants import EMBEDDING_VARIABLES


@dataclass(frozen=True)
class WatanabeStep:
    """
    One blow-up of the embedding chain

    Attributes
    ----------
    thom : :class:`gorenstein.Polynomial`
        The factor :math:`\\tau` of degree 2 blown up along.
    cofactor : :class:`gorenstein.Polynomial`
        The rest :math:`g` of the generator :math:`f = \\tau g`.
    variable : str
        The adjoined variable :math:`\\xi`.
    ideal : :class:`gorenstein.GradedIdeal`
        The complete intersection after the step.
    degrees : tuple of int
        Degrees of its generators.
    defect : int
        Sum of the degrees minus twice their number.
    """

    thom: Polynomial
    cofactor: Polynomial
    variable: str
    ideal: GradedIdeal
    degrees: tuple
    defect: int


@dataclass(frozen=True)
class WatanabeReport:
    """
    Chain of blow-ups ending in a complete intersection of quadrics

    Attributes
    ----------
    source : :class:`gorenstein.ArtinianAlgebra`
        The complete intersection :math:`A` to embed.
    degrees : tuple of int
        Degrees of the generators of :math:`A`.
    defect : int
        Defect of :math:`A`.
    steps : tuple of :class:`gorenstein.WatanabeStep`
    algebra : :class:`gorenstein.ArtinianAlgebra`
        The final complete intersection :math:`B`, cut out by quadrics.
    embedding : :class:`gorenstein.AlgebraMap`
        The composed map :math:`A \\to B`.
    socle_image : :class:`gorenstein.Polynomial`
        Image of the socle generator of :math:`A`, nonzero.
    """

    source: object
    degrees: tuple
    defect: int
    steps: tuple
    algebra: object
    embedding: object
    socle_image: Polynomial

    @property
    def final_defect(self):
        "Defect of the last complete intersection."
        return self.steps[-1].defect if self.steps else self.defect


def _fresh_names(taken):
    "Names from EMBEDDING_VARIABLES, then xi2, xi3, ..., skipping used ones"
    for name in EMBEDDING_VARIABLES:
        if name not in taken:
            yield name
    for index in count(2):
        name = "{}{}".format(EMBEDDING_VARIABLES[0], index)
        if name not in taken:
            yield name


def _product(factors, ring):
    result = Polynomial.constant(ring, 1)
    for factor in factors:
        result = result * factor
    return result


def _defect(degrees):
    return sum(degrees) - 2 * len(degrees)


def _validate(factored):
    if not factored or not all(factored):
        raise ValueError("Every generator needs at least one factor.")
    ring = factored[0][0].ring
    if ring.dual or not ring.is_standard:
        raise ValueError(
            "Complete intersections are embedded from standard graded primal "
            "rings, not {}.".format(ring)
        )
    for factors in factored:
        for factor in factors:
            if factor.ring != ring:
                raise ValueError(
                    "Factors from different rings: {} and {}.".format(
                        factor.ring, ring
                    )
                )
            if (
                not factor
                or not factor.is_homogeneous()
                or factor.degree not in (1, 2)
            ):
                raise NotFactored(
                    "Factor '{}' is not a form of degree 1 or 2.".format(factor)
                )
    generators = [_product(factors, ring) for factors in factored]
    degrees = tuple(g.degree for g in generators)
    if min(degrees) < 2:
        raise NotRegularSequence(
            "Generators of degree {} can be eliminated with their "
            "variable.".format(min(degrees))
        )
    ideal = GradedIdeal(ring, generators)
    try:
        dimension = sum(ideal.hilbert())
    except NotArtinian:
        dimension = None
    if (
        len(generators) != ring.nvars
        or ideal.mu != ring.nvars
        or dimension != math.prod(degrees)
    ):
        raise NotRegularSequence(
            "Generators ({}) do not form a regular sequence of {} forms.".format(
                ", ".join(str(g) for g in generators), ring.nvars
            )
        )
    return ring, ideal, degrees


def _split(factors, ring):
    "The leftmost quadratic factor, or the product of two linear factors"
    for position, factor in enumerate(factors):
        if factor.degree == 2:
            return factor, factors[:position] + factors[position + 1 :]
    return factors[0] * factors[1], factors[2:]


def watanabe_embed(factored):
    """
    Embed a complete intersection into a complete intersection of quadrics

    While some generator has degree at least 3, the last generator of
    largest degree :math:`f = \\tau g` is split with :math:`\\tau` its
    leftmost quadratic factor (or the product of its first two linear
    factors), and the algebra is blown up along :math:`A \\to
    R/(I : \\tau)` with :math:`\\xi^2 - \\tau`. The generator ``f`` is
    replaced by :math:`\\xi g` and :math:`\\xi^2 - \\tau`, so the defect
    drops by one at every step while the socle degree stays the same.

    Parameters
    ----------
    factored : sequence of sequences of :class:`gorenstein.Polynomial`
        For each generator of a regular sequence, its factors, each a form
        of degree 1 or 2.

    Returns
    -------
    report : :class:`gorenstein.WatanabeReport`

    Raises
    ------
    gorenstein.NotFactored
        If a factor has degree 0 or more than 2.
    gorenstein.NotRegularSequence
        If the number of generators is not the number of variables or the
        quotient does not have dimension equal to the product of the degrees.
    """
    factored = [list(factors) for factors in factored]
    ring, ideal, degrees = _validate(factored)
    source = quotient(ideal)
    socle_degree = source.top_degree
    names = _fresh_names(set(ring.names))
    current = factored
    defect = _defect(degrees)
    steps = []
    while defect > 0:
        sizes = [sum(f.degree for f in factors) for factors in current]
        index = max(range(len(current)), key=lambda i: (sizes[i], i))
        thom, rest = _split(current[index], ring)
        cofactor = _product(rest, ring)
        big = blowup_ring(ring, next(names))
        variable = big.names[-1]
        xi = Polynomial.variable(big, variable)
        polynomial = xi * xi - thom.embed(big)
        current = (
            [[f.embed(big) for f in factors] for factors in current[:index]]
            + [[f.embed(big) for f in factors] for factors in current[index + 1 :]]
            + [[xi] + [f.embed(big) for f in rest], [polynomial]]
        )
        blown = GradedIdeal(big, [_product(factors, big) for factors in current])
        expected = blowup_ideal(ideal, thom, polynomial)
        if not blown.equals(expected):
            raise ConsistencyError(
                "Step ideal {} differs from the blow-up ideal {}.".format(
                    blown, expected
                )
            )
        step_degrees = tuple(sum(f.degree for f in factors) for factors in current)
        if blown.mu != big.nvars:
            raise ConsistencyError(
                "Step ideal {} is not a complete intersection.".format(blown)
            )
        if blown.top_degree != socle_degree:
            raise ConsistencyError(
                "Socle degree changed from {} to {} at '{}'.".format(
                    socle_degree, blown.top_degree, variable
                )
            )
        if _defect(step_degrees) != defect - 1:
            raise ConsistencyError(
                "Defect went from {} to {}.".format(defect, _defect(step_degrees))
            )
        defect -= 1
        steps.append(
            WatanabeStep(
                thom=thom,
                cofactor=cofactor,
                variable=variable,
                ideal=blown,
                degrees=step_degrees,
                defect=defect,
            )
        )
        ring, ideal = big, blown
    algebra = quotient(ideal)
    embedding = natural_map(source, algebra)
    (socle,) = source.socle()[socle_degree]
    socle_image = embedding.apply(socle)
    if not socle_image:
        raise ConsistencyError(
            "The embedding sends the socle generator '{}' to zero.".format(socle)
        )
    return WatanabeReport(
        source=source,
        degrees=degrees,
        defect=_defect(degrees),
        steps=tuple(steps),
        algebra=algebra,
        embedding=embedding,
        socle_image=socle_image,
    )
