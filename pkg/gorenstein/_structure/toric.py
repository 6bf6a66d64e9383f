# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Cohomology rings of complete simplicial toric varieties
"""
import warnings
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .._apolarity import GradedIdeal, quotient
from .._errors import ConsistencyError, InvalidFan
from .._exact import QQ_FIELD, Echelon
from .._polys import GradedRing, Polynomial


@dataclass(frozen=True)
class ToricFan:
    """
    Complete simplicial fan given by its rays and maximal cones

    Fans in the plane are checked to be complete and simplicial: sorted by
    angle, consecutive rays must span a cone of angle less than
    :math:`\\pi` and the maximal cones must be exactly these pairs. Fans of
    other dimensions are accepted with ``validated = False`` and a warning.

    Parameters
    ----------
    rays : sequence of sequences of int
        Primitive integer generators :math:`u_i` of the rays.
    cones : sequence of sequences of int
        Maximal cones as lists of positions in ``rays``.
    """

    rays: tuple
    cones: tuple
    validated: bool = False

    def __post_init__(self):
        rays = np.asarray(self.rays)
        if rays.ndim != 2 or rays.shape[0] == 0 or rays.shape[1] == 0:
            raise InvalidFan("Rays must be a nonempty list of integer vectors.")
        if not np.issubdtype(rays.dtype, np.integer):
            raise InvalidFan("Rays must have integer coordinates.")
        if np.any(np.gcd.reduce(np.abs(rays), axis=1) != 1):
            raise InvalidFan("Rays must be nonzero primitive vectors.")
        if len({tuple(ray) for ray in rays.tolist()}) != rays.shape[0]:
            raise InvalidFan("Repeated rays.")
        cones = tuple(tuple(sorted(int(i) for i in cone)) for cone in self.cones)
        dimension = rays.shape[1]
        for cone in cones:
            if (
                not cone
                or len(set(cone)) != len(cone)
                or len(cone) > dimension
                or cone[0] < 0
                or cone[-1] >= rays.shape[0]
            ):
                raise InvalidFan("Invalid cone {}.".format(cone))
        object.__setattr__(self, "rays", tuple(tuple(ray) for ray in rays.tolist()))
        object.__setattr__(self, "cones", cones)
        if dimension == 2:
            _validate_planar(rays, cones)
            object.__setattr__(self, "validated", True)
        else:
            warnings.warn(
                "Fans of dimension {} are not checked to be complete and "
                "simplicial.".format(dimension),
                UserWarning,
                stacklevel=3,
            )
            object.__setattr__(self, "validated", False)

    @property
    def dimension(self):
        "Dimension of the ambient lattice."
        return len(self.rays[0])

    def is_face(self, indices):
        "True if the rays lie in a common cone."
        indices = set(indices)
        return any(indices <= set(cone) for cone in self.cones)


def _validate_planar(rays, cones):
    if rays.shape[0] < 3:
        raise InvalidFan("A complete fan in the plane needs at least 3 rays.")
    order = np.argsort(np.arctan2(rays[:, 1], rays[:, 0]), kind="stable")
    expected = set()
    for first, second in zip(order, np.roll(order, -1)):
        determinant = (
            rays[first, 0] * rays[second, 1] - rays[first, 1] * rays[second, 0]
        )
        if determinant <= 0:
            raise InvalidFan(
                "Consecutive rays {} and {} do not span a strictly convex "
                "cone.".format(rays[first].tolist(), rays[second].tolist())
            )
        expected.add(tuple(sorted((int(first), int(second)))))
    if set(cones) != expected or len(cones) != len(expected):
        raise InvalidFan(
            "The maximal cones {} are not the pairs of consecutive rays {}.".format(
                sorted(cones), sorted(expected)
            )
        )


@dataclass(frozen=True)
class ToricPresentation:
    """
    Presentation of the rational cohomology ring of a toric variety

    Attributes
    ----------
    fan : :class:`gorenstein.ToricFan`
    ring : :class:`gorenstein.GradedRing`
        One variable :math:`x_i` per ray.
    ideal : :class:`gorenstein.GradedIdeal`
        Stanley-Reisner ideal of the non-faces plus the linear forms
        :math:`\\sum_i \\langle m, u_i \\rangle x_i`.
    algebra : :class:`gorenstein.ArtinianAlgebra`
    reduced_ring : :class:`gorenstein.GradedRing`
        The variables left after solving the linear forms for the last
        variables.
    reduced_ideal : :class:`gorenstein.GradedIdeal`
        The Stanley-Reisner generators after substitution.
    reduced_algebra : :class:`gorenstein.ArtinianAlgebra`
    """

    fan: ToricFan
    ring: GradedRing
    ideal: GradedIdeal
    algebra: object
    reduced_ring: GradedRing
    reduced_ideal: GradedIdeal
    reduced_algebra: object

    @property
    def hilbert(self):
        "Hilbert function of the cohomology ring."
        return self.algebra.hilbert


def minimal_nonfaces(fan):
    """
    Sets of rays not in a common cone whose proper subsets all are

    Returns
    -------
    nonfaces : list of tuples
        Sorted positions in ``fan.rays``.
    """
    nonfaces = []
    for size in range(1, fan.dimension + 2):
        for subset in combinations(range(len(fan.rays)), size):
            if fan.is_face(subset):
                continue
            if all(fan.is_face(smaller) for smaller in combinations(subset, size - 1)):
                nonfaces.append(subset)
    return nonfaces


def _substitute(polynomial, images, ring):
    "Evaluate a polynomial at images of its variables"
    result = Polynomial.zero(ring)
    for exponents, coefficient in polynomial.terms.items():
        term = Polynomial.constant(ring, coefficient)
        for image, power in zip(images, exponents):
            if power:
                term = term * image**power
        result = result + term
    return result


def toric_presentation(fan, names=None):
    """
    Cohomology ring of the toric variety of a complete simplicial fan

    The ring is :math:`\\mathbb{Q}[x_1, \\dots, x_r]/(I + J)` with ``I`` the
    square-free monomial ideal of the non-faces and ``J`` spanned by
    :math:`\\sum_i \\langle e_j, u_i \\rangle x_i` for the standard basis
    :math:`e_j` of the dual lattice. The reduced presentation eliminates the
    forms of ``J``, each solved for the last variable it involves, and has
    the same Hilbert function, which is checked.

    Parameters
    ----------
    fan : :class:`gorenstein.ToricFan`
    names : sequence of str or None
        Variable names, one per ray. Defaults to ``x1, x2, ...``.

    Returns
    -------
    presentation : :class:`gorenstein.ToricPresentation`

    Examples
    --------
    >>> plane = ToricFan(((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2)))
    >>> presentation = toric_presentation(plane)
    >>> presentation.hilbert
    (1, 1, 1)
    >>> str(presentation.reduced_ideal)
    '(x1^3)'
    """
    nrays = len(fan.rays)
    if names is None:
        names = tuple("x{}".format(i + 1) for i in range(nrays))
    if len(names) != nrays:
        raise ValueError(
            "Got {} variable names for {} rays.".format(len(names), nrays)
        )
    ring = GradedRing(tuple(names), field=QQ_FIELD)
    monomials = []
    for subset in minimal_nonfaces(fan):
        exponents = [0] * nrays
        for i in subset:
            exponents[i] = 1
        monomials.append(Polynomial.monomial(ring, exponents))
    rays = np.asarray(fan.rays)
    forms = Echelon(ring.field, lambda key: key)
    linear = []
    for column in rays.T.tolist():
        form = {i: ring.field(value) for i, value in enumerate(column) if value}
        linear.append(Polynomial(ring, {_unit(nrays, i): v for i, v in form.items()}))
        forms.insert(form)
    ideal = GradedIdeal(ring, monomials + linear)
    algebra = quotient(ideal)
    solved = {pivot: row for pivot, row in zip(forms.pivots, forms.rows())}
    free = [i for i in range(nrays) if i not in solved]
    reduced_ring = GradedRing(tuple(names[i] for i in free), field=QQ_FIELD)
    images = []
    for i in range(nrays):
        if i in solved:
            image = Polynomial.zero(reduced_ring)
            for key, value in solved[i].items():
                if key != i:
                    image = image - Polynomial.variable(reduced_ring, names[key]).scale(
                        value
                    )
        else:
            image = Polynomial.variable(reduced_ring, names[i])
        images.append(image)
    reduced_ideal = GradedIdeal(
        reduced_ring, [_substitute(m, images, reduced_ring) for m in monomials]
    )
    reduced_algebra = quotient(reduced_ideal)
    if reduced_algebra.hilbert != algebra.hilbert:
        raise ConsistencyError(
            "Reduced presentation {} has Hilbert function {} instead of {}.".format(
                reduced_ideal, reduced_algebra.hilbert, algebra.hilbert
            )
        )
    return ToricPresentation(
        fan=fan,
        ring=ring,
        ideal=ideal,
        algebra=algebra,
        reduced_ring=reduced_ring,
        reduced_ideal=reduced_ideal,
        reduced_algebra=reduced_algebra,
    )


def _unit(size, index):
    exponents = [0] * size
    exponents[index] = 1
    return tuple(exponents)
