# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Degree preserving algebra maps and their Thom classes
"""
import warnings
from dataclasses import dataclass

from .._errors import ConsistencyError, IllDefined, OrientationMissing, RingMismatch
from .._exact import mat_solve, matrix
from .._polys import Polynomial, contract
from .algebra import OrientedAlgebra
from .ideal import GradedIdeal, kernel_space


def _plain(algebra):
    "The underlying quotient of a possibly oriented algebra"
    if isinstance(algebra, OrientedAlgebra):
        return algebra.algebra
    return algebra


class AlgebraMap:
    """
    Degree preserving algebra map between Artinian quotients

    Determined by the images of the source variables. Build instances with
    :func:`gorenstein.make_map`, which checks that the map is well defined
    and computes its kernel.

    Attributes
    ----------
    source, target : :class:`gorenstein.OrientedAlgebra` or
        :class:`gorenstein.ArtinianAlgebra`
    images : tuple of :class:`gorenstein.Polynomial`
        Normal forms in the target of the images of the source variables.
    kernel : :class:`gorenstein.GradedIdeal`
        Preimage of zero in the source polynomial ring. It contains the
        ideal of the source.
    surjective : bool
    """

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = tuple(images)
        self.kernel = None
        self.surjective = None
        self._monomials = {}

    def _apply_monomial(self, exponents):
        if exponents in self._monomials:
            return self._monomials[exponents]
        target = _plain(self.target)
        for j, e in enumerate(exponents):
            if e:
                lower = list(exponents)
                lower[j] -= 1
                image = target.multiply(
                    self._apply_monomial(tuple(lower)), self.images[j]
                )
                break
        else:
            image = Polynomial.constant(target.ring, 1)
        self._monomials[exponents] = image
        return image

    def apply(self, polynomial):
        """
        Image of a source polynomial, in normal form in the target
        """
        source, target = _plain(self.source), _plain(self.target)
        source._check(polynomial)
        result = Polynomial.zero(target.ring)
        for exponents, coefficient in polynomial.terms.items():
            result = result + self._apply_monomial(exponents).scale(coefficient)
        return result

    def image_dimension(self, degree):
        "Dimension of the image in one degree."
        source = _plain(self.source)
        sources = source.ring.monomials(degree)
        images = [self._apply_monomial(m).terms for m in sources]
        kernel = kernel_space(source.field, source.ring.order, sources, images)
        return len(sources) - len(kernel)

    def __repr__(self):
        names = _plain(self.source).ring.names
        return "AlgebraMap({})".format(
            ", ".join("{} -> {}".format(n, i) for n, i in zip(names, self.images))
        )


def make_map(source, target, images):
    """
    Algebra map given by the images of the source variables

    Parameters
    ----------
    source, target : :class:`gorenstein.OrientedAlgebra` or
        :class:`gorenstein.ArtinianAlgebra`
    images : list or dict
        Homogeneous polynomials of the target ring, one per source variable
        in order, or a dictionary from source variable names to images.
        Each image has the weight of its variable (or is zero).

    Returns
    -------
    algebra_map : :class:`gorenstein.AlgebraMap`

    Raises
    ------
    gorenstein.IllDefined
        If a generator of the source ideal is not sent to zero, or an image
        has the wrong degree.
    """
    plain_source, plain_target = _plain(source), _plain(target)
    ring = plain_source.ring
    if isinstance(images, dict):
        unknown = set(images) - set(ring.names)
        if unknown:
            raise ValueError(
                "Images given for unknown variables {}.".format(
                    ", ".join(sorted(unknown))
                )
            )
        images = [
            images.get(name, Polynomial.zero(plain_target.ring)) for name in ring.names
        ]
    images = list(images)
    if len(images) != ring.nvars:
        raise ValueError(
            "Got {} images for the {} variables of {}.".format(
                len(images), ring.nvars, ring
            )
        )
    reduced = []
    for name, weight, image in zip(ring.names, ring.weights, images):
        if image.ring != plain_target.ring:
            raise RingMismatch(
                "Image of '{}' lives in {} instead of {}.".format(
                    name, image.ring, plain_target.ring
                )
            )
        if image and (not image.is_homogeneous() or image.degree != weight):
            raise IllDefined(
                "Image '{}' of '{}' is not homogeneous of degree {}.".format(
                    image, name, weight
                )
            )
        reduced.append(plain_target.normal_form(image))
    algebra_map = AlgebraMap(source, target, reduced)
    for generator in plain_source.ideal.minimal_generators():
        image = algebra_map.apply(generator)
        if image:
            raise IllDefined(
                "Generator '{}' is sent to '{}' instead of zero.".format(
                    generator, image
                )
            )
    top = plain_source.top_degree
    spaces = {}
    for degree in range(top + 1):
        sources = ring.monomials(degree)
        spaces[degree] = kernel_space(
            ring.field,
            ring.order,
            sources,
            [algebra_map._apply_monomial(m).terms for m in sources],
        )
    algebra_map.kernel = GradedIdeal.from_spaces(ring, spaces, top)
    algebra_map.surjective = all(
        (ring.dimension(degree) - len(spaces[degree]) if degree <= top else 0)
        == value
        for degree, value in enumerate(plain_target.hilbert)
    )
    return algebra_map


def natural_map(source, target):
    """
    Map sending every source variable to the target variable of that name
    """
    plain_source, plain_target = _plain(source), _plain(target)
    images = []
    for name in plain_source.ring.names:
        if name not in plain_target.ring.names:
            raise RingMismatch(
                "Variable '{}' is missing from {}.".format(name, plain_target.ring)
            )
        images.append(Polynomial.variable(plain_target.ring, name))
    return make_map(source, target, images)


def is_projection(algebra_map):
    """
    True if source and target share the ring and every variable maps to itself
    """
    source, target = _plain(algebra_map.source), _plain(algebra_map.target)
    if source.ring != target.ring:
        return False
    return all(
        image == target.normal_form(variable)
        for image, variable in zip(algebra_map.images, source.ring.gens())
    )


@dataclass(frozen=True)
class ThomData:
    """
    Thom class of a map between oriented algebras

    Attributes
    ----------
    thom_class : :class:`gorenstein.Polynomial`
        Normal form of :math:`\\tau` in the source, of degree :math:`d - k`.
    euler_class : :class:`gorenstein.Polynomial`
        Its image in the target.
    is_restriction : bool
        True if the Thom class is nonzero.
    degree : int
        The degree :math:`d - k`.
    """

    thom_class: Polynomial
    euler_class: Polynomial
    is_restriction: bool
    degree: int


def thom_class(algebra_map):
    """
    Thom class of a map between oriented Artinian Gorenstein algebras

    The unique :math:`\\tau \\in A_{d-k}` with
    :math:`\\int_T \\pi(a) = \\int_A \\tau a` for every :math:`a \\in A_k`.
    When the map is the projection :math:`R/\\mathrm{Ann}(F) \\to
    R/\\mathrm{Ann}(G)`, the result is checked against
    :math:`\\tau \\circ F = G`.

    Parameters
    ----------
    algebra_map : :class:`gorenstein.AlgebraMap`
        Between two :class:`gorenstein.OrientedAlgebra`.

    Returns
    -------
    thom : :class:`gorenstein.ThomData`
    """
    source, target = algebra_map.source, algebra_map.target
    if not isinstance(source, OrientedAlgebra) or not isinstance(
        target, OrientedAlgebra
    ):
        raise OrientationMissing(
            "Thom classes need oriented source and target algebras."
        )
    top, low = source.top_degree, target.top_degree
    if low > top:
        raise ValueError(
            "Target socle degree {} exceeds the source socle degree {}.".format(
                low, top
            )
        )
    degree = top - low
    unknowns = source.basis(degree)
    rows, rhs = [], []
    for monomial in source.basis(low):
        rows.append(
            [
                source.dual_generator.coefficient(
                    tuple(a + b for a, b in zip(monomial, other))
                )
                for other in unknowns
            ]
        )
        image = algebra_map.apply(Polynomial.monomial(source.ring, monomial))
        rhs.append(target.integral(image))
    solution = mat_solve(matrix(rows, source.field, len(unknowns)), rhs)
    if solution is None:
        raise ConsistencyError(
            "No Thom class solves the integral equations of {}.".format(algebra_map)
        )
    tau = Polynomial(source.ring, dict(zip(unknowns, solution)))
    if is_projection(algebra_map):
        contracted = contract(tau, source.dual_generator)
        if contracted != target.dual_generator:
            raise ConsistencyError(
                "Thom class '{}' contracts the source form to '{}' instead of "
                "'{}'.".format(tau, contracted, target.dual_generator)
            )
    if not tau:
        warnings.warn(
            "The Thom class of {} is zero: the map is not a restriction map.".format(
                algebra_map
            ),
            UserWarning,
            stacklevel=2,
        )
    return ThomData(
        thom_class=tau,
        euler_class=algebra_map.apply(tau),
        is_restriction=bool(tau),
        degree=degree,
    )


def preimage(algebra_map, element):
    """
    A source element mapping onto a homogeneous target element

    Parameters
    ----------
    algebra_map : :class:`gorenstein.AlgebraMap`
    element : :class:`gorenstein.Polynomial`
        Homogeneous element of the target ring.

    Returns
    -------
    lift : :class:`gorenstein.Polynomial` or None
        Normal form in the source, or None if the element is not in the
        image.
    """
    source, target = _plain(algebra_map.source), _plain(algebra_map.target)
    target._check(element)
    element = target.normal_form(element)
    if not element:
        return Polynomial.zero(source.ring)
    if not element.is_homogeneous():
        raise ValueError("Element '{}' is not homogeneous.".format(element))
    degree = element.degree
    unknowns = source.basis(degree)
    keys = target.basis(degree)
    columns = [
        target.coordinates(
            algebra_map.apply(Polynomial.monomial(source.ring, monomial)), degree
        )
        for monomial in unknowns
    ]
    rows = [[column[i] for column in columns] for i in range(len(keys))]
    solution = mat_solve(
        matrix(rows, source.field, len(unknowns)), target.coordinates(element, degree)
    )
    if solution is None:
        return None
    return Polynomial(source.ring, dict(zip(unknowns, solution)))
