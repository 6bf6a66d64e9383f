# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Artinian quotient algebras, socles and orientations
"""
from .._errors import NotGorenstein, RingMismatch
from .._exact import matrix
from .._polys import Polynomial, contract
from .ideal import GradedIdeal, kernel_space


class ArtinianAlgebra:
    """
    Quotient :math:`A = R / I` of a graded ring by an Artinian ideal

    The standard monomials of every degree (those that are not echelon
    pivots of :math:`I_d`) are computed when the algebra is built and form
    the basis used for coordinates and normal forms.

    Parameters
    ----------
    ideal : :class:`gorenstein.GradedIdeal`
        Raises :class:`gorenstein.NotArtinian` if the quotient is infinite
        dimensional.

    Attributes
    ----------
    hilbert : tuple of int
        Hilbert function from degree 0 to the top degree.
    top_degree : int
        Socle degree: the last degree with a nonzero piece.
    """

    def __init__(self, ideal):
        self.ideal = ideal
        self.ring = ideal.ring
        self.hilbert = ideal.hilbert()
        self.top_degree = len(self.hilbert) - 1
        self._basis = {}
        for degree in range(self.top_degree + 1):
            pivots = set(ideal.space(degree).pivots)
            self._basis[degree] = tuple(
                m for m in self.ring.monomials(degree) if m not in pivots
            )
        self._socle = None

    @property
    def field(self):
        "Coefficient field."
        return self.ring.field

    @property
    def dimension(self):
        "Total dimension over the field."
        return sum(self.hilbert)

    @property
    def embedding_dimension(self):
        "Number of variables minus the linear forms in the ideal."
        return self.ring.nvars - self.ideal.dimension(1)

    def basis(self, degree):
        """
        Standard monomials of a degree, in decreasing module order
        """
        return self._basis.get(degree, ())

    def _check(self, polynomial):
        if polynomial.ring != self.ring:
            raise RingMismatch(
                "Element of {} used in a quotient of {}.".format(
                    polynomial.ring, self.ring
                )
            )

    def normal_form(self, polynomial):
        """
        Representative supported on standard monomials

        Zero exactly when the polynomial lies in the ideal.
        """
        return self.ideal.reduce(polynomial)

    def multiply(self, first, second):
        "Product in the algebra, in normal form."
        return self.normal_form(first * second)

    def coordinates(self, polynomial, degree):
        """
        Coordinates of the degree component in the standard monomial basis
        """
        self._check(polynomial)
        reduced = self.ideal.space(degree).reduce(polynomial.component(degree).terms)
        return [reduced.get(m, self.field.zero) for m in self.basis(degree)]

    def element(self, degree, coordinates):
        "Element of a degree from its coordinates."
        return Polynomial(self.ring, dict(zip(self.basis(degree), coordinates)))

    def multiplication_matrix(self, element, degree):
        """
        Matrix of multiplication by a homogeneous element

        Parameters
        ----------
        element : :class:`gorenstein.Polynomial`
            Homogeneous of degree ``e``.
        degree : int
            Source degree ``i``.

        Returns
        -------
        matrix : :class:`sympy.polys.matrices.DomainMatrix`
            Of shape ``(H[i + e], H[i])`` in the standard monomial bases.
        """
        self._check(element)
        shift = max(element.degree, 0)
        target = self.ideal.space(degree + shift)
        ncols = len(self.basis(degree))
        rows = [[self.field.zero] * ncols for _ in self.basis(degree + shift)]
        position = {m: i for i, m in enumerate(self.basis(degree + shift))}
        for column, monomial in enumerate(self.basis(degree)):
            image = target.reduce(element.times_monomial(monomial).terms)
            for key, value in image.items():
                rows[position[key]][column] = value
        return matrix(rows, self.field, ncols)

    def socle(self):
        """
        Socle :math:`\\{a : x_j a = 0 \\text{ for all } j\\}` degree by degree

        Returns
        -------
        socle : dict
            Maps each degree with a nonzero socle piece to a tuple of basis
            elements (normal forms).
        """
        if self._socle is not None:
            return self._socle
        socle = {}
        for degree in range(self.top_degree + 1):
            sources = self.basis(degree)
            images = []
            for monomial in sources:
                image = {}
                for j, weight in enumerate(self.ring.weights):
                    exponents = list(monomial)
                    exponents[j] += 1
                    reduced = self.ideal.space(degree + weight).reduce(
                        {tuple(exponents): self.field.one}
                    )
                    image.update({(j, key): value for key, value in reduced.items()})
                images.append(image)
            kernel = kernel_space(self.field, self.ring.order, sources, images)
            if len(kernel):
                socle[degree] = tuple(
                    Polynomial._raw(self.ring, row) for row in kernel.rows()
                )
        self._socle = socle
        return socle

    @property
    def socle_dimension(self):
        "Total dimension of the socle."
        return sum(len(piece) for piece in self.socle().values())

    def is_gorenstein(self):
        "True if the socle is one dimensional."
        return self.socle_dimension == 1

    def __repr__(self):
        return "ArtinianAlgebra({} / {}, H={})".format(
            self.ring, self.ideal, self.hilbert
        )


def quotient(ideal):
    """
    The Artinian quotient of a ring by an ideal

    Examples
    --------
    >>> from gorenstein import GradedRing, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> ideal = GradedIdeal(ring, [parse_poly("x^3", ring), parse_poly("y^3", ring)])
    >>> quotient(ideal).hilbert
    (1, 2, 3, 2, 1)
    """
    return ArtinianAlgebra(ideal)


def dual_generator(ideal):
    """
    Macaulay dual generator of a Gorenstein ideal

    The form :math:`F` of the top degree :math:`d` orthogonal to
    :math:`I_d`, which satisfies :math:`\\mathrm{Ann}(F) = I`.

    Parameters
    ----------
    ideal : :class:`gorenstein.GradedIdeal` or :class:`gorenstein.ArtinianAlgebra`

    Returns
    -------
    form : :class:`gorenstein.Polynomial`
        Element of the mirror dual ring with leading coefficient 1.

    Examples
    --------
    >>> from gorenstein import GradedRing, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> ideal = GradedIdeal(ring, [parse_poly("x^3", ring), parse_poly("y^3", ring)])
    >>> str(dual_generator(ideal))
    'X^2*Y^2'
    """
    algebra = ideal if isinstance(ideal, ArtinianAlgebra) else ArtinianAlgebra(ideal)
    if not algebra.is_gorenstein():
        raise NotGorenstein(
            "The quotient by {} has a socle of dimension {}.".format(
                algebra.ideal, algebra.socle_dimension
            )
        )
    return _normalized_dual(algebra)


class OrientedAlgebra:
    """
    Artinian Gorenstein algebra with a chosen orientation

    The orientation is the integral :math:`\\int a = (a \\circ F)(0)` defined
    by a dual generator :math:`F`. The socle generator is the top degree
    element with integral 1. Build instances with :func:`gorenstein.orient`.

    Parameters
    ----------
    algebra : :class:`gorenstein.ArtinianAlgebra`
    dual_generator : :class:`gorenstein.Polynomial`
    socle_generator : :class:`gorenstein.Polynomial`
    """

    def __init__(self, algebra, dual_generator, socle_generator):
        self.algebra = algebra
        self.dual_generator = dual_generator
        self.socle_generator = socle_generator

    @property
    def ring(self):
        "Primal ring."
        return self.algebra.ring

    @property
    def ideal(self):
        "Defining ideal."
        return self.algebra.ideal

    @property
    def field(self):
        "Coefficient field."
        return self.algebra.field

    @property
    def hilbert(self):
        "Hilbert function."
        return self.algebra.hilbert

    @property
    def top_degree(self):
        "Socle degree."
        return self.algebra.top_degree

    def basis(self, degree):
        "Standard monomials of a degree."
        return self.algebra.basis(degree)

    def normal_form(self, polynomial):
        "Representative on standard monomials."
        return self.algebra.normal_form(polynomial)

    def coordinates(self, polynomial, degree):
        "Coordinates of a degree component in the standard monomial basis."
        return self.algebra.coordinates(polynomial, degree)

    def integral(self, element):
        """
        Integral of an element: the coefficient of the dual generator paired
        with its top degree component
        """
        self.algebra._check(element)
        total = self.field.zero
        for exponents, coefficient in element.component(self.top_degree).terms.items():
            total += coefficient * self.dual_generator.coefficient(exponents)
        return total

    def pairing_matrix(self, degree):
        """
        Matrix of :math:`(a, b) \\mapsto \\int ab` between degrees ``degree``
        and ``top_degree - degree``
        """
        rows = []
        for first in self.basis(degree):
            row = []
            for second in self.basis(self.top_degree - degree):
                exponents = tuple(a + b for a, b in zip(first, second))
                row.append(self.dual_generator.coefficient(exponents))
            rows.append(row)
        return matrix(rows, self.field, len(self.basis(self.top_degree - degree)))

    def __repr__(self):
        return "OrientedAlgebra({}, F={})".format(self.algebra, self.dual_generator)


def orient(algebra, dual_generator=None, socle_generator=None):
    """
    Choose an orientation of an Artinian Gorenstein algebra

    Parameters
    ----------
    algebra : :class:`gorenstein.ArtinianAlgebra` or :class:`gorenstein.GradedIdeal`
    dual_generator : :class:`gorenstein.Polynomial` or None
        Orient by this dual form. It must be annihilated by the ideal.
    socle_generator : :class:`gorenstein.Polynomial` or None
        Orient so that this top degree element has integral 1. Ignored when
        ``dual_generator`` is given. With neither, the dual generator with
        leading coefficient 1 is used.

    Returns
    -------
    oriented : :class:`gorenstein.OrientedAlgebra`

    Examples
    --------
    >>> from gorenstein import GradedRing, annihilator, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> form = parse_poly("X^2*Y^2", ring.mirror())
    >>> str(orient(quotient(annihilator(form)), dual_generator=form).socle_generator)
    'x^2*y^2'
    """
    if isinstance(algebra, GradedIdeal):
        algebra = ArtinianAlgebra(algebra)
    if not algebra.is_gorenstein():
        raise NotGorenstein(
            "Can't orient the quotient by {}: socle of dimension {}.".format(
                algebra.ideal, algebra.socle_dimension
            )
        )
    top = algebra.top_degree
    ring = algebra.ring
    field = algebra.field
    if dual_generator is not None:
        form = dual_generator
        if form.ring != ring.mirror():
            raise RingMismatch(
                "Dual generator of {} for an algebra over {}.".format(form.ring, ring)
            )
        if not form or not form.is_homogeneous() or form.degree != top:
            raise ValueError(
                "Dual generator '{}' must be a nonzero form of degree {}.".format(
                    form, top
                )
            )
        for generator in algebra.ideal.minimal_generators():
            if contract(generator, form):
                raise ValueError(
                    "Dual generator '{}' is not annihilated by '{}'.".format(
                        form, generator
                    )
                )
        (socle,) = algebra.socle()[top]
        oriented = OrientedAlgebra(algebra, form, socle)
        scale = oriented.integral(socle)
        oriented.socle_generator = socle.scale(field.inverse(scale))
        return oriented
    form = _normalized_dual(algebra)
    if socle_generator is None:
        (socle,) = algebra.socle()[top]
        oriented = OrientedAlgebra(algebra, form, socle)
        oriented.socle_generator = socle.scale(field.inverse(oriented.integral(socle)))
        return oriented
    algebra._check(socle_generator)
    socle = algebra.normal_form(socle_generator)
    if not socle or not socle.is_homogeneous() or socle.degree != top:
        raise ValueError(
            "Socle generator '{}' must be nonzero in degree {}.".format(
                socle_generator, top
            )
        )
    oriented = OrientedAlgebra(algebra, form, socle)
    oriented.dual_generator = form.scale(field.inverse(oriented.integral(socle)))
    return oriented


def _normalized_dual(algebra):
    top = algebra.top_degree
    (vector,) = algebra.ideal.space(top).null_vectors(algebra.ring.monomials(top))
    return Polynomial._raw(algebra.ring.mirror(), vector).normalized()


def rescale_orientation(oriented, scale):
    """
    Multiply the integral of an oriented algebra by a nonzero scalar

    The dual generator is multiplied by ``scale`` and the socle generator
    divided by it.
    """
    field = oriented.field
    scale = field(scale)
    return OrientedAlgebra(
        oriented.algebra,
        oriented.dual_generator.scale(scale),
        oriented.socle_generator.scale(field.inverse(scale)),
    )


def hilbert_combination(*terms):
    """
    Integer combination of shifted Hilbert functions

    Parameters
    ----------
    terms : tuples
        Triples ``(coefficient, hilbert, shift)``. The term contributes
        ``coefficient * hilbert[i - shift]`` in degree ``i``.

    Returns
    -------
    hilbert : tuple of int
        Trailing zeros removed.

    Examples
    --------
    >>> hilbert_combination((1, (1, 2, 3, 2, 1), 0), (1, (1, 1), 1), (1, (1, 1), 2))
    (1, 3, 5, 3, 1)
    """
    length = max((len(vector) + shift for _, vector, shift in terms), default=0)
    values = [0] * length
    for coefficient, vector, shift in terms:
        for i, value in enumerate(vector):
            values[i + shift] += coefficient * value
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)
