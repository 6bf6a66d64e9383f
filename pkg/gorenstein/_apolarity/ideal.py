# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Homogeneous ideals as degreewise subspaces
"""
from .._errors import NotArtinian, RingMismatch, ZeroForm
from .._exact import Echelon, mat_kernel, matrix
from .._polys import Polynomial


class GradedIdeal:
    """
    Homogeneous ideal of a primal graded ring

    The ideal is stored through its degree pieces :math:`I_d`, each an
    :class:`gorenstein.Echelon` of the monomial coordinates of :math:`R_d`.
    Pieces are computed on demand from
    :math:`I_d = \\sum_j x_j I_{d - w_j} + G_d`, where :math:`G_d` is the span of
    the generators of degree :math:`d`, and cached.

    Parameters
    ----------
    ring : :class:`gorenstein.GradedRing`
        A primal ring.
    generators : list of :class:`gorenstein.Polynomial`
        Homogeneous generators in ``ring``. Zeros are discarded.
    """

    def __init__(self, ring, generators=()):
        if ring.dual:
            raise ValueError("Ideals live in primal rings, not in {}.".format(ring))
        self.ring = ring
        gens = []
        for generator in generators:
            if generator.ring != ring:
                raise RingMismatch(
                    "Generator '{}' of {} is not in {}.".format(
                        generator, generator.ring, ring
                    )
                )
            if not generator.is_homogeneous():
                raise ValueError(
                    "Generator '{}' is not homogeneous.".format(generator)
                )
            if generator:
                gens.append(generator)
        self.generators = tuple(gens)
        self._spaces = {}
        self._multiples = {}
        self._full_from = None
        self._minimal = None
        self._hilbert = None

    @classmethod
    def from_spaces(cls, ring, spaces, top):
        """
        Ideal given by its degree pieces up to a degree

        Parameters
        ----------
        ring : :class:`gorenstein.GradedRing`
        spaces : dict
            Maps every degree ``0 <= d <= top`` to the
            :class:`gorenstein.Echelon` of :math:`I_d`. The pieces must be
            closed under multiplication by the variables.
        top : int
            Every degree above ``top`` is the whole of :math:`R_d`.

        Returns
        -------
        ideal : :class:`gorenstein.GradedIdeal`
            With its minimal generators as ``generators``.
        """
        ideal = cls(ring)
        ideal._full_from = max(top + 1, 0)
        for degree in range(ideal._full_from):
            ideal._spaces[degree] = spaces[degree]
        ideal.generators = ideal._extract_minimal(
            range(ideal._full_from + ring.max_weight)
        )
        ideal._minimal = ideal.generators
        return ideal

    @property
    def field(self):
        "Coefficient field."
        return self.ring.field

    def _empty(self):
        return Echelon(self.field, self.ring.order)

    def _full(self, degree):
        return Echelon.full(self.field, self.ring.order, self.ring.monomials(degree))

    def multiples(self, degree):
        """
        The piece of degree ``degree`` of the ideal times the maximal ideal
        """
        if degree in self._multiples:
            return self._multiples[degree]
        lower = [
            (j, degree - weight)
            for j, weight in enumerate(self.ring.weights)
            if degree - weight >= 0
        ]
        if degree > 0 and all(
            self.space(d).is_full(self.ring.monomials(d)) for _, d in lower
        ):
            space = self._full(degree)
        else:
            space = self._empty()
            for j, d in lower:
                for row in self.space(d).rows():
                    space.insert(_shift(row, j))
        self._multiples[degree] = space
        return space

    def space(self, degree):
        """
        The degree piece :math:`I_d` as an :class:`gorenstein.Echelon`

        Do not modify the returned object.
        """
        if degree < 0:
            return self._empty()
        if self._full_from is not None and degree >= self._full_from:
            return self._full(degree)
        if degree in self._spaces:
            return self._spaces[degree]
        space = self.multiples(degree)
        pieces = [g.terms for g in self.generators if g.degree == degree]
        if pieces:
            space = space.copy().extend(pieces)
        self._spaces[degree] = space
        return space

    def dimension(self, degree):
        "Dimension of the degree piece."
        return len(self.space(degree))

    def _extract_minimal(self, degrees):
        minimal = []
        for degree in degrees:
            base = self.multiples(degree)
            space = self.space(degree)
            if len(space) == len(base):
                continue
            extra = self._empty()
            for row in space.rows():
                extra.insert(base.reduce(row))
            minimal.extend(Polynomial._raw(self.ring, row) for row in extra.rows())
        return tuple(minimal)

    def minimal_generators(self):
        """
        A minimal generating set, read off from the echelon pivots

        In each degree, the generators are the reduced echelon basis of the
        remainders of :math:`I_d` modulo :math:`(\\mathfrak{m} I)_d`, each with
        leading coefficient 1.

        Returns
        -------
        generators : tuple of :class:`gorenstein.Polynomial`
            In increasing degree.
        """
        if self._minimal is None:
            degrees = sorted({g.degree for g in self.generators})
            self._minimal = self._extract_minimal(degrees)
        return self._minimal

    def generator_degrees(self):
        """
        Number of minimal generators in each degree

        Returns
        -------
        counts : list of tuples
            Pairs ``(degree, count)`` in increasing degree.
        """
        counts = {}
        for generator in self.minimal_generators():
            counts[generator.degree] = counts.get(generator.degree, 0) + 1
        return sorted(counts.items())

    @property
    def mu(self):
        "Number of minimal generators."
        return len(self.minimal_generators())

    def degree_bound(self):
        """
        A degree above which an Artinian quotient must vanish
        """
        if self._full_from is not None:
            return self._full_from
        degrees = [g.degree for g in self.generators]
        if not degrees:
            return 0
        spread = self.ring.nvars * max(degrees) * self.ring.max_weight
        return max(sum(degrees), spread) + 1

    def hilbert(self):
        """
        Hilbert function of the quotient

        Raises :class:`gorenstein.NotArtinian` if the quotient does not vanish
        before :meth:`degree_bound`.

        Returns
        -------
        hilbert : tuple of int
            Values from degree 0 up to the last nonzero one.
        """
        if self._hilbert is not None:
            return self._hilbert
        values = []
        zeros = 0
        bound = self.degree_bound() + self.ring.max_weight
        degree = 0
        while zeros < self.ring.max_weight:
            if degree > bound:
                raise NotArtinian(
                    "The quotient by ({}) does not vanish up to degree {}.".format(
                        ", ".join(str(g) for g in self.generators), bound
                    )
                )
            value = self.ring.dimension(degree) - self.dimension(degree)
            values.append(value)
            zeros = zeros + 1 if value == 0 else 0
            degree += 1
        while values and values[-1] == 0:
            values.pop()
        self._hilbert = tuple(values)
        if self._full_from is None:
            self._full_from = len(values)
        return self._hilbert

    @property
    def top_degree(self):
        "Socle degree of the quotient (-1 for the unit ideal)."
        return len(self.hilbert()) - 1

    def is_artinian(self):
        "True if the quotient is finite dimensional."
        try:
            self.hilbert()
        except NotArtinian:
            return False
        return True

    # Membership and comparison
    # -------------------------------------------------------------------------

    def _check(self, polynomial):
        if polynomial.ring != self.ring:
            raise RingMismatch(
                "Polynomial of {} tested against an ideal of {}.".format(
                    polynomial.ring, self.ring
                )
            )

    def reduce(self, polynomial):
        """
        Remainder of a polynomial supported on standard monomials
        """
        self._check(polynomial)
        terms = {}
        for degree, piece in polynomial.graded_pieces().items():
            terms.update(self.space(degree).reduce(piece.terms))
        return Polynomial._raw(self.ring, terms)

    def contains(self, polynomial):
        "True if the polynomial lies in the ideal."
        return not self.reduce(polynomial)

    def __contains__(self, polynomial):
        return self.contains(polynomial)

    def equals(self, other):
        """
        Degreewise equality of two ideals of Artinian quotients
        """
        if other.ring != self.ring:
            return False
        if self.hilbert() != other.hilbert():
            return False
        for degree in range(len(self.hilbert())):
            mine, theirs = self.space(degree), other.space(degree)
            if len(mine) != len(theirs):
                return False
            if not all(theirs.contains(row) for row in mine.rows()):
                return False
        return True

    def is_unit(self):
        "True if the ideal is the whole ring."
        return self.space(0).is_full(self.ring.monomials(0))

    def embed(self, ring):
        """
        Extension of the ideal to a ring with more variables
        """
        return GradedIdeal(ring, [g.embed(ring) for g in self.minimal_generators()])

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "({})".format(", ".join(str(g) for g in self.minimal_generators()))

    def __repr__(self):
        return "GradedIdeal('{}', {})".format(self, self.ring)


def _shift(vector, index):
    "Multiply a coordinate vector by a variable"
    shifted = {}
    for exponents, coefficient in vector.items():
        exponents = list(exponents)
        exponents[index] += 1
        shifted[tuple(exponents)] = coefficient
    return shifted


def kernel_space(field, order, sources, images):
    """
    Kernel of a linear map as an :class:`gorenstein.Echelon`

    Parameters
    ----------
    field : :class:`gorenstein.FieldSpec`
    order : callable
        Sort key of the source keys.
    sources : sequence
        Keys of the source basis.
    images : sequence of dict
        Image of each source key as a sparse vector over arbitrary hashable
        target keys.

    Returns
    -------
    kernel : :class:`gorenstein.Echelon`
    """
    targets = sorted({key for image in images for key in image}, key=repr)
    if not targets:
        return Echelon.full(field, order, sources)
    position = {key: i for i, key in enumerate(targets)}
    rows = [[field.zero] * len(sources) for _ in targets]
    for column, image in enumerate(images):
        for key, value in image.items():
            rows[position[key]][column] = value
    kernel = Echelon(field, order)
    for vector in mat_kernel(matrix(rows, field, len(sources))):
        kernel.insert(
            {key: value for key, value in zip(sources, vector) if value}
        )
    return kernel


def map_rank(field, sources, images):
    """
    Rank of a linear map given by sparse images
    """
    kernel = kernel_space(field, lambda key: key, sources, images)
    return len(sources) - len(kernel)


def annihilator(form):
    """
    Annihilator ideal of a homogeneous dual form

    Computes :math:`\\mathrm{Ann}(F) = \\{r \\in R : r \\circ F = 0\\}` degree by
    degree as the kernel of the contraction map
    :math:`R_i \\to Q_{d-i}`. Every degree above :math:`d` is in the ideal.

    Parameters
    ----------
    form : :class:`gorenstein.Polynomial`
        Nonzero homogeneous element of a dual ring.

    Returns
    -------
    ideal : :class:`gorenstein.GradedIdeal`
        Ideal of the mirror primal ring, with minimal generators of degree at
        most :math:`d + 1`.

    Examples
    --------
    >>> from gorenstein import GradedRing, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> str(annihilator(parse_poly("X^2*Y^2", ring.mirror())))
    '(x^3, y^3)'
    """
    if not form.ring.dual:
        raise ValueError(
            "Annihilators are taken of dual forms, not of {}.".format(form.ring)
        )
    if not form:
        raise ZeroForm("The zero form has no annihilator of finite colength.")
    if not form.is_homogeneous():
        raise ValueError("Form '{}' is not homogeneous.".format(form))
    ring = form.ring.mirror()
    top = form.degree
    spaces = {}
    for degree in range(top + 1):
        sources = ring.monomials(degree)
        images = [_contract_monomial(monomial, form) for monomial in sources]
        spaces[degree] = kernel_space(ring.field, ring.order, sources, images)
    return GradedIdeal.from_spaces(ring, spaces, top)


def _contract_monomial(monomial, form):
    image = {}
    for exponents, coefficient in form.terms.items():
        if all(a <= b for a, b in zip(monomial, exponents)):
            image[tuple(b - a for a, b in zip(monomial, exponents))] = coefficient
    return image


def ideal_combine(kind, first, second):
    """
    Sum, product or intersection of two ideals of the same ring

    Parameters
    ----------
    kind : str
        ``"sum"``, ``"product"`` or ``"intersection"``. Intersections need
        both quotients to be Artinian.
    first, second : :class:`gorenstein.GradedIdeal`

    Returns
    -------
    ideal : :class:`gorenstein.GradedIdeal`
    """
    if first.ring != second.ring:
        raise RingMismatch(
            "Ideals of different rings: {} and {}.".format(first.ring, second.ring)
        )
    ring = first.ring
    if kind == "sum":
        return GradedIdeal(ring, first.generators + second.generators)
    if kind == "product":
        return GradedIdeal(
            ring, [f * g for f in first.generators for g in second.generators]
        )
    if kind == "intersection":
        top = max(first.top_degree, second.top_degree)
        spaces = {}
        for degree in range(top + 1):
            spaces[degree] = _intersect(
                ring, degree, first.space(degree), second.space(degree)
            )
        return GradedIdeal.from_spaces(ring, spaces, top)
    raise ValueError(
        "Invalid kind '{}'. Must be 'sum', 'product' or 'intersection'.".format(kind)
    )


def _intersect(ring, degree, first, second):
    "Vectors of the first space that reduce to zero modulo the second"
    rows = first.rows()
    if not rows or not len(second):
        return Echelon(ring.field, ring.order)
    images = [second.reduce(row) for row in rows]
    labels = list(range(len(rows)))
    kernel = kernel_space(ring.field, lambda key: key, labels, images)
    result = Echelon(ring.field, ring.order)
    for combination in kernel.rows():
        vector = {}
        for label, weight in combination.items():
            for key, value in rows[label].items():
                vector[key] = vector.get(key, ring.field.zero) + weight * value
        result.insert({k: v for k, v in vector.items() if v})
    return result


def membership(polynomial, ideal):
    """
    Test whether a polynomial lies in an ideal

    Examples
    --------
    >>> from gorenstein import GradedRing, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> ideal = GradedIdeal(ring, [parse_poly("x^2", ring), parse_poly("y", ring)])
    >>> membership(parse_poly("x^3 + x*y", ring), ideal)
    True
    """
    return ideal.contains(polynomial)


def colon(ideal, element):
    """
    Colon ideal :math:`(I : \\tau)` of an Artinian ideal

    Parameters
    ----------
    ideal : :class:`gorenstein.GradedIdeal`
        An ideal with Artinian quotient.
    element : :class:`gorenstein.Polynomial` or :class:`gorenstein.GradedIdeal`
        A homogeneous polynomial, or an ideal, in which case the result is the
        intersection of the colons by its generators.

    Returns
    -------
    ideal : :class:`gorenstein.GradedIdeal`
        Degreewise :math:`\\{r \\in R_i : r \\tau \\in I_{i + e}\\}`.
    """
    ring = ideal.ring
    if isinstance(element, GradedIdeal):
        if element.ring != ring:
            raise RingMismatch("Colon by an ideal of another ring.")
        generators = element.minimal_generators()
        if not generators:
            return GradedIdeal.from_spaces(ring, {}, -1)
        result = colon(ideal, generators[0])
        for generator in generators[1:]:
            result = ideal_combine("intersection", result, colon(ideal, generator))
        return result
    ideal._check(element)
    if not element.is_homogeneous():
        raise ValueError("Element '{}' is not homogeneous.".format(element))
    top = ideal.top_degree - element.degree
    if not element or top < 0:
        return GradedIdeal.from_spaces(ring, {}, -1)
    spaces = {}
    for degree in range(top + 1):
        target = ideal.space(degree + element.degree)
        sources = ring.monomials(degree)
        images = [target.reduce(element.times_monomial(m).terms) for m in sources]
        spaces[degree] = kernel_space(ring.field, ring.order, sources, images)
    return GradedIdeal.from_spaces(ring, spaces, top)
