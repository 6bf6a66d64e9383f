# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Sparse multivariate polynomials and the contraction action
"""
from .._errors import DualProductOverlap, RingMismatch


class Polynomial:
    """
    Sparse polynomial over a :class:`gorenstein.GradedRing`

    Stores a dictionary from exponent tuples to nonzero field elements. The
    same class represents elements of a primal ring and dual forms of its
    divided power mirror. Dual forms can only be multiplied when their
    variable supports are disjoint, where the divided power product agrees
    with the monomial product in every characteristic.

    Parameters
    ----------
    ring : :class:`gorenstein.GradedRing`
    terms : dict or None
        Mapping from exponent tuples to coefficients. Zero coefficients are
        dropped.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        field = ring.field
        clean = {}
        if terms:
            for exponents, coefficient in terms.items():
                coefficient = field(coefficient)
                if coefficient:
                    clean[tuple(exponents)] = coefficient
        self.terms = clean

    @classmethod
    def _raw(cls, ring, terms):
        "Wrap a dictionary already holding nonzero domain elements"
        polynomial = cls.__new__(cls)
        polynomial.ring = ring
        polynomial.terms = terms
        return polynomial

    @classmethod
    def constant(cls, ring, value):
        "A constant polynomial."
        return cls(ring, {(0,) * ring.nvars: value})

    @classmethod
    def monomial(cls, ring, exponents, coefficient=1):
        "A single term."
        return cls(ring, {tuple(exponents): coefficient})

    @classmethod
    def variable(cls, ring, name):
        "A variable of the ring."
        exponents = [0] * ring.nvars
        exponents[ring.index(name)] = 1
        return cls.monomial(ring, exponents)

    @classmethod
    def zero(cls, ring):
        "The zero polynomial."
        return cls._raw(ring, {})

    # Structure
    # -------------------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    @property
    def field(self):
        "Coefficient field."
        return self.ring.field

    @property
    def degree(self):
        "Largest weighted degree of a term (-1 for zero)."
        return max((self.ring.degree(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        "True if every term has the same weighted degree. Zero is homogeneous."
        return len({self.ring.degree(e) for e in self.terms}) <= 1

    def is_constant(self):
        "True for constants, including zero."
        return all(not any(e) for e in self.terms)

    def support(self):
        "Names of the variables that appear."
        return {
            name
            for exponents in self.terms
            for name, e in zip(self.ring.names, exponents)
            if e
        }

    def graded_pieces(self):
        """
        Homogeneous components indexed by degree

        Examples
        --------
        >>> from gorenstein import GradedRing, parse_poly
        >>> ring = GradedRing(("x",))
        >>> {d: str(p) for d, p in parse_poly("x^2 + x", ring).graded_pieces().items()}
        {1: 'x', 2: 'x^2'}
        """
        pieces = {}
        for exponents, coefficient in self.terms.items():
            pieces.setdefault(self.ring.degree(exponents), {})[exponents] = coefficient
        return {
            degree: Polynomial._raw(self.ring, pieces[degree])
            for degree in sorted(pieces)
        }

    def component(self, degree):
        "Homogeneous component of a degree."
        return Polynomial._raw(
            self.ring,
            {e: c for e, c in self.terms.items() if self.ring.degree(e) == degree},
        )

    def sorted_terms(self):
        "Terms in decreasing module order."
        return sorted(
            self.terms.items(), key=lambda t: self.ring.order(t[0]), reverse=True
        )

    def leading_coefficient(self):
        "Coefficient of the largest monomial (zero for the zero polynomial)."
        if not self.terms:
            return self.field.zero
        return self.sorted_terms()[0][1]

    def normalized(self):
        "Scalar multiple with leading coefficient 1."
        if not self.terms:
            return self
        return self.scale(self.field.inverse(self.leading_coefficient()))

    def coefficient(self, exponents):
        "Coefficient of a monomial."
        return self.terms.get(tuple(exponents), self.field.zero)

    # Arithmetic
    # -------------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(
                    "Polynomials live in different rings: {} and {}.".format(
                        self.ring, other.ring
                    )
                )
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        zero = self.field.zero
        for exponents, coefficient in other.terms.items():
            value = terms.get(exponents, zero) + coefficient
            if value:
                terms[exponents] = value
            else:
                terms.pop(exponents, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value):
        "Multiply by a scalar."
        value = self.field(value)
        if not value:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {e: c * value for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if self.ring.dual and not (self.is_constant() or other.is_constant()):
            shared = self.support() & other.support()
            if shared:
                raise DualProductOverlap(
                    "Can't multiply dual forms sharing the variables {}.".format(
                        ", ".join(sorted(shared))
                    )
                )
        terms = {}
        zero = self.field.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                value = terms.get(exponents, zero) + c1 * c2
                if value:
                    terms[exponents] = value
                else:
                    terms.pop(exponents, None)
        return Polynomial._raw(self.ring, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or not other:
                raise ValueError("Can only divide by a nonzero constant.")
            other = other.coefficient((0,) * self.ring.nvars)
        return self.scale(self.field.inverse(self.field(other)))

    def __pow__(self, exponent):
        if int(exponent) != exponent or exponent < 0:
            raise ValueError("Invalid exponent '{}'.".format(exponent))
        result = Polynomial.constant(self.ring, 1)
        for _ in range(int(exponent)):
            result = result * self
        return result

    def times_monomial(self, exponents):
        "Multiply by a monomial (no support check)."
        return Polynomial._raw(
            self.ring,
            {
                tuple(a + b for a, b in zip(e, exponents)): c
                for e, c in self.terms.items()
            },
        )

    # Change of ring
    # -------------------------------------------------------------------------

    def embed(self, ring):
        """
        The same polynomial in a ring with more variables

        Variables are matched by name. Raises
        :class:`gorenstein.RingMismatch` if a variable is missing or has a
        different weight.
        """
        if ring == self.ring:
            return self
        if ring.dual != self.ring.dual or ring.field != self.ring.field:
            raise RingMismatch("Can't embed {} into {}.".format(self.ring, ring))
        positions = []
        for name, weight in zip(self.ring.names, self.ring.weights):
            if name not in ring.names or ring.weights[ring.index(name)] != weight:
                if any(e[self.ring.index(name)] for e in self.terms):
                    raise RingMismatch(
                        "Variable '{}' of {} is missing from {}.".format(
                            name, self.ring, ring
                        )
                    )
                positions.append(None)
            else:
                positions.append(ring.index(name))
        terms = {}
        for exponents, coefficient in self.terms.items():
            target = [0] * ring.nvars
            for position, e in zip(positions, exponents):
                if position is not None:
                    target[position] = e
            terms[tuple(target)] = coefficient
        return Polynomial._raw(ring, terms)

    def coefficients_in(self, name):
        """
        Split by the power of one variable

        Returns
        -------
        coefficients : dict
            Maps each power ``k`` to the polynomial (same ring, free of the
            variable) multiplying ``name^k``.
        """
        index = self.ring.index(name)
        parts = {}
        for exponents, coefficient in self.terms.items():
            rest = exponents[:index] + (0,) + exponents[index + 1 :]
            parts.setdefault(exponents[index], {})[rest] = coefficient
        return {k: Polynomial._raw(self.ring, parts[k]) for k in sorted(parts)}

    # Printing
    # -------------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.field
        pieces = []
        for exponents, coefficient in self.sorted_terms():
            negative = not field.is_finite and coefficient < 0
            magnitude = -coefficient if negative else coefficient
            monomial = _monomial_str(self.ring.names, exponents)
            number = field.to_str(magnitude)
            if not monomial:
                text = number
            elif number == "1":
                text = monomial
            else:
                text = "{}*{}".format(number, monomial)
            if not pieces:
                pieces.append("-" + text if negative else text)
            else:
                pieces.append(("- " if negative else "+ ") + text)
        return " ".join(pieces)

    def __repr__(self):
        return "Polynomial('{}', {})".format(self, self.ring)


def _monomial_str(names, exponents):
    factors = []
    for name, e in zip(names, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append("{}^{}".format(name, e))
    return "*".join(factors)


def contract(primal, form):
    """
    Contraction action of a primal polynomial on a dual form

    A monomial :math:`x^a` sends :math:`X^b` to :math:`X^{b-a}` when
    :math:`a \\le b` componentwise and to zero otherwise. No factorials are
    involved, so the action is the same in every characteristic.

    Parameters
    ----------
    primal : :class:`gorenstein.Polynomial`
        Element of a primal ring.
    form : :class:`gorenstein.Polynomial`
        Element of the mirror dual ring.

    Returns
    -------
    result : :class:`gorenstein.Polynomial`
        Dual form ``primal ∘ form``.

    Examples
    --------
    >>> from gorenstein import GradedRing, parse_poly
    >>> ring = GradedRing(("x", "y"))
    >>> str(contract(parse_poly("x*y", ring), parse_poly("X^2*Y^2", ring.mirror())))
    'X*Y'
    """
    if primal.ring.dual or not form.ring.dual or primal.ring.mirror() != form.ring:
        raise RingMismatch(
            "Can't contract an element of {} against a form of {}.".format(
                primal.ring, form.ring
            )
        )
    terms = {}
    zero = form.field.zero
    for a, c in primal.terms.items():
        for b, d in form.terms.items():
            if all(i <= j for i, j in zip(a, b)):
                exponents = tuple(j - i for i, j in zip(a, b))
                value = terms.get(exponents, zero) + c * d
                if value:
                    terms[exponents] = value
                else:
                    terms.pop(exponents, None)
    return Polynomial._raw(form.ring, terms)
