# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Graded polynomial rings and their divided power duals
"""
import re
from dataclasses import dataclass
from functools import lru_cache

from .._errors import DuplicateVariable
from .._exact import QQ_FIELD, FieldSpec

_NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class GradedRing:
    """
    Polynomial ring with positive integer variable weights

    A primal ring :math:`R = \\mathbb{F}[x_1, \\dots, x_r]` acts by
    contraction on its dual :math:`Q = \\mathbb{F}[X_1, \\dots, X_r]`, the
    mirror ring with the first letter of every name uppercased (``xi``
    mirrors to ``Xi``) and the same weights.

    Parameters
    ----------
    names : tuple of str
        Variable names, in the order used by the monomial order.
    weights : tuple of int or None
        Positive weight of each variable. Defaults to all ones (standard
        grading).
    field : :class:`gorenstein.FieldSpec`
        Coefficient field. Defaults to the rationals.
    dual : bool
        True for the divided power side.
    """

    names: tuple
    weights: tuple = None
    field: FieldSpec = QQ_FIELD
    dual: bool = False

    def __post_init__(self):
        names = tuple(self.names)
        weights = (1,) * len(names) if self.weights is None else tuple(self.weights)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        if len(weights) != len(names):
            raise ValueError(
                "Got {} weights for {} variables.".format(len(weights), len(names))
            )
        if len(set(names)) != len(names):
            raise DuplicateVariable(
                "Repeated variable names in '{}'.".format(", ".join(names))
            )
        for name in names:
            if not _NAME.match(name):
                raise ValueError("Invalid variable name '{}'.".format(name))
        for name, weight in zip(names, weights):
            if int(weight) != weight or weight < 1:
                raise ValueError(
                    "Invalid weight '{}' for variable '{}'. Must be a positive "
                    "integer.".format(weight, name)
                )

    @property
    def nvars(self):
        "Number of variables."
        return len(self.names)

    @property
    def is_standard(self):
        "True if every variable has weight 1."
        return all(weight == 1 for weight in self.weights)

    @property
    def max_weight(self):
        "Largest variable weight (1 for a ring without variables)."
        return max(self.weights, default=1)

    def index(self, name):
        "Position of a variable."
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(
                "Variable '{}' is not in the ring ({}).".format(
                    name, ", ".join(self.names)
                )
            ) from None

    def degree(self, exponents):
        "Weighted degree of a monomial given by its exponents."
        return sum(w * e for w, e in zip(self.weights, exponents))

    def order(self, exponents):
        """
        Sort key of the module order: weighted degree, then reverse
        lexicographic on the declared variable order
        """
        return (self.degree(exponents), tuple(-e for e in reversed(exponents)))

    @lru_cache(maxsize=None)
    def monomials(self, degree):
        """
        Exponent vectors of all monomials of a weighted degree

        Returns
        -------
        monomials : tuple of tuples
            Sorted in decreasing module order.
        """
        found = []
        self._fill(degree, 0, (), found)
        return tuple(sorted(found, key=self.order, reverse=True))

    def _fill(self, remaining, position, prefix, found):
        if position == self.nvars:
            if remaining == 0:
                found.append(prefix)
            return
        weight = self.weights[position]
        for exponent in range(remaining // weight + 1):
            self._fill(
                remaining - exponent * weight, position + 1, prefix + (exponent,), found
            )

    def dimension(self, degree):
        "Dimension of the degree piece of the ring."
        if degree < 0:
            return 0
        return len(self.monomials(degree))

    def mirror(self):
        """
        The dual ring of a primal ring, or the primal ring of a dual one
        """
        if self.dual:
            names = tuple(name[0].lower() + name[1:] for name in self.names)
        else:
            names = tuple(name[0].upper() + name[1:] for name in self.names)
        return GradedRing(names, self.weights, self.field, not self.dual)

    def adjoin(self, name, weight=1):
        """
        Ring with one more variable, placed last in the variable order

        Raises :class:`gorenstein.DuplicateVariable` if the name (or its
        mirror) is already taken.
        """
        taken = {n.lower() for n in self.names}
        if name.lower() in taken:
            raise DuplicateVariable(
                "Variable '{}' already exists in the ring ({}).".format(
                    name, ", ".join(self.names)
                )
            )
        return GradedRing(
            self.names + (name,), self.weights + (weight,), self.field, self.dual
        )

    def with_field(self, field):
        "Same variables over another field."
        return GradedRing(self.names, self.weights, field, self.dual)

    def gens(self):
        "The variables as polynomials."
        from .polynomial import Polynomial

        return tuple(Polynomial.variable(self, name) for name in self.names)

    def __str__(self):
        variables = ", ".join(
            name if weight == 1 else "{}:{}".format(name, weight)
            for name, weight in zip(self.names, self.weights)
        )
        side = "dual " if self.dual else ""
        return "{}{}[{}]".format(side, self.field, variables)


def adjoin_variable(ring, name, weight=1):
    """
    Adjoin a new variable to a graded ring

    Polynomials of the old ring move to the new one with
    :meth:`gorenstein.Polynomial.embed`, keeping their degree.

    Parameters
    ----------
    ring : :class:`gorenstein.GradedRing`
    name : str
        Name of the new variable.
    weight : int
        Its positive weight. Defaults to 1.

    Returns
    -------
    ring : :class:`gorenstein.GradedRing`

    Examples
    --------
    >>> adjoin_variable(GradedRing(("x", "y")), "xi").names
    ('x', 'y', 'xi')
    """
    return ring.adjoin(name, weight)
