# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Sparse reduced echelon form of a subspace of a coordinate space
"""
from collections import defaultdict


class Echelon:
    """
    Subspace of a space with a basis indexed by ordered keys

    Vectors are dictionaries mapping keys (monomials, in practice) to nonzero
    field elements. The stored basis is kept fully reduced: every row has
    coefficient 1 on its pivot, the pivot is the largest key of the row and no
    other row involves that pivot.

    Parameters
    ----------
    field : :class:`gorenstein.FieldSpec`
        Field of the coefficients.
    order : callable
        Sort key of the basis keys. The largest key of a vector becomes its
        pivot.
    """

    def __init__(self, field, order):
        self.field = field
        self.order = order
        self._rows = {}
        # Non-pivot key -> pivots of the rows that contain it
        self._users = defaultdict(set)

    @classmethod
    def full(cls, field, order, keys):
        """
        The whole coordinate space spanned by ``keys``
        """
        space = cls(field, order)
        one = field.one
        for key in keys:
            space._rows[key] = {key: one}
        return space

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self):
        "Pivot keys in decreasing order."
        return sorted(self._rows, key=self.order, reverse=True)

    def rows(self):
        """
        Basis vectors in decreasing pivot order
        """
        return [dict(self._rows[pivot]) for pivot in self.pivots]

    def reduce(self, vector):
        """
        Remainder of a vector after eliminating every pivot key
        """
        remainder = dict(vector)
        for pivot in [key for key in remainder if key in self._rows]:
            coefficient = remainder.pop(pivot)
            for key, value in self._rows[pivot].items():
                if key == pivot:
                    continue
                updated = remainder.get(key, self.field.zero) - coefficient * value
                if updated:
                    remainder[key] = updated
                else:
                    remainder.pop(key, None)
        return remainder

    def contains(self, vector):
        "True if the vector lies in the subspace."
        return not self.reduce(vector)

    def insert(self, vector):
        """
        Add a vector to the subspace

        Returns
        -------
        new : bool
            False if the vector was already in the subspace.
        """
        remainder = self.reduce(vector)
        if not remainder:
            return False
        pivot = max(remainder, key=self.order)
        scale = self.field.inverse(remainder[pivot])
        row = {key: value * scale for key, value in remainder.items()}
        # Back substitution into the rows that use the new pivot
        for other in self._users.pop(pivot, set()):
            target = self._rows[other]
            coefficient = target.pop(pivot)
            for key, value in row.items():
                if key == pivot:
                    continue
                updated = target.get(key, self.field.zero) - coefficient * value
                if updated:
                    target[key] = updated
                    self._users[key].add(other)
                else:
                    target.pop(key, None)
                    self._users[key].discard(other)
        self._rows[pivot] = row
        for key in row:
            if key != pivot:
                self._users[key].add(pivot)
        return True

    def extend(self, vectors):
        "Insert several vectors."
        for vector in vectors:
            self.insert(vector)
        return self

    def is_full(self, keys):
        "True if the subspace is the whole span of ``keys``."
        return len(self._rows) == len(keys)

    def copy(self):
        "Independent copy of the subspace."
        other = Echelon(self.field, self.order)
        other._rows = {pivot: dict(row) for pivot, row in self._rows.items()}
        for key, users in self._users.items():
            if users:
                other._users[key] = set(users)
        return other

    def null_vectors(self, keys):
        """
        Basis of the orthogonal complement under the identity pairing

        One vector per key of ``keys`` that is not a pivot: 1 on that key and
        minus its coefficient in each row on the row's pivot.
        """
        vectors = []
        for free in keys:
            if free in self._rows:
                continue
            vector = {free: self.field.one}
            for pivot in self._users.get(free, ()):
                vector[pivot] = -self._rows[pivot][free]
            vectors.append(vector)
        return vectors
