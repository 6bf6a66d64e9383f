# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Compressed Artinian Gorenstein algebras
"""
from math import comb

from .._errors import NotGorenstein

#: Compressed algebras that cannot be cohomological blow-ups
NOT_BLOWUP = "not-blowup"
#: No obstruction is known
NO_OBSTRUCTION = "none"


def maximal_hilbert(embedding_dimension, socle_degree):
    """
    Largest Hilbert function of a Gorenstein algebra with these invariants

    Parameters
    ----------
    embedding_dimension : int
    socle_degree : int

    Returns
    -------
    hilbert : tuple of int
        Entries :math:`\\min(\\dim R_i, \\dim R_{d - i})` over a polynomial
        ring in ``embedding_dimension`` variables.

    Examples
    --------
    >>> maximal_hilbert(3, 5)
    (1, 3, 6, 6, 3, 1)
    """
    return tuple(
        min(
            comb(embedding_dimension - 1 + i, i),
            comb(embedding_dimension - 1 + socle_degree - i, socle_degree - i),
        )
        for i in range(socle_degree + 1)
    )


def _check(algebra):
    if not algebra.ring.is_standard:
        raise ValueError(
            "Compressed algebras are defined for standard gradings, not {}.".format(
                algebra.ring
            )
        )
    if not algebra.is_gorenstein():
        raise NotGorenstein(
            "The quotient by {} has a socle of dimension {}.".format(
                algebra.ideal, algebra.socle_dimension
            )
        )


def is_compressed(algebra):
    """
    True if the Hilbert function of a standard graded Gorenstein algebra is
    the largest possible for its embedding dimension and socle degree
    """
    _check(algebra)
    expected = maximal_hilbert(algebra.embedding_dimension, algebra.top_degree)
    return tuple(algebra.hilbert) == expected


def bug_obstruction(algebra):
    """
    Known obstruction to being a cohomological blow-up

    Compressed algebras of embedding dimension at least 3 and socle degree
    4 or at least 6 are not cohomological blow-ups along surjective maps.

    Returns
    -------
    obstruction : str
        :data:`NOT_BLOWUP` or :data:`NO_OBSTRUCTION`.
    """
    _check(algebra)
    degree = algebra.top_degree
    if (
        is_compressed(algebra)
        and algebra.embedding_dimension >= 3
        and (degree == 4 or degree >= 6)
    ):
        return NOT_BLOWUP
    return NO_OBSTRUCTION
