# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Random instances and small helpers for running tests
"""
import numpy as np
import pytest

from .. import GradedIdeal, GradedRing, Polynomial, contract, parse_poly


def ring(names, weights=None, field=None):
    """
    Graded ring from space separated variable names
    """
    if field is None:
        return GradedRing(tuple(names.split()), weights)
    return GradedRing(tuple(names.split()), weights, field=field)


def ideal(graded_ring, *generators):
    """
    Ideal generated by polynomials given as text
    """
    return GradedIdeal(
        graded_ring, [parse_poly(text, graded_ring) for text in generators]
    )


def dual(text, graded_ring):
    """
    Dual form written in the mirror of a primal ring
    """
    return parse_poly(text, graded_ring.mirror())


def random_polynomial(graded_ring, degree, random, bound=5, density=1.0):
    """
    Homogeneous polynomial with random integer coefficients

    Parameters
    ----------
    graded_ring : :class:`gorenstein.GradedRing`
    degree : int
    random : :class:`numpy.random.Generator`
    bound : int
        Coefficients are drawn from ``[-bound, bound]``.
    density : float
        Probability that each monomial gets a coefficient.

    Returns
    -------
    polynomial : :class:`gorenstein.Polynomial`
        Never zero when the degree piece is not.
    """
    monomials = graded_ring.monomials(degree)
    while True:
        values = random.integers(-bound, bound + 1, size=len(monomials))
        keep = random.random(size=len(monomials)) < density
        terms = {
            m: int(value)
            for m, value, k in zip(monomials, values, keep)
            if k and value
        }
        if terms or not monomials:
            return Polynomial(graded_ring, terms)


def random_form(graded_ring, degree, random, bound=5, density=1.0):
    """
    Random dual form of the mirror of a primal ring
    """
    return random_polynomial(graded_ring.mirror(), degree, random, bound, density)


def random_generator(seed):
    "Seeded numpy random generator."
    return np.random.default_rng(seed)


def random_restriction(graded_ring, degree, codegree, random):
    """
    Random dual form with an element of the primal ring that does not kill it

    Returns
    -------
    form, thom, target : :class:`gorenstein.Polynomial`
        ``target`` is the nonzero contraction of ``form`` by ``thom``, of
        degree ``degree - codegree``.
    """
    form = random_form(graded_ring, degree, random)
    while True:
        thom = random_polynomial(graded_ring, codegree, random)
        target = contract(thom, form)
        if target:
            return form, thom, target


def seeds(count, fast=3):
    "Seeds of a randomized test. All but the first few are marked slow."
    return [
        seed if seed < fast else pytest.param(seed, marks=pytest.mark.slow)
        for seed in range(count)
    ]
