# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Lefschetz properties and Jordan types of multiplication by linear forms
"""
import itertools
import string
import warnings
from dataclasses import dataclass, field

import numpy as np
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring as parameter_ring

from ._errors import ConsistencyError, EnumerationTooLarge, NotSquare, RingMismatch
from ._exact import determinant, mat_mul, mat_rank
from ._polys import GradedRing, Polynomial
from .constants import DEFAULT_BOUND, DEFAULT_SEED, DEFAULT_TRIALS, EXHAUSTIVE_CAP


@dataclass(frozen=True)
class HilbertCombinatorics:
    """
    Partition data of a Hilbert function

    Attributes
    ----------
    conjugate : tuple of int
        The conjugate partition :math:`H^\\vee`, with
        :math:`H^\\vee_k = \\#\\{i : H_i > k\\}`.
    sperner : int
        Largest value of the Hilbert function.
    """

    conjugate: tuple
    sperner: int


@dataclass(frozen=True)
class LefschetzVerdict:
    """
    Lefschetz properties of a linear form

    Attributes
    ----------
    form : :class:`gorenstein.Polynomial`
        The linear form :math:`\\ell`.
    slp : bool
        True if every map :math:`\\times \\ell^j: A_i \\to A_{i+j}` has
        full rank.
    wlp : bool
        True if every map :math:`\\times \\ell: A_i \\to A_{i+1}` has full
        rank.
    jordan : tuple of int
        Jordan type of multiplication by :math:`\\ell` on :math:`A`.
    failing_map : tuple or None
        The first ``(i, j)`` where :math:`\\times \\ell^j` does not have full
        rank, trying ``j = 1`` in every degree first.
    maximal_types : tuple of tuples
        For searches over many forms, all dominance-maximal Jordan types
        found. A single type when one form was checked.
    searched : int
        Number of linear forms checked.
    """

    form: Polynomial
    slp: bool
    wlp: bool
    jordan: tuple
    failing_map: object = None
    maximal_types: tuple = field(default=())
    searched: int = 1


def _conjugate(values):
    values = np.asarray(values, dtype=int)
    if values.size == 0:
        return ()
    return tuple(int(np.count_nonzero(values > k)) for k in range(int(values.max())))


def hilbert_combinatorics(hilbert):
    """
    Conjugate partition and Sperner number of a Hilbert function

    Examples
    --------
    >>> hilbert_combinatorics((1, 2, 1))
    HilbertCombinatorics(conjugate=(3, 1), sperner=2)
    """
    values = np.asarray(hilbert, dtype=int)
    if np.any(values < 0):
        raise ValueError(
            "Invalid Hilbert function {}. Values must be nonnegative.".format(
                tuple(hilbert)
            )
        )
    sperner = int(values.max()) if values.size else 0
    return HilbertCombinatorics(conjugate=_conjugate(values), sperner=sperner)


def jordan_from_ranks(ranks):
    """
    Partition of a nilpotent operator from the ranks of its powers

    Parameters
    ----------
    ranks : sequence of int
        :math:`\\mathrm{rank}(L^k)` for :math:`k = 0, 1, \\dots`, starting
        with the dimension and ending at zero or earlier.

    Returns
    -------
    jordan : tuple of int
        Block sizes in weakly decreasing order. The number of blocks of size
        at least ``k`` is :math:`\\mathrm{rank}(L^{k-1}) -
        \\mathrm{rank}(L^k)`.
    """
    ranks = np.append(np.asarray(ranks, dtype=int), 0)
    at_least = -np.diff(ranks)
    if np.any(at_least < 0) or np.any(np.diff(at_least) > 0):
        raise ConsistencyError(
            "Ranks {} are not those of the powers of a nilpotent operator.".format(
                tuple(int(r) for r in ranks[:-1])
            )
        )
    return _conjugate(at_least)


def dominates(first, second):
    """
    True if the first partition dominates the second

    Partial sums of the parts in decreasing order are compared after padding
    the shorter partition with zeros.
    """
    size = max(len(first), len(second))
    first = np.pad(np.asarray(first, dtype=int), (0, size - len(first)))
    second = np.pad(np.asarray(second, dtype=int), (0, size - len(second)))
    return bool(np.all(np.cumsum(first) >= np.cumsum(second)))


def nilpotent_jordan_type(matrix):
    """
    Jordan type of a nilpotent square matrix from the ranks of its powers

    Parameters
    ----------
    matrix : :class:`sympy.polys.matrices.DomainMatrix`

    Returns
    -------
    jordan : tuple of int
    """
    nrows, ncols = matrix.shape
    if nrows != ncols:
        raise NotSquare("Matrix of shape {} is not square.".format(matrix.shape))
    ranks = [nrows]
    power = matrix
    while ranks[-1]:
        rank = mat_rank(power)
        if rank == ranks[-1]:
            raise ValueError("The matrix is not nilpotent.")
        ranks.append(rank)
        power = mat_mul(power, matrix)
    return jordan_from_ranks(ranks)


def _check_form(algebra, form):
    if form.ring != algebra.ring:
        raise RingMismatch(
            "Linear form of {} used in a quotient of {}.".format(
                form.ring, algebra.ring
            )
        )
    if form and (not form.is_homogeneous() or form.degree != 1):
        raise ValueError("Element '{}' is not a linear form.".format(form))


def multiplication_matrix(algebra, form, degree, power=1):
    """
    Matrix of :math:`\\times \\ell^j: A_i \\to A_{i+j}`

    Parameters
    ----------
    algebra : :class:`gorenstein.ArtinianAlgebra`
    form : :class:`gorenstein.Polynomial`
        A form of degree 1, or zero.
    degree : int
        The source degree ``i``.
    power : int
        The exponent ``j``.

    Returns
    -------
    matrix : :class:`sympy.polys.matrices.DomainMatrix`
        Of shape :math:`(H_{i+j}, H_i)` in the standard monomial bases.

    Examples
    --------
    >>> from gorenstein import GradedIdeal, GradedRing, Polynomial, quotient
    >>> ring = GradedRing(("x",))
    >>> x = Polynomial.variable(ring, "x")
    >>> algebra = quotient(GradedIdeal(ring, [x**3]))
    >>> multiplication_matrix(algebra, x, 0, 2).to_Matrix()
    Matrix([[1]])
    """
    _check_form(algebra, form)
    if power < 0 or not 0 <= degree <= degree + power <= algebra.top_degree:
        raise ValueError(
            "Invalid degrees {} and {} for an algebra of socle degree {}.".format(
                degree, degree + power, algebra.top_degree
            )
        )
    shape = (len(algebra.basis(degree + power)), len(algebra.basis(degree)))
    element = algebra.normal_form(form**power)
    if not element:
        return DomainMatrix.zeros(shape, algebra.field.domain)
    return algebra.multiplication_matrix(element, degree)


def _rank_table(algebra, form):
    "Ranks of every power map, keyed by (degree, power)"
    _check_form(algebra, form)
    top = algebra.top_degree
    steps = [multiplication_matrix(algebra, form, i) for i in range(top)]
    ranks = {}
    for i in range(top):
        product = steps[i]
        ranks[(i, 1)] = mat_rank(product)
        for j in range(2, top - i + 1):
            product = mat_mul(steps[i + j - 1], product)
            ranks[(i, j)] = mat_rank(product)
    return ranks


def _jordan(algebra, ranks):
    totals = [algebra.dimension]
    for power in range(1, algebra.top_degree + 1):
        totals.append(
            sum(ranks[(i, power)] for i in range(algebra.top_degree - power + 1))
        )
    return jordan_from_ranks(totals)


def jordan_type(algebra, form):
    """
    Jordan type of multiplication by a linear form

    Examples
    --------
    >>> from gorenstein import GradedIdeal, GradedRing, Polynomial, quotient
    >>> ring = GradedRing(("x",))
    >>> x = Polynomial.variable(ring, "x")
    >>> jordan_type(quotient(GradedIdeal(ring, [x**3])), x)
    (3,)
    """
    return _jordan(algebra, _rank_table(algebra, form))


def _is_unimodal(hilbert):
    steps = np.sign(np.diff(np.asarray(hilbert, dtype=int)))
    steps = steps[steps != 0]
    return not np.any(np.diff(steps) > 0)


def lefschetz_status(algebra, form):
    """
    Decide the strong and weak Lefschetz properties for a linear form

    Every map :math:`\\times \\ell^j: A_i \\to A_{i+j}` is checked for full
    rank. For standard graded Gorenstein algebras with unimodal Hilbert
    function, the rank decisions are compared with the Jordan type: the
    strong property holds exactly when it is the conjugate of the Hilbert
    function and the weak one exactly when it has as many parts as the
    Sperner number. A disagreement raises
    :class:`gorenstein.ConsistencyError`. The comparison is skipped with a
    warning for non-standard gradings.

    Parameters
    ----------
    algebra : :class:`gorenstein.ArtinianAlgebra`
    form : :class:`gorenstein.Polynomial`

    Returns
    -------
    verdict : :class:`gorenstein.LefschetzVerdict`
    """
    ranks = _rank_table(algebra, form)
    hilbert = algebra.hilbert
    failing = [
        (i, j)
        for (i, j), rank in sorted(ranks.items(), key=lambda item: item[0][::-1])
        if rank != min(hilbert[i], hilbert[i + j])
    ]
    slp = not failing
    wlp = not any(j == 1 for _, j in failing)
    jordan = _jordan(algebra, ranks)
    if not algebra.ring.is_standard:
        warnings.warn(
            "Skipping the Jordan type comparison for the non-standard grading "
            "of {}.".format(algebra.ring),
            UserWarning,
            stacklevel=2,
        )
    elif _is_unimodal(hilbert) and algebra.is_gorenstein():
        combinatorics = hilbert_combinatorics(hilbert)
        if slp != (jordan == combinatorics.conjugate):
            raise ConsistencyError(
                "Rank checks give SLP {} but the Jordan type {} is compared with "
                "{}.".format(slp, jordan, combinatorics.conjugate)
            )
        if wlp != (len(jordan) == combinatorics.sperner):
            raise ConsistencyError(
                "Rank checks give WLP {} but the Jordan type {} has {} parts for "
                "Sperner number {}.".format(
                    wlp, jordan, len(jordan), combinatorics.sperner
                )
            )
    return LefschetzVerdict(
        form=form,
        slp=slp,
        wlp=wlp,
        jordan=jordan,
        failing_map=failing[0] if failing else None,
        maximal_types=(jordan,),
    )


def _linear_variables(ring):
    names = [name for name in ring.names if ring.weights[ring.index(name)] == 1]
    if not names:
        raise ValueError("The ring {} has no variables of degree 1.".format(ring))
    return names


def _linear_form(ring, names, coefficients):
    terms = {}
    for name, coefficient in zip(names, coefficients):
        exponents = [0] * ring.nvars
        exponents[ring.index(name)] = 1
        terms[tuple(exponents)] = ring.field(int(coefficient))
    return Polynomial(ring, terms)


def random_forms(ring, trials=DEFAULT_TRIALS, bound=DEFAULT_BOUND, seed=DEFAULT_SEED):
    """
    Linear forms with random integer coefficients in ``[-bound, bound]``

    Every trial draws from its own generator spawned from ``seed``, so the
    forms don't depend on the order in which they are used.

    Parameters
    ----------
    ring : :class:`gorenstein.GradedRing`
    trials : int
    bound : int
    seed : int

    Returns
    -------
    forms : list of :class:`gorenstein.Polynomial`
    """
    if trials < 1:
        raise ValueError("Invalid number of trials '{}'.".format(trials))
    if bound < 1:
        raise ValueError("Invalid coefficient bound '{}'.".format(bound))
    names = _linear_variables(ring)
    forms = []
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        coefficients = rng.integers(-bound, bound, size=len(names), endpoint=True)
        forms.append(_linear_form(ring, names, coefficients))
    return forms


def enumerate_forms(ring, cap=EXHAUSTIVE_CAP):
    """
    All nonzero linear forms over a prime field, up to scalar

    The first nonzero coefficient of every form is 1.

    Raises
    ------
    gorenstein.EnumerationTooLarge
        If there are more than ``cap`` forms.
    """
    if not ring.field.is_finite:
        raise ValueError(
            "Exhaustive search needs a finite field, not {}.".format(ring.field)
        )
    names = _linear_variables(ring)
    prime = ring.field.characteristic
    count = (prime ** len(names) - 1) // (prime - 1)
    if count > cap:
        raise EnumerationTooLarge(
            "There are {} linear forms over {} up to scalar, more than the cap "
            "of {}.".format(count, ring.field, cap)
        )
    for leading in range(len(names)):
        for rest in itertools.product(range(prime), repeat=len(names) - leading - 1):
            coefficients = [0] * leading + [1] + list(rest)
            yield _linear_form(ring, names, coefficients)


def _maximal(types):
    maximal = []
    for candidate in types:
        if candidate in maximal:
            continue
        if any(dominates(other, candidate) for other in types if other != candidate):
            continue
        maximal.append(candidate)
    return tuple(maximal)


def generic_lefschetz(
    algebra,
    strategy="random",
    trials=DEFAULT_TRIALS,
    bound=DEFAULT_BOUND,
    seed=DEFAULT_SEED,
    cap=EXHAUSTIVE_CAP,
):
    """
    Lefschetz properties of a general linear form

    The ``"random"`` strategy checks forms drawn by
    :func:`gorenstein.random_forms`. The ``"exhaustive"`` strategy checks
    every linear form over a prime field up to scalar, so a negative answer
    holds for all forms. Either search stops at the first strong Lefschetz
    element.

    Parameters
    ----------
    algebra : :class:`gorenstein.ArtinianAlgebra`
    strategy : str
        ``"random"`` or ``"exhaustive"``.
    trials, bound, seed : int
        Used by the random strategy.
    cap : int
        Largest number of forms the exhaustive strategy may check.

    Returns
    -------
    verdict : :class:`gorenstein.LefschetzVerdict`
        The verdict of the best form found: a strong Lefschetz element, or
        else a weak one, or else a form of dominance-maximal Jordan type.
        ``maximal_types`` holds every dominance-maximal Jordan type found.
    """
    if strategy == "random":
        forms = random_forms(algebra.ring, trials=trials, bound=bound, seed=seed)
    elif strategy == "exhaustive":
        forms = enumerate_forms(algebra.ring, cap=cap)
    else:
        raise ValueError(
            "Invalid strategy '{}'. Must be 'random' or 'exhaustive'.".format(
                strategy
            )
        )
    verdicts = []
    for form in forms:
        verdicts.append(lefschetz_status(algebra, form))
        if verdicts[-1].slp:
            break
    maximal = _maximal([verdict.jordan for verdict in verdicts])
    best = min(
        verdicts,
        key=lambda v: (not v.slp, not v.wlp, v.jordan not in maximal),
    )
    return LefschetzVerdict(
        form=best.form,
        slp=best.slp,
        wlp=best.wlp,
        jordan=best.jordan,
        failing_map=best.failing_map,
        maximal_types=maximal,
        searched=len(verdicts),
    )


def _default_parameters(ring, count):
    names = [letter for letter in string.ascii_lowercase if letter not in ring.names]
    if count > len(names):
        raise ValueError("Can't name {} parameters.".format(count))
    return tuple(names[:count])


def symbolic_lefschetz_determinant(algebra, degree, parameter_names=None):
    """
    Determinant of :math:`\\times \\ell: A_i \\to A_{i+1}` for a symbolic form

    The form is :math:`\\ell = \\sum_k a_k x_k` over the variables of degree
    1, with one parameter :math:`a_k` per variable. The determinant is
    computed by fraction-free elimination over the polynomial ring of the
    parameters.

    Parameters
    ----------
    algebra : :class:`gorenstein.ArtinianAlgebra`
    degree : int
        The source degree ``i``. Requires :math:`H_i = H_{i+1}`.
    parameter_names : sequence of str or None
        One name per variable of degree 1. Defaults to the first letters of
        the alphabet not used by the ring.

    Returns
    -------
    determinant : :class:`gorenstein.Polynomial`
        Element of a ring with the parameters as variables.

    Raises
    ------
    gorenstein.NotSquare
        If :math:`H_i \\neq H_{i+1}`.

    Examples
    --------
    >>> from gorenstein import GradedIdeal, GradedRing, Polynomial, quotient
    >>> ring = GradedRing(("x",))
    >>> x = Polynomial.variable(ring, "x")
    >>> algebra = quotient(GradedIdeal(ring, [x**2]))
    >>> str(symbolic_lefschetz_determinant(algebra, 0))
    'a'
    """
    if not 0 <= degree < algebra.top_degree:
        raise ValueError(
            "Invalid degree {} for an algebra of socle degree {}.".format(
                degree, algebra.top_degree
            )
        )
    hilbert = algebra.hilbert
    if hilbert[degree] != hilbert[degree + 1]:
        raise NotSquare(
            "Multiplication from degree {} is a {} by {} matrix.".format(
                degree, hilbert[degree + 1], hilbert[degree]
            )
        )
    ring = algebra.ring
    names = _linear_variables(ring)
    if parameter_names is None:
        parameter_names = _default_parameters(ring, len(names))
    parameter_names = tuple(parameter_names)
    if len(parameter_names) != len(names):
        raise ValueError(
            "Got {} parameter names for {} variables of degree 1.".format(
                len(parameter_names), len(names)
            )
        )
    polys, *parameters = parameter_ring(parameter_names, ring.field.domain)
    size = hilbert[degree]
    rows = [[polys.zero] * size for _ in range(size)]
    for name, parameter in zip(names, parameters):
        variable = Polynomial.variable(ring, name)
        block = algebra.multiplication_matrix(variable, degree).to_ddm()
        for i, row in enumerate(block):
            for j, value in enumerate(row):
                if value:
                    rows[i][j] += parameter * polys.ground_new(value)
    result = determinant(rows, polys.to_domain())
    target = GradedRing(parameter_names, field=ring.field)
    return Polynomial(target, dict(result.items()))
