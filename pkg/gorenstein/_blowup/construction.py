# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Blow-up algebras presented as quotients of A[xi]
"""
import warnings
from dataclasses import dataclass

from .._apolarity import (
    GradedIdeal,
    OrientedAlgebra,
    hilbert_combination,
    make_map,
    natural_map,
    orient,
    preimage,
    quotient,
    thom_class,
)
from .._exact import mat_rank, mat_solve, matrix
from .._errors import (
    ConsistencyError,
    NotGorenstein,
    NotMonic,
    NotSurjective,
    RingMismatch,
    WrongDegree,
    ZeroThomClass,
)
from .._polys import Polynomial
from ..constants import BLOWUP_VARIABLE


def _plain(algebra):
    if isinstance(algebra, OrientedAlgebra):
        return algebra.algebra
    return algebra


def blowup_ring(ring, variable=BLOWUP_VARIABLE):
    """
    The ring with the blow-up variable of weight 1 adjoined last
    """
    return ring.adjoin(variable, 1)


def split_monic(polynomial, ring):
    """
    Coefficients of a monic polynomial in the blow-up variable

    Parameters
    ----------
    polynomial : :class:`gorenstein.Polynomial`
        Homogeneous element of ``ring`` with one extra variable of weight 1,
        placed last.
    ring : :class:`gorenstein.GradedRing`
        The base ring.

    Returns
    -------
    variable : str
        Name of the blow-up variable.
    degree : int
        The degree ``n`` in the blow-up variable.
    coefficients : list of :class:`gorenstein.Polynomial`
        ``[r_1, ..., r_n]`` in the base ring, where ``r_i`` multiplies
        ``xi^(n - i)``.
    """
    big = polynomial.ring
    if big.nvars != ring.nvars + 1 or big.names[:-1] != ring.names:
        raise RingMismatch(
            "Polynomial '{}' must live in {} with one more variable.".format(
                polynomial, ring
            )
        )
    variable = big.names[-1]
    if big.weights[-1] != 1:
        raise ValueError("Blow-up variable '{}' must have weight 1.".format(variable))
    if not polynomial.is_homogeneous():
        raise ValueError("Polynomial '{}' is not homogeneous.".format(polynomial))
    parts = polynomial.coefficients_in(variable)
    degree = max(parts, default=0)
    leading = parts.get(degree)
    if leading is None or leading != Polynomial.constant(big, 1):
        raise NotMonic(
            "Polynomial '{}' is not monic in '{}'.".format(polynomial, variable)
        )
    coefficients = []
    for i in range(1, degree + 1):
        part = parts.get(degree - i, Polynomial.zero(big))
        coefficients.append(part.embed(ring))
    return variable, degree, coefficients


def monic_polynomial(ring, coefficients, variable=BLOWUP_VARIABLE):
    """
    Assemble ``xi^n + r_1 xi^(n-1) + ... + r_n`` from its coefficients

    Parameters
    ----------
    ring : :class:`gorenstein.GradedRing`
        Base ring of the coefficients.
    coefficients : list of :class:`gorenstein.Polynomial`
        ``[r_1, ..., r_n]`` with ``r_i`` homogeneous of degree ``i`` (or
        zero).
    variable : str
        Name of the blow-up variable.

    Returns
    -------
    polynomial : :class:`gorenstein.Polynomial`
        In ``blowup_ring(ring, variable)``.
    """
    big = blowup_ring(ring, variable)
    xi = Polynomial.variable(big, variable)
    degree = len(coefficients)
    result = xi**degree
    for i, coefficient in enumerate(coefficients, start=1):
        homogeneous = coefficient.is_homogeneous() and coefficient.degree == i
        if coefficient and not homogeneous:
            raise WrongDegree(
                "Coefficient '{}' of {}^{} must be homogeneous of degree {}.".format(
                    coefficient, variable, degree - i, i
                )
            )
        result = result + coefficient.embed(big) * xi ** (degree - i)
    return result


@dataclass
class HatAlgebra:
    """
    The algebra :math:`\\hat{A} = A[\\xi]/(\\xi K, f)` and its maps

    Attributes
    ----------
    algebra : :class:`gorenstein.ArtinianAlgebra`
        The quotient :math:`\\hat{A}`, presented over :math:`R[\\xi]`.
    exceptional : :class:`gorenstein.ArtinianAlgebra`
        The quotient :math:`\\tilde{T} = R[\\xi]/(K, f)`.
    beta : :class:`gorenstein.AlgebraMap`
        :math:`A \\to \\hat{A}`.
    pi_hat : :class:`gorenstein.AlgebraMap`
        :math:`\\hat{A} \\to \\tilde{T}`.
    polynomial : :class:`gorenstein.Polynomial`
        The monic polynomial ``f``.
    degree : int
        Its degree ``n`` in the blow-up variable.
    """

    algebra: object
    exceptional: object
    beta: object
    pi_hat: object
    polynomial: Polynomial
    degree: int


def hat_ideal(algebra_map, polynomial):
    """
    Defining ideal :math:`I R[\\xi] + \\xi K R[\\xi] + (f)` in the big ring
    """
    big = polynomial.ring
    source = _plain(algebra_map.source)
    xi = Polynomial.variable(big, big.names[-1])
    generators = [g.embed(big) for g in source.ideal.minimal_generators()]
    generators += [xi * g.embed(big) for g in algebra_map.kernel.minimal_generators()]
    generators.append(polynomial)
    return GradedIdeal(big, generators)


def construct_hat(algebra_map, polynomial):
    """
    Quotient :math:`A[\\xi]/(\\xi K, f_A(\\xi))` along a surjective map

    No Gorenstein requirement: the result may have a socle of any dimension
    and ``beta`` may fail to be injective.

    Parameters
    ----------
    algebra_map : :class:`gorenstein.AlgebraMap`
        Surjective map :math:`\\pi: A \\to T` of socle degrees
        :math:`d \\geq k`.
    polynomial : :class:`gorenstein.Polynomial`
        Monic homogeneous polynomial of degree :math:`n = d - k` in the
        blow-up variable, in the base ring of :math:`A` with that variable
        adjoined.

    Returns
    -------
    hat : :class:`gorenstein.HatAlgebra`
    """
    if not algebra_map.surjective:
        raise NotSurjective("Blow-ups are only defined along surjective maps.")
    source = _plain(algebra_map.source)
    target = _plain(algebra_map.target)
    _, degree, _ = split_monic(polynomial, source.ring)
    expected = source.top_degree - target.top_degree
    if degree != expected:
        raise WrongDegree(
            "Polynomial '{}' has degree {} in the blow-up variable instead of "
            "d - k = {}.".format(polynomial, degree, expected)
        )
    big = polynomial.ring
    algebra = quotient(hat_ideal(algebra_map, polynomial))
    exceptional = quotient(
        GradedIdeal(
            big,
            [g.embed(big) for g in algebra_map.kernel.minimal_generators()]
            + [polynomial],
        )
    )
    return HatAlgebra(
        algebra=algebra,
        exceptional=exceptional,
        beta=natural_map(source, algebra),
        pi_hat=natural_map(algebra, exceptional),
        polynomial=polynomial,
        degree=degree,
    )


@dataclass(frozen=True)
class CriterionReport:
    """
    Gorenstein criterion for :math:`\\hat{A}`

    Attributes
    ----------
    beta_injective : bool
    gorenstein : bool
    lam : field element or None
        The scalar with :math:`a_n = \\lambda \\tau`, or None if the constant
        coefficient is not a multiple of the Thom class.
    """

    beta_injective: bool
    gorenstein: bool
    lam: object


def _scalar_multiple(element, base):
    "The scalar c with element == c * base, or None"
    if not element:
        return element.field.zero
    if not base:
        return None
    monomial, value = base.sorted_terms()[0]
    scale = element.coefficient(monomial) * element.field.inverse(value)
    if element != base.scale(scale):
        return None
    return scale


def _thom(algebra_map):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        thom = thom_class(algebra_map)
    if not thom.is_restriction:
        raise ZeroThomClass("The map {} has a zero Thom class.".format(algebra_map))
    return thom


def gorenstein_criterion(algebra_map, polynomial):
    """
    Decide whether :math:`\\hat{A}` is Gorenstein and ``beta`` injective

    The answer is found twice: once from the constant coefficient
    :math:`a_n` (injective exactly when :math:`a_n = \\lambda \\tau`,
    Gorenstein exactly when moreover :math:`\\lambda \\neq 0`) and once from
    the socle of :math:`\\hat{A}` and the kernel of ``beta``. Raises
    :class:`gorenstein.ConsistencyError` if the two disagree.

    Parameters
    ----------
    algebra_map : :class:`gorenstein.AlgebraMap`
        Surjective map between oriented algebras with nonzero Thom class.
    polynomial : :class:`gorenstein.Polynomial`
        As in :func:`gorenstein.construct_hat`.

    Returns
    -------
    report : :class:`gorenstein.CriterionReport`
    """
    hat = construct_hat(algebra_map, polynomial)
    if hat.degree < 1:
        raise WrongDegree("The criterion needs d - k >= 1.")
    source = _plain(algebra_map.source)
    tau = _thom(algebra_map).thom_class
    _, _, coefficients = split_monic(polynomial, source.ring)
    constant = source.normal_form(coefficients[-1])
    lam = _scalar_multiple(constant, tau)
    gorenstein = hat.algebra.is_gorenstein()
    injective = hat.beta.kernel.hilbert() == source.hilbert
    if injective != (lam is not None) or gorenstein != (lam is not None and bool(lam)):
        raise ConsistencyError(
            "Constant coefficient '{}' against Thom class '{}' predicts "
            "injective={}, Gorenstein={}, but the algebra has injective={}, "
            "Gorenstein={}.".format(
                constant,
                tau,
                lam is not None,
                lam is not None and bool(lam),
                injective,
                gorenstein,
            )
        )
    return CriterionReport(beta_injective=injective, gorenstein=gorenstein, lam=lam)


def exceptional_divisor(target, polynomial):
    """
    Free extension :math:`\\tilde{T} = T[\\xi]/(f_T(\\xi))`

    Parameters
    ----------
    target : :class:`gorenstein.OrientedAlgebra` or :class:`gorenstein.ArtinianAlgebra`
        Artinian Gorenstein algebra :math:`T`. A plain algebra gets the
        orientation of its normalized dual generator.
    polynomial : :class:`gorenstein.Polynomial`
        Monic homogeneous polynomial of degree ``n >= 1`` in the blow-up
        variable over the ring of ``target``.

    Returns
    -------
    exceptional : :class:`gorenstein.OrientedAlgebra`
        Oriented by the socle generator :math:`\\xi^{n-1} t_{soc}`.
    """
    if not isinstance(target, OrientedAlgebra):
        target = orient(target)
    variable, degree, _ = split_monic(polynomial, target.ring)
    if degree < 1:
        raise WrongDegree("The extension needs degree at least 1 in the variable.")
    big = polynomial.ring
    ideal = GradedIdeal(
        big, [g.embed(big) for g in target.ideal.minimal_generators()] + [polynomial]
    )
    algebra = quotient(ideal)
    expected = hilbert_combination(*[(1, target.hilbert, i) for i in range(degree)])
    if algebra.hilbert != expected:
        raise ConsistencyError(
            "Extension by '{}' has Hilbert function {} instead of {}.".format(
                polynomial, algebra.hilbert, expected
            )
        )
    xi = Polynomial.variable(big, variable)
    socle = xi ** (degree - 1) * target.socle_generator.embed(big)
    return orient(algebra, socle_generator=socle)


def truncated_extension(target, degree, variable=BLOWUP_VARIABLE):
    """
    Tensor product :math:`T[\\xi]/(\\xi^n)` with a truncated polynomial ring
    """
    big = blowup_ring(target.ring, variable)
    return exceptional_divisor(target, Polynomial.variable(big, variable) ** degree)


@dataclass(frozen=True)
class BlowUpParameters:
    """
    Parameters of a cohomological blow-up

    Attributes
    ----------
    coefficients : tuple of :class:`gorenstein.Polynomial`
        Elements :math:`a_1, \\dots, a_{n-1}` of the source ring with
        :math:`\\deg a_i = i` (zeros allowed). Their images in the target are
        the parameters :math:`t_i`.
    lam : field element, int or str
        The nonzero scalar :math:`\\lambda`. The constant coefficient is
        always :math:`\\lambda \\tau`.
    variable : str
        Name of the blow-up variable.
    """

    coefficients: tuple = ()
    lam: object = 1
    variable: str = BLOWUP_VARIABLE


@dataclass
class BlowUpResult:
    """
    A cohomological blow-up with its exceptional divisor

    Attributes
    ----------
    tilde_A, tilde_T : :class:`gorenstein.OrientedAlgebra`
        The blow-up and the exceptional divisor, with their preferred
        orientations.
    beta : :class:`gorenstein.AlgebraMap`
        :math:`A \\to \\tilde{A}`.
    beta0 : :class:`gorenstein.AlgebraMap`
        :math:`T \\to \\tilde{T}`.
    pi_hat : :class:`gorenstein.AlgebraMap`
        :math:`\\tilde{A} \\to \\tilde{T}`.
    tilde_thom : :class:`gorenstein.Polynomial`
        Thom class :math:`-\\lambda^{-1}\\xi` of ``pi_hat``.
    algebra_map : :class:`gorenstein.AlgebraMap`
        The map :math:`\\pi` blown up along.
    parameters : :class:`gorenstein.BlowUpParameters`
    thom : :class:`gorenstein.Polynomial`
        Thom class :math:`\\tau` of :math:`\\pi`.
    polynomial : :class:`gorenstein.Polynomial`
        The monic polynomial :math:`f_R(\\xi)`.
    degree : int
        :math:`n = d - k`.
    """

    tilde_A: OrientedAlgebra
    tilde_T: OrientedAlgebra
    beta: object
    beta0: object
    pi_hat: object
    tilde_thom: Polynomial
    algebra_map: object
    parameters: BlowUpParameters
    thom: Polynomial
    polynomial: Polynomial
    degree: int

    @property
    def lam(self):
        "The scalar of the constant coefficient."
        return self.tilde_A.field(self.parameters.lam)


def blowup_polynomial(algebra_map, parameters):
    """
    The monic polynomial :math:`\\xi^n + a_1 \\xi^{n-1} + \\dots + \\lambda\\tau`
    """
    source = _plain(algebra_map.source)
    target = _plain(algebra_map.target)
    degree = source.top_degree - target.top_degree
    if degree < 1:
        raise WrongDegree(
            "Blow-ups need d - k >= 1, got d = {} and k = {}.".format(
                source.top_degree, target.top_degree
            )
        )
    coefficients = list(parameters.coefficients)
    if len(coefficients) != degree - 1:
        raise ValueError(
            "Got {} coefficients for n = {}. Expected n - 1 = {}.".format(
                len(coefficients), degree, degree - 1
            )
        )
    lam = source.field(parameters.lam)
    if not lam:
        raise ValueError("The blow-up scalar lambda must be nonzero.")
    tau = _thom(algebra_map).thom_class
    coefficients = [
        source.normal_form(c) if c else Polynomial.zero(source.ring)
        for c in coefficients
    ]
    return monic_polynomial(
        source.ring, coefficients + [tau.scale(lam)], parameters.variable
    )


def cohomological_blowup(algebra_map, parameters=None):
    """
    Cohomological blow-up of an algebra along a surjective map

    Builds :math:`\\tilde{A} = A[\\xi]/(\\xi K, \\xi^n + a_1 \\xi^{n-1} +
    \\dots + a_{n-1}\\xi + \\lambda\\tau)` and its exceptional divisor
    :math:`\\tilde{T} = T[\\xi]/(f_T(\\xi))` with their preferred
    orientations :math:`\\tilde{a}_{soc} = \\beta(a_{soc})` and
    :math:`\\tilde{t}_{soc} = \\xi^{n-1} t_{soc}`. Verifies that
    :math:`\\tilde{A}` is Gorenstein, the Hilbert function identity
    :math:`H(\\tilde{A}) = H(A) + H(T)[1] + \\dots + H(T)[n-1]`, the commuting
    square and that the Thom class of :math:`\\tilde{A} \\to \\tilde{T}` is
    :math:`-\\lambda^{-1}\\xi`.

    Parameters
    ----------
    algebra_map : :class:`gorenstein.AlgebraMap`
        Surjective map :math:`\\pi: A \\to T` between oriented algebras of
        socle degrees :math:`d > k`, with nonzero Thom class.
    parameters : :class:`gorenstein.BlowUpParameters` or None
        Defaults to all :math:`a_i = 0` and :math:`\\lambda = 1`.

    Returns
    -------
    result : :class:`gorenstein.BlowUpResult`
    """
    if parameters is None:
        source = _plain(algebra_map.source)
        target = _plain(algebra_map.target)
        zero = Polynomial.zero(source.ring)
        parameters = BlowUpParameters(
            coefficients=(zero,) * max(source.top_degree - target.top_degree - 1, 0)
        )
    if not algebra_map.surjective:
        raise NotSurjective("Blow-ups are only defined along surjective maps.")
    source, target = algebra_map.source, algebra_map.target
    polynomial = blowup_polynomial(algebra_map, parameters)
    tau = _thom(algebra_map).thom_class
    hat = construct_hat(algebra_map, polynomial)
    degree = hat.degree
    big = polynomial.ring
    if not hat.algebra.is_gorenstein():
        raise ConsistencyError(
            "Blow-up with constant coefficient lambda*tau is not Gorenstein."
        )
    expected = hilbert_combination(
        (1, source.hilbert, 0), *[(1, target.hilbert, i) for i in range(1, degree)]
    )
    if hat.algebra.hilbert != expected:
        raise ConsistencyError(
            "Blow-up has Hilbert function {} instead of {}.".format(
                hat.algebra.hilbert, expected
            )
        )
    tilde_A = orient(
        hat.algebra, socle_generator=hat.beta.apply(source.socle_generator)
    )
    xi = Polynomial.variable(big, parameters.variable)
    lift = preimage(algebra_map, target.socle_generator)
    tilde_T = orient(
        hat.exceptional, socle_generator=xi ** (degree - 1) * lift.embed(big)
    )
    beta = natural_map(source, tilde_A)
    pi_hat = natural_map(tilde_A, tilde_T)
    beta0 = make_map(
        target,
        tilde_T,
        [_lift_variable(algebra_map, v).embed(big) for v in target.ring.gens()],
    )
    for variable in source.ring.gens():
        left = pi_hat.apply(beta.apply(variable))
        right = beta0.apply(algebra_map.apply(variable))
        if left != right:
            raise ConsistencyError(
                "The blow-up square does not commute on '{}': {} != {}.".format(
                    variable, left, right
                )
            )
    lam = source.field(parameters.lam)
    tilde_thom = tilde_A.normal_form(xi.scale(-source.field.inverse(lam)))
    computed = thom_class(pi_hat).thom_class
    if computed != tilde_thom:
        raise ConsistencyError(
            "Thom class of the exceptional map is '{}' instead of '{}'.".format(
                computed, tilde_thom
            )
        )
    return BlowUpResult(
        tilde_A=tilde_A,
        tilde_T=tilde_T,
        beta=beta,
        beta0=beta0,
        pi_hat=pi_hat,
        tilde_thom=tilde_thom,
        algebra_map=algebra_map,
        parameters=parameters,
        thom=tau,
        polynomial=polynomial,
        degree=degree,
    )


def _lift_variable(algebra_map, variable):
    lift = preimage(algebra_map, variable)
    if lift is None:
        raise NotSurjective(
            "Variable '{}' of the target has no preimage.".format(variable)
        )
    return lift


@dataclass(frozen=True)
class AxiomsReport:
    """
    Characterization of a blow-up by its maps

    Attributes
    ----------
    commuting : bool
        The square :math:`\\hat\\pi \\beta = \\beta_0 \\pi` commutes on the
        variables.
    euler_generates : bool
        Powers :math:`1, \\epsilon, \\dots, \\epsilon^{n-1}` of the Euler
        class form a basis of :math:`\\tilde{T}` over :math:`\\beta_0(T)`.
    relation : tuple of :class:`gorenstein.Polynomial` or None
        Elements :math:`t'_i` of the source ring of ``beta0`` with
        :math:`\\epsilon^n + \\sum_i \\beta_0(t'_i)\\epsilon^{n-i} = 0`.
    exact_sequence : bool
        ``beta`` is injective, :math:`\\hat\\pi\\beta` lands in
        :math:`\\beta_0(T)` and
        :math:`H(\\tilde{A}) = H(A) + H(\\tilde{T}/\\beta_0(T))`.
    """

    commuting: bool
    euler_generates: bool
    relation: tuple
    exact_sequence: bool

    @property
    def passed(self):
        "True if the three conditions hold."
        return self.commuting and self.euler_generates and self.exact_sequence


def verify_blowup_axioms(algebra_map, pi_hat, beta, beta0):
    """
    Check the three conditions characterizing blow-ups and their divisors

    Parameters
    ----------
    algebra_map : :class:`gorenstein.AlgebraMap`
        :math:`\\pi: A \\to T`.
    pi_hat : :class:`gorenstein.AlgebraMap`
        :math:`\\tilde\\pi: \\tilde{A} \\to \\tilde{T}`.
    beta : :class:`gorenstein.AlgebraMap`
        :math:`A \\to \\tilde{A}`.
    beta0 : :class:`gorenstein.AlgebraMap`
        :math:`T \\to \\tilde{T}`.

    Returns
    -------
    report : :class:`gorenstein.AxiomsReport`

    Raises
    ------
    gorenstein.NotGorenstein
        If one of the four algebras is not Gorenstein.
    """
    algebras = [
        algebra_map.source,
        algebra_map.target,
        pi_hat.source,
        pi_hat.target,
    ]
    oriented = []
    for algebra in algebras:
        if not isinstance(algebra, OrientedAlgebra):
            if not algebra.is_gorenstein():
                raise NotGorenstein(
                    "Blow-up axioms need Gorenstein algebras, got {}.".format(algebra)
                )
            algebra = orient(algebra)
        oriented.append(algebra)
    source, target, tilde_A, tilde_T = oriented
    if not (algebra_map.surjective and pi_hat.surjective):
        raise NotSurjective("Both restriction maps must be surjective.")
    commuting = all(
        pi_hat.apply(beta.apply(v)) == beta0.apply(algebra_map.apply(v))
        for v in source.ring.gens()
    )
    degree = source.top_degree - target.top_degree
    oriented_hat = make_map(tilde_A, tilde_T, pi_hat.images)
    euler = thom_class(oriented_hat).euler_class
    euler_generates, relation = _euler_relation(beta0, tilde_T, euler, degree)
    injective = beta.kernel.hilbert() == source.hilbert
    image = [beta0.image_dimension(d) for d in range(len(tilde_T.hilbert))]
    composite = [pi_hat.apply(beta.apply(v)) for v in source.ring.gens()]
    lands = all(_in_image(beta0, element) for element in composite)
    cokernel = tuple(h - i for h, i in zip(tilde_T.hilbert, image))
    counts = hilbert_combination((1, source.hilbert, 0), (1, cokernel, 0))
    exact = injective and lands and tilde_A.hilbert == counts
    return AxiomsReport(
        commuting=commuting,
        euler_generates=euler_generates,
        relation=relation,
        exact_sequence=exact,
    )


def _in_image(algebra_map, element):
    if not element:
        return True
    if not element.is_homogeneous():
        return all(_in_image(algebra_map, p) for p in element.graded_pieces().values())
    return preimage(algebra_map, element) is not None


def _euler_relation(beta0, tilde_T, euler, degree):
    """
    Express the Euler class powers over the image of beta0 degree by degree
    """
    field = tilde_T.field
    powers = [Polynomial.constant(tilde_T.ring, 1)]
    for _ in range(degree):
        powers.append(tilde_T.normal_form(powers[-1] * euler))
    # {beta0(t) * eps^i : i < n} must be a basis in every degree
    for top in range(len(tilde_T.hilbert)):
        _, columns = _module_columns(beta0, tilde_T, powers, degree, top)
        size = tilde_T.hilbert[top]
        if len(columns) != size:
            return False, None
        rows = [[column[i] for column in columns] for i in range(size)]
        if mat_rank(matrix(rows, field, len(columns))) != size:
            return False, None
    labels, columns = _module_columns(beta0, tilde_T, powers, degree, degree)
    size = len(tilde_T.basis(degree))
    rows = [[column[i] for column in columns] for i in range(size)]
    rhs = [-value for value in tilde_T.coordinates(powers[degree], degree)]
    solution = mat_solve(matrix(rows, field, len(columns)), rhs)
    if solution is None:
        return False, None
    ring = beta0.source.ring
    relation = [Polynomial.zero(ring) for _ in range(degree)]
    for (power, monomial), value in zip(labels, solution):
        i = degree - power
        relation[i - 1] = relation[i - 1] + Polynomial.monomial(ring, monomial, value)
    return True, tuple(relation)


def _module_columns(beta0, tilde_T, powers, degree, top):
    "Coordinates of beta0(t) * eps^i in one degree, labelled by (i, t)"
    target = beta0.source
    labels, columns = [], []
    for power in range(degree):
        for monomial in target.basis(top - power):
            element = tilde_T.normal_form(
                beta0.apply(Polynomial.monomial(target.ring, monomial)) * powers[power]
            )
            labels.append((power, monomial))
            columns.append(tilde_T.coordinates(element, top))
    return labels, columns
