# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Exceptions raised by the library

Invalid inputs raise subclasses of :class:`ValueError`. Internal cross-checks
between two independent computations raise :class:`ConsistencyError`.
"""


class ZeroInverse(ValueError, ZeroDivisionError):
    "Inverting the zero element of a field."


class DualProductOverlap(ValueError):
    "Multiplying dual forms that share variables."


class RingMismatch(ValueError):
    "Combining polynomials that live in incompatible rings."


class DuplicateVariable(ValueError):
    "Adjoining a variable whose name is already in use."


class PolynomialSyntaxError(ValueError):
    """
    Malformed polynomial expression

    Parameters
    ----------
    message : str
        Description of the problem.
    position : int
        Zero-based offset of the offending character in the parsed text.
    """

    def __init__(self, message, position):
        super().__init__("{} (at position {})".format(message, position))
        self.message = message
        self.position = position


class UnknownVariable(PolynomialSyntaxError):
    """
    Variable name that the ring does not declare

    Parameters
    ----------
    name : str
        The unknown name.
    position : int
        Zero-based offset of the name in the parsed text.
    """

    def __init__(self, name, position):
        super().__init__("Unknown variable '{}'".format(name), position)
        self.name = name


class ZeroForm(ValueError):
    "Annihilator of the zero form."


class NotGorenstein(ValueError):
    "Algebra whose socle is not one-dimensional."


class NotArtinian(ValueError):
    "Ideal whose quotient is not finite dimensional."


class IllDefined(ValueError):
    "Algebra map that does not respect the relations of its source."


class OrientationMissing(ValueError):
    "Thom class requested for algebras without orientation."


class NotSurjective(ValueError):
    "Construction that requires a surjective algebra map."


class NotMonic(ValueError):
    "Polynomial in the blow-up variable whose leading coefficient is not 1."


class WrongDegree(ValueError):
    "Polynomial in the blow-up variable of the wrong degree."


class ZeroThomClass(ValueError):
    "Blow-up along a map with vanishing Thom class."


class ThomMismatch(ValueError):
    "Thom class whose contraction of the source form is not the target form."


class DegenerateColon(ValueError):
    "Colon ideal equal to the ideal itself or to the whole ring."


class ConditionFailed(ValueError):
    """
    Connected sum condition that does not hold

    Parameters
    ----------
    condition : int
        Which of the two conditions failed (1 or 2).
    degree : int or None
        First degree where the failure is observed, if degreewise.
    """

    def __init__(self, condition, degree=None):
        message = "Connected sum condition ({}) fails".format(condition)
        if degree is not None:
            message += " in degree {}".format(degree)
        super().__init__(message)
        self.condition = condition
        self.degree = degree


class NotFactored(ValueError):
    "Generator whose factors are not forms of degree at most 2."


class NotRegularSequence(ValueError):
    "Generators that do not form a regular sequence."


class InvalidFan(ValueError):
    "Fan that is not complete and simplicial."


class EnumerationTooLarge(ValueError):
    "Exhaustive search over more linear forms than allowed."


class NotSquare(ValueError):
    "Determinant of a multiplication map between spaces of different size."


class ConsistencyError(RuntimeError):
    "Two independent computations of the same quantity disagree."
