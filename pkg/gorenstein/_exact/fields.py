# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Ground fields: the rationals and prime fields
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import isprime
from sympy.polys.domains import GF, QQ

from .._errors import ZeroInverse

_FIELD_NAME = re.compile(r"^\s*(?:QQ|GF\s*\(\s*(\d+)\s*\)|GF\s+(\d+))\s*$")


@dataclass(frozen=True)
class FieldSpec:
    """
    An exact ground field

    Elements are the native elements of the underlying :mod:`sympy` domain:
    reduced fractions of arbitrary precision integers for the rationals and
    residues in ``[0, p)`` for prime fields.

    Parameters
    ----------
    characteristic : int
        Zero for the rationals, a prime number ``p`` for the field with ``p``
        elements.

    Examples
    --------
    >>> field = FieldSpec(7)
    >>> field.to_str(field.inverse(field(3)))
    '5'
    >>> FieldSpec().to_str(FieldSpec()("2/4"))
    '1/2'
    """

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise ValueError(
                "Invalid field characteristic '{}'. Must be 0 or a prime.".format(
                    self.characteristic
                )
            )

    @classmethod
    def from_name(cls, name):
        """
        Create a field from its name, ``QQ`` or ``GF(p)``
        """
        match = _FIELD_NAME.match(name)
        if match is None:
            raise ValueError(
                "Invalid field '{}'. Must be 'QQ' or 'GF(p)' with p prime.".format(
                    name
                )
            )
        prime = match.group(1) or match.group(2)
        return cls(int(prime) if prime else 0)

    @cached_property
    def domain(self):
        "The :mod:`sympy` domain holding the elements."
        if self.characteristic == 0:
            return QQ
        return GF(self.characteristic, symmetric=False)

    @property
    def is_finite(self):
        "True for prime fields."
        return self.characteristic != 0

    @property
    def zero(self):
        "The additive identity."
        return self.domain.zero

    @property
    def one(self):
        "The multiplicative identity."
        return self.domain.one

    def __call__(self, value):
        """
        Convert an integer, a fraction or a string like ``"-3/4"`` to an element
        """
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            numerator = self.domain(value.numerator)
            if value.denominator == 1:
                return numerator
            return numerator * self.inverse(self.domain(value.denominator))
        if isinstance(value, int):
            return self.domain(value)
        return self.domain.convert(value)

    def inverse(self, value):
        """
        Multiplicative inverse of a nonzero element
        """
        if not value:
            raise ZeroInverse("Zero has no multiplicative inverse.")
        return self.domain.one / value

    def to_str(self, value):
        """
        Canonical text for an element: ``"3"``, ``"-1/2"`` or a residue
        """
        if self.is_finite:
            return str(int(value) % self.characteristic)
        numerator, denominator = int(value.numerator), int(value.denominator)
        if denominator == 1:
            return str(numerator)
        return "{}/{}".format(numerator, denominator)

    def elements(self):
        """
        Iterate over all elements of a prime field, zero first
        """
        if not self.is_finite:
            raise ValueError("The rationals can't be enumerated.")
        return (self.domain(i) for i in range(self.characteristic))

    def __str__(self):
        if self.is_finite:
            return "GF({})".format(self.characteristic)
        return "QQ"


#: The field of rational numbers
QQ_FIELD = FieldSpec()


def field_inverse(value, field=QQ_FIELD):
    """
    Multiplicative inverse of a field element

    Parameters
    ----------
    value : field element or int
        A nonzero element.
    field : :class:`gorenstein.FieldSpec`
        The field the element belongs to. Defaults to the rationals.

    Returns
    -------
    inverse : field element

    Examples
    --------
    >>> field = FieldSpec(7)
    >>> field.to_str(field_inverse(3, field))
    '5'
    """
    return field.inverse(field(value))
