# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Graded polynomial rings, dual forms and the expression parser
"""
from .parser import parse_factored, parse_poly
from .polynomial import Polynomial, contract
from .ring import GradedRing, adjoin_variable
