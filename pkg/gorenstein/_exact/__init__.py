# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Exact field arithmetic and linear algebra
"""
from .echelon import Echelon
from .fields import QQ_FIELD, FieldSpec, field_inverse
from .linalg import (
    determinant,
    mat_kernel,
    mat_mul,
    mat_rank,
    mat_solve,
    matrix,
    row_echelon,
)
