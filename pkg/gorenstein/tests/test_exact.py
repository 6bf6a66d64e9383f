# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Test exact fields and linear algebra
"""
from fractions import Fraction

import numpy as np
import pytest
import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from .. import (
    QQ_FIELD,
    Echelon,
    FieldSpec,
    ZeroInverse,
    determinant,
    field_inverse,
    mat_kernel,
    mat_mul,
    mat_rank,
    mat_solve,
    matrix,
    row_echelon,
)


@pytest.mark.parametrize(
    "name, characteristic",
    [("QQ", 0), ("GF(5)", 5), (" GF( 32003 ) ", 32003), ("GF 2", 2)],
    ids=["rationals", "gf5", "spaces", "no-parentheses"],
)
def test_field_from_name(name, characteristic):
    "Parse field names"
    assert FieldSpec.from_name(name) == FieldSpec(characteristic)


@pytest.mark.parametrize("name", ["GF(6)", "RR", "GF()", "Q"])
def test_field_from_name_invalid(name):
    "Reject non-prime characteristics and unknown names"
    with pytest.raises(ValueError):
        FieldSpec.from_name(name)


def test_field_conversions():
    "Integers, fractions and strings become canonical elements"
    assert QQ_FIELD.to_str(QQ_FIELD("-6/4")) == "-3/2"
    assert QQ_FIELD.to_str(QQ_FIELD(Fraction(5, 1))) == "5"
    field = FieldSpec(7)
    assert field.to_str(field(-1)) == "6"
    assert field.to_str(field("1/2")) == "4"
    assert [field.to_str(x) for x in field.elements()] == [str(i) for i in range(7)]


@pytest.mark.parametrize("characteristic", [0, 2, 5, 101])
def test_field_inverse(characteristic):
    "Every nonzero element times its inverse is one"
    field = FieldSpec(characteristic)
    for value in range(1, 20):
        if characteristic and value % characteristic == 0:
            continue
        assert field(value) * field_inverse(value, field) == field.one


@pytest.mark.parametrize("characteristic", [0, 3])
def test_field_inverse_zero(characteristic):
    "Inverting zero raises the dedicated error"
    field = FieldSpec(characteristic)
    with pytest.raises(ZeroInverse):
        field.inverse(field.zero)
    with pytest.raises(ZeroDivisionError):
        field_inverse(characteristic, field)


def test_rationals_not_enumerable():
    "Only prime fields can list their elements"
    with pytest.raises(ValueError, match="enumerated"):
        QQ_FIELD.elements()


def test_row_echelon_small():
    "Reduced row echelon form of a rank two matrix"
    rows, pivots = row_echelon(matrix([[2, 4, 6], [1, 2, 4], [3, 6, 10]]))
    assert pivots == (0, 2)
    assert [[QQ_FIELD.to_str(x) for x in row] for row in rows] == [
        ["1", "2", "0"],
        ["0", "0", "1"],
    ]


def test_rank_and_kernel_rational():
    "Kernel vectors are annihilated and complement the rank"
    mat = matrix([[1, 2, 3, 4], [2, 4, 6, 8], ["1/2", 0, 1, 0]])
    kernel = mat_kernel(mat)
    assert mat_rank(mat) == 2
    assert len(kernel) == 2
    for vector in kernel:
        product = mat_mul(mat, matrix([[x] for x in vector]))
        assert all(not entry for row in product.to_ddm() for entry in row)


def test_rank_depends_on_characteristic():
    "A matrix singular only in characteristic 3"
    rows = [[1, 1], [1, -2]]
    assert mat_rank(matrix(rows)) == 2
    assert mat_rank(matrix(rows, FieldSpec(3))) == 1


def test_solve():
    "Particular solution of a consistent system and none for an inconsistent one"
    mat = matrix([[1, 1, 0], [0, 1, 1]])
    solution = mat_solve(mat, [3, 5])
    assert [QQ_FIELD.to_str(x) for x in solution] == ["-2", "5", "0"]
    assert mat_solve(matrix([[1, 1], [2, 2]]), [1, 3]) is None


def test_empty_shapes():
    "Empty matrices have rank zero and multiply to zero matrices"
    empty = matrix([], ncols=3)
    assert mat_rank(empty) == 0
    assert len(mat_kernel(empty)) == 3
    product = mat_mul(matrix([[], []], ncols=0), matrix([], ncols=4))
    assert product.shape == (2, 4)
    assert mat_rank(product) == 0


def test_mat_mul_shape_mismatch():
    "Incompatible shapes raise"
    with pytest.raises(ValueError, match="shapes"):
        mat_mul(matrix([[1, 2]]), matrix([[1, 2]]))


def test_matrix_ragged_rows():
    "Rows of different lengths raise"
    with pytest.raises(ValueError, match="row of length"):
        matrix([[1, 2], [1]])


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
def test_rank_against_sympy(seed):
    "Exact rank agrees with sympy on random integer matrices of low rank"
    random = np.random.default_rng(seed)
    left = random.integers(-5, 6, size=(7, 3))
    right = random.integers(-5, 6, size=(3, 6))
    rows = (left @ right).tolist()
    assert mat_rank(matrix(rows)) == sympy.Matrix(rows).rank()


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_determinant_against_sympy(seed):
    "Fraction-free determinant of random integer matrices"
    random = np.random.default_rng(seed)
    rows = random.integers(-9, 10, size=(5, 5)).tolist()
    converted = [[QQ(int(x)) for x in row] for row in rows]
    assert determinant(converted, QQ) == QQ(int(sympy.Matrix(rows).det()))


def test_determinant_polynomial_entries():
    "Determinants over a polynomial ring"
    poly_ring, a, b = ring("a,b", QQ)
    domain = poly_ring.to_domain()
    assert determinant([[a, b], [b, a]], domain) == a**2 - b**2
    assert determinant([[a, 0, b], [0, 0, a], [b, 0, a]], domain) == 0
    assert determinant([], domain) == 1


def test_determinant_not_square():
    "Non-square input raises"
    with pytest.raises(ValueError, match="non-square"):
        determinant([[QQ(1), QQ(2)]], QQ)


def test_echelon_insert_and_reduce():
    "Inserted vectors are kept fully reduced"
    space = Echelon(QQ_FIELD, order=lambda key: key)
    one = QQ_FIELD.one
    assert space.insert({2: one, 1: one})
    assert space.insert({1: one, 0: one})
    assert not space.insert({2: one, 0: -one})
    assert len(space) == 2
    assert space.pivots == [2, 1]
    assert space.rows()[0] == {2: one, 0: -one}
    assert space.contains({2: 2 * one, 1: one, 0: -one})
    assert space.null_vectors([0, 1, 2]) == [{0: one, 2: one, 1: -one}]
    copy = space.copy()
    copy.insert({0: one})
    assert copy.is_full([0, 1, 2])
    assert not space.is_full([0, 1, 2])
