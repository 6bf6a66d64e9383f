# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Dense exact linear algebra on top of :class:`sympy.polys.matrices.DomainMatrix`
"""
from sympy.polys.matrices import DomainMatrix

from .fields import QQ_FIELD


def matrix(rows, field=QQ_FIELD, ncols=None):
    """
    Build an exact matrix from nested lists

    Parameters
    ----------
    rows : list of lists
        Entries as integers, fractions, strings or field elements.
    field : :class:`gorenstein.FieldSpec`
        Field of the entries. Defaults to the rationals.
    ncols : int or None
        Number of columns. Only needed when ``rows`` is empty.

    Returns
    -------
    matrix : :class:`sympy.polys.matrices.DomainMatrix`
    """
    rows = [[field(entry) for entry in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise ValueError(
                "Invalid matrix row of length {}. Expected {}.".format(
                    len(row), ncols
                )
            )
    return DomainMatrix(rows, (len(rows), ncols), field.domain)


def _rows(matrix):
    "Nested lists of domain elements"
    return [list(row) for row in matrix.to_ddm()]


def row_echelon(matrix):
    """
    Reduced row echelon form

    Pivots are chosen on the leftmost nonzero column. Over the rationals the
    elimination clears denominators and runs fraction free.

    Parameters
    ----------
    matrix : :class:`sympy.polys.matrices.DomainMatrix`

    Returns
    -------
    rows : list of lists
        The nonzero rows of the reduced form, one per pivot.
    pivots : tuple of int
        Pivot column of each row.
    """
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return [], ()
    method = "CD" if matrix.domain.is_QQ else "GJ"
    reduced, pivots = matrix.rref(method=method)
    rows = _rows(reduced)[: len(pivots)]
    return rows, tuple(pivots)


def mat_rank(matrix):
    """
    Exact rank of a matrix

    Examples
    --------
    >>> mat_rank(matrix([[1, 2], [2, 4]]))
    1
    """
    return len(row_echelon(matrix)[1])


def mat_kernel(matrix):
    """
    Basis of the right null space

    Each basis vector sets one free variable to 1 and the others to 0, in
    column order, and solves for the pivot variables.

    Parameters
    ----------
    matrix : :class:`sympy.polys.matrices.DomainMatrix`

    Returns
    -------
    basis : list of lists
        Kernel vectors as lists of domain elements. Empty if the matrix is
        injective.

    Examples
    --------
    >>> from gorenstein import FieldSpec
    >>> [[FieldSpec().to_str(i) for i in v] for v in mat_kernel(matrix([[1, 1]]))]
    [['-1', '1']]
    """
    ncols = matrix.shape[1]
    domain = matrix.domain
    rows, pivots = row_echelon(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [domain.zero] * ncols
        vector[free] = domain.one
        for row, pivot in zip(rows, pivots):
            vector[pivot] = -row[free]
        basis.append(vector)
    return basis


def mat_solve(matrix, rhs):
    """
    A particular solution of a linear system

    Parameters
    ----------
    matrix : :class:`sympy.polys.matrices.DomainMatrix`
    rhs : list
        Right-hand side, one entry per row of ``matrix``.

    Returns
    -------
    solution : list or None
        A solution with all free variables set to zero, or None if the system
        is inconsistent.
    """
    nrows, ncols = matrix.shape
    domain = matrix.domain
    rhs = [domain.convert(value) for value in rhs]
    if len(rhs) != nrows:
        raise ValueError(
            "Right-hand side of length {} for a matrix with {} rows.".format(
                len(rhs), nrows
            )
        )
    if nrows == 0:
        return [domain.zero] * ncols
    augmented = DomainMatrix(
        [row + [value] for row, value in zip(_rows(matrix), rhs)],
        (nrows, ncols + 1),
        domain,
    )
    rows, pivots = row_echelon(augmented)
    if pivots and pivots[-1] == ncols:
        return None
    solution = [domain.zero] * ncols
    for row, pivot in zip(rows, pivots):
        solution[pivot] = row[ncols]
    return solution


def mat_mul(left, right):
    """
    Matrix product that also handles empty shapes
    """
    nrows, inner = left.shape
    if right.shape[0] != inner:
        raise ValueError(
            "Can't multiply matrices of shapes {} and {}.".format(
                left.shape, right.shape
            )
        )
    ncols = right.shape[1]
    if nrows == 0 or ncols == 0 or inner == 0:
        return DomainMatrix.zeros((nrows, ncols), left.domain)
    return left.matmul(right)


def determinant(rows, domain):
    """
    Fraction-free determinant over an integral domain

    Bareiss elimination with full pivoting: at every step the pivot is the
    nonzero entry with the fewest terms in the sparsest row. A structural
    test (no perfect matching between rows and nonzero columns) returns zero
    without any arithmetic.

    Parameters
    ----------
    rows : list of lists
        Square matrix with entries in ``domain``.
    domain : sympy domain
        An integral domain with exact division (``exquo``), for example a
        polynomial ring over the rationals.

    Returns
    -------
    det : element of ``domain``
    """
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ValueError("Determinant of a non-square matrix.")
    if size == 0:
        return domain.one
    work = [list(row) for row in rows]
    if not _has_perfect_matching(work):
        return domain.zero
    sign = 1
    previous = domain.one
    for step in range(size):
        pivot = _choose_pivot(work, step)
        if pivot is None:
            return domain.zero
        row, col = pivot
        if row != step:
            work[step], work[row] = work[row], work[step]
            sign = -sign
        if col != step:
            for line in work:
                line[step], line[col] = line[col], line[step]
            sign = -sign
        head = work[step][step]
        for i in range(step + 1, size):
            factor = work[i][step]
            for j in range(step + 1, size):
                value = head * work[i][j] - factor * work[step][j]
                work[i][j] = domain.exquo(value, previous) if value else value
            work[i][step] = domain.zero
        previous = head
    result = work[-1][-1]
    return result if sign > 0 else -result


def _choose_pivot(work, step):
    "Cheapest nonzero entry of the trailing submatrix"
    best, best_cost = None, None
    for i in range(step, len(work)):
        row = work[i][step:]
        weight = sum(1 for value in row if value)
        for offset, value in enumerate(row):
            if not value:
                continue
            terms = len(value) if hasattr(value, "__len__") else 1
            cost = (terms, weight)
            if best_cost is None or cost < best_cost:
                best, best_cost = (i, step + offset), cost
    return best


def _has_perfect_matching(work):
    "Kuhn's augmenting paths on the nonzero pattern"
    size = len(work)
    adjacency = [[j for j, value in enumerate(row) if value] for row in work]
    owner = [-1] * size

    def augment(row, seen):
        for col in adjacency[row]:
            if col in seen:
                continue
            seen.add(col)
            if owner[col] == -1 or augment(owner[col], seen):
                owner[col] = row
                return True
        return False

    return all(augment(row, set()) for row in range(size))
