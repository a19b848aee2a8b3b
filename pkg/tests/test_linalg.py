# -*- coding: utf-8 -*-
from fractions import Fraction

import numpy as np
import pytest
import sympy
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from core import linalg
from core.algebra import QQ, PrimeField, SparseMatrix
from core.linalg import (
    kernel_basis,
    matrix_rank,
    rank_mod_p,
    rref_mod_p,
    solve_in_column_space,
    span_rref,
)

ROWS = [
    [[1, 2, 3], [2, 4, 6], [1, 0, 1]],
    [[0, 0, 0], [0, 0, 0]],
    [[2, -1, 0, 4], [1, 1, 1, 1], [3, 0, 1, 5], [0, 3, 2, -2]],
    [[5, 10], [1, 2], [0, 7], [3, 1]],
    [[1, 1, 0, 0, 1], [0, 1, 1, 0, 0], [1, 0, 1, 0, 1], [0, 0, 0, 1, 1]],
]


@pytest.mark.parametrize("rows", ROWS)
def test_rank_over_QQ_matches_sympy(rows):
    M = SparseMatrix.from_rows(rows, QQ)
    assert matrix_rank(M) == sympy.Matrix(rows).rank()


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("rows", ROWS)
def test_rank_mod_p_matches_sympy(rows, p):
    expected = DomainMatrix.from_list_sympy(len(rows), len(rows[0]), rows).convert_to(GF(p)).rank()
    assert matrix_rank(SparseMatrix.from_rows(rows, PrimeField(p))) == expected
    assert rank_mod_p(np.array(rows, dtype=np.int64), p) == expected


@pytest.mark.parametrize("field", [QQ, PrimeField(3)])
def test_dense_and_sparse_elimination_agree(field, monkeypatch):
    for rows in ROWS:
        M = SparseMatrix.from_rows(rows, field)
        dense = linalg.row_reduce(M)
        monkeypatch.setattr(linalg, "DENSE_THRESHOLD", 0)
        sparse = linalg.row_reduce(M)
        monkeypatch.undo()
        assert dense[1] == sparse[1]
        assert [dict(r) for r in dense[0]] == [dict(r) for r in sparse[0]]


def test_rref_mod_p_is_reduced():
    R, pivots = rref_mod_p(np.array([[2, 4, 1], [1, 2, 0]]), 3)
    assert pivots == [0, 2]
    assert R.tolist() == [[1, 2, 0], [0, 0, 1]]


@pytest.mark.parametrize("field", [QQ, PrimeField(2), PrimeField(5)])
def test_kernel_vectors_are_annihilated(field):
    for rows in ROWS:
        M = SparseMatrix.from_rows(rows, field)
        basis = kernel_basis(M)
        assert len(basis) == M.ncols - matrix_rank(M)
        for v in basis:
            assert not any(M.matvec(v))


def test_solve_in_column_space():
    M = SparseMatrix.from_rows([[1, 0], [0, 1], [1, 1]], QQ)
    assert solve_in_column_space(M, [2, 3, 5]) == [2, 3]
    assert solve_in_column_space(M, [1, 0, 0]) is None
    half = solve_in_column_space(SparseMatrix.from_rows([[2]], QQ), [1])
    assert half == [Fraction(1, 2)]


def test_span_rref_drops_dependent_vectors():
    rows, pivots = span_rref([[1, 1, 0], [2, 2, 0], [0, 1, 1]], 3, QQ)
    assert pivots == [0, 1]
    assert rows[0] == {0: 1, 2: -1}
    assert rows[1] == {1: 1, 2: 1}


def test_row_reduce_needs_a_field():
    from core.algebra import PolynomialRing
    from core.errors import InvalidInputError

    R = PolynomialRing(1)
    with pytest.raises(InvalidInputError):
        linalg.row_reduce(SparseMatrix.from_rows([[R.x(1)]], R))
