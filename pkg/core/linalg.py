# -*- coding: utf-8 -*-
"""
Exact linear algebra over QQ and GF(p).

Small matrices go through a dense numpy elimination (``int64`` modulo p, ``object`` arrays of
Fractions over QQ); larger ones through a sparse row-dictionary elimination. Both return the
same reduced row echelon form, so callers never see which path ran.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algebra import Field, PrimeField, Residue, SparseMatrix
from .errors import DimensionMismatchError, InvalidInputError

logger = logging.getLogger("SubRanks.linalg")

Row = Dict[int, Any]

DENSE_THRESHOLD = 200


def set_dense_threshold(value: int) -> None:
    """Largest dimension still eliminated densely; set from the ``linalg.dense_threshold`` config key."""
    global DENSE_THRESHOLD
    DENSE_THRESHOLD = int(value)


# --------------------------------------------------------------------------- #
#                         DENSE MOD-p KERNEL (ints)                           #
# --------------------------------------------------------------------------- #


def rref_mod_p(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form of an integer matrix modulo ``p``.

    Returns the nonzero rows and the pivot columns. ``A`` is not modified.
    """
    R = np.array(A, dtype=np.int64, copy=True) % p
    if R.ndim != 2:
        raise DimensionMismatchError("rref_mod_p expects a 2-d array")
    m, n = R.shape
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        factors = R[:, c].copy()
        factors[r] = 0
        if factors.any():
            R = (R - np.outer(factors, R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank_mod_p(A: np.ndarray, p: int) -> int:
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


# --------------------------------------------------------------------------- #
#                            GENERIC ELIMINATION                              #
# --------------------------------------------------------------------------- #


def _rref_dense(M: SparseMatrix) -> Tuple[List[Row], List[int]]:
    field: Field = M.ring
    if isinstance(field, PrimeField):
        A = np.zeros(M.shape, dtype=np.int64)
        for (i, j), v in M.entries.items():
            A[i, j] = int(v)
        R, pivots = rref_mod_p(A, field.p)
        rows = [{j: Residue(int(R[i, j]), field.p) for j in np.nonzero(R[i])[0].tolist()} for i in range(len(pivots))]
        return rows, pivots

    A = np.zeros(M.shape, dtype=object)
    A[:, :] = Fraction(0)
    for (i, j), v in M.entries.items():
        A[i, j] = Fraction(v)
    m, n = M.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = [i for i in range(r, m) if A[i, c] != 0]
        if not nz:
            continue
        piv = nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] / A[r, c]
        for i in range(m):
            if i != r and A[i, c] != 0:
                A[i] = A[i] - A[i, c] * A[r]
        pivots.append(c)
        r += 1
    rows = [{j: A[i, j] for j in range(n) if A[i, j] != 0} for i in range(r)]
    return rows, pivots


def _rref_sparse(M: SparseMatrix) -> Tuple[List[Row], List[int]]:
    rows: List[Row] = [dict() for _ in range(M.nrows)]
    for (i, j), v in M.entries.items():
        rows[i][j] = v
    rows = [r for r in rows if r]
    basis: List[Row] = []
    pivots: List[int] = []
    for row in rows:
        row = dict(row)
        # reduce against the echelon rows found so far
        for b, pc in zip(basis, pivots):
            c = row.get(pc)
            if c:
                for j, v in b.items():
                    w = row.get(j)
                    w = -c * v if w is None else w - c * v
                    if w:
                        row[j] = w
                    else:
                        row.pop(j, None)
        if not row:
            continue
        pc = min(row)
        inv = 1 / row[pc]
        row = {j: v * inv for j, v in row.items()}
        # keep earlier rows reduced in the new pivot column
        for b in basis:
            c = b.get(pc)
            if c:
                for j, v in row.items():
                    w = b.get(j)
                    w = -c * v if w is None else w - c * v
                    if w:
                        b[j] = w
                    else:
                        b.pop(j, None)
        basis.append(row)
        pivots.append(pc)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [basis[k] for k in order], [pivots[k] for k in order]


def row_reduce(M: SparseMatrix) -> Tuple[List[Row], List[int]]:
    """
    Reduced row echelon form of ``M`` over its field.

    Returns:
        (rows, pivots): the nonzero RREF rows as ``{column: scalar}`` dicts and their pivot
        columns, in increasing pivot order.
    """
    if not isinstance(M.ring, Field):
        raise InvalidInputError(f"Row reduction needs a matrix over a field, not {M.ring!r}")
    if max(M.shape) <= DENSE_THRESHOLD:
        return _rref_dense(M)
    logger.debug("Sparse elimination on a %dx%d matrix with %d entries", M.nrows, M.ncols, M.nnz)
    return _rref_sparse(M)


def matrix_rank(M: SparseMatrix) -> int:
    if M.is_zero():
        return 0
    return len(row_reduce(M)[1])


def kernel_basis(M: SparseMatrix) -> List[List[Any]]:
    """Basis of ``{v : M v = 0}``, one vector per free column."""
    field: Field = M.ring
    rows, pivots = row_reduce(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        v = [field.zero() for _ in range(M.ncols)]
        v[free] = field.one()
        for row, pc in zip(rows, pivots):
            c = row.get(free)
            if c:
                v[pc] = -c
        basis.append(v)
    return basis


def column_space_basis(M: SparseMatrix) -> List[int]:
    """Indices of columns of ``M`` that form a basis of its column space."""
    return row_reduce(M)[1]


def solve_in_column_space(M: SparseMatrix, vector: Sequence[Any]) -> Optional[List[Any]]:
    """
    Find ``x`` with ``M x = vector``; ``None`` when ``vector`` is outside the column space.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(vector) != M.nrows:
        raise DimensionMismatchError(f"Right-hand side of length {len(vector)} for a {M.shape} matrix")
    field: Field = M.ring
    entries = dict(M.entries)
    for i, v in enumerate(vector):
        v = field(v)
        if v:
            entries[(i, M.ncols)] = v
    rows, pivots = row_reduce(SparseMatrix(M.nrows, M.ncols + 1, field, entries))
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [field.zero() for _ in range(M.ncols)]
    for row, pc in zip(rows, pivots):
        x[pc] = row.get(M.ncols, field.zero())
    return x


def span_rref(vectors: Sequence[Sequence[Any]], dim: int, field: Field) -> Tuple[List[Row], List[int]]:
    """RREF basis of the span of ``vectors`` inside ``field^dim``."""
    M = SparseMatrix(len(vectors), dim, field, {(i, j): v for i, vec in enumerate(vectors) for j, v in enumerate(vec)})
    return row_reduce(M)


def reduce_against(vector: Sequence[Any], rows: Sequence[Row], pivots: Sequence[int]) -> List[Any]:
    """Subtract RREF rows so ``vector`` vanishes on every pivot column."""
    out = list(vector)
    for row, pc in zip(rows, pivots):
        c = out[pc]
        if c:
            for j, v in row.items():
                out[j] = out[j] - c * v
    return out
