# -*- coding: utf-8 -*-
"""
The BGG functors between graded E-modules and linear complexes over S, plus the pieces of
the Tate resolution of the residue field that define the modules ``N_{n,d}``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

from .algebra import QQ, Field, PolynomialRing, SparseMatrix, monomials_of_degree
from .complexes import FreeModule, GradedFreeComplex
from .errors import DimensionMismatchError, InvalidInputError, VariableCountMismatchError
from .exterior import ExteriorAlgebra, ExteriorElement, GradedExtModule, module_from_cokernel

logger = logging.getLogger("SubRanks.bgg")


# --------------------------------------------------------------------------- #
#                             L : E-modules -> S                              #
# --------------------------------------------------------------------------- #


def bgg_L(N: GradedExtModule) -> GradedFreeComplex:
    """
    The linear complex ``L(N)``: position ``d`` is ``S(-d) (x) N_d`` and

        f (x) v  ->  sum_i  f x_i (x) v e_i.

    The right action is ``v e_i = (-1)^d e_i v`` for ``v`` in ``N_d``.
    """
    ring = PolynomialRing(N.n, N.field)
    if N.is_zero():
        return GradedFreeComplex(ring, (FreeModule(),), (), 0, label="L(0)")
    low = N.bottom
    K = len(N.dims)
    terms = tuple(FreeModule.uniform(N.dim(low + k), -(low + k)) for k in range(K))
    gens = ring.gens
    diffs = []
    for k in range(K - 1):
        d_src = low + k + 1
        sign = -1 if d_src % 2 else 1
        entries: Dict[Tuple[int, int], Any] = {}
        for i in range(N.n):
            A = N.act(i + 1, d_src)
            for (r, c), v in A.entries.items():
                term = gens[i] * (v if sign > 0 else -v)
                entries[(r, c)] = entries[(r, c)] + term if (r, c) in entries else term
        diffs.append(SparseMatrix(N.dim(d_src - 1), N.dim(d_src), ring, entries))
    return GradedFreeComplex(ring, terms, tuple(diffs), low, label="L(N)")


# --------------------------------------------------------------------------- #
#                           R : S-modules -> E                                #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class GradedSModuleWindow:
    """
    The graded pieces ``M_lo .. M_hi`` of an S-module with the multiplication maps between them.

    ``action[i][k]`` is the matrix of ``x_{i+1} : M_{lo+k} -> M_{lo+k+1}``.
    """

    n: int
    field: Field
    lo: int
    dims: Tuple[int, ...]
    action: Tuple[Tuple[SparseMatrix, ...], ...]
    labels: Optional[Tuple[Tuple[Any, ...], ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.action) != self.n:
            raise VariableCountMismatchError(f"Expected {self.n} action lists, got {len(self.action)}")
        for i, mats in enumerate(self.action):
            if len(mats) != max(len(self.dims) - 1, 0):
                raise DimensionMismatchError(f"x_{i + 1} needs {len(self.dims) - 1} matrices")
            for k, X in enumerate(mats):
                if X.shape != (self.dims[k + 1], self.dims[k]):
                    raise DimensionMismatchError(f"x_{i + 1} on degree {self.lo + k} has shape {X.shape}")
        for k in range(len(self.dims) - 2):
            for i in range(self.n):
                for j in range(i + 1, self.n):
                    if self.action[i][k + 1] @ self.action[j][k] != self.action[j][k + 1] @ self.action[i][k]:
                        raise InvalidInputError(f"x_{i + 1} and x_{j + 1} do not commute on degree {self.lo + k}")

    @property
    def hi(self) -> int:
        return self.lo + len(self.dims) - 1


def polynomial_window(n: int, lo: int, hi: int, field: Field = QQ, killed: Sequence[int] = ()) -> GradedSModuleWindow:
    """
    ``(S / (x_k : k in killed))`` restricted to degrees ``lo..hi``; ``S`` itself when nothing is
    killed. With ``lo = d`` this is the window of the ideal ``m^d``.
    """
    if lo < 0 or hi < lo:
        raise InvalidInputError(f"Need 0 <= lo <= hi, got lo={lo}, hi={hi}")
    dead = {k - 1 for k in killed}
    if any(not 0 <= k < n for k in dead):
        raise InvalidInputError(f"Killed variable indices must be in 1..{n}")
    pieces = [
        tuple(m for m in monomials_of_degree(n, d) if not any(m[k] for k in dead)) for d in range(lo, hi + 1)
    ]
    index = [{m: r for r, m in enumerate(piece)} for piece in pieces]
    action = []
    for i in range(n):
        mats = []
        for k in range(len(pieces) - 1):
            entries = {}
            if i not in dead:
                for c, m in enumerate(pieces[k]):
                    up = m[:i] + (m[i] + 1,) + m[i + 1:]
                    entries[(index[k + 1][up], c)] = 1
            mats.append(SparseMatrix(len(pieces[k + 1]), len(pieces[k]), field, entries))
        action.append(tuple(mats))
    return GradedSModuleWindow(n, field, lo, tuple(len(p) for p in pieces), tuple(action), tuple(pieces))


@dataclass(frozen=True)
class ExteriorComplex:
    """
    A complex of free E-modules in cohomological direction: ``diffs[k] : terms[k] -> terms[k+1]``,
    ``terms[k]`` sitting at position ``lo + k``.
    """

    algebra: ExteriorAlgebra
    terms: Tuple[FreeModule, ...]
    diffs: Tuple[SparseMatrix, ...]
    lo: int = 0

    def composites_vanish(self) -> bool:
        return all((self.diffs[k + 1] @ self.diffs[k]).is_zero() for k in range(len(self.diffs) - 1))


def bgg_R(M: GradedSModuleWindow) -> ExteriorComplex:
    """
    The complex ``R(M)``: ``E (x) M_d -> E (x) M_{d+1}``, ``1 (x) m -> sum_i e_i (x) x_i m``.

    The window must hold at least three degrees so that one composite can be formed.
    """
    if len(M.dims) < 3:
        raise InvalidInputError("Window too small: R(M) needs at least three graded pieces")
    algebra = ExteriorAlgebra(M.n, M.field)
    terms = tuple(FreeModule.uniform(dim, -(M.lo + k)) for k, dim in enumerate(M.dims))
    diffs = []
    for k in range(len(M.dims) - 1):
        entries: Dict[Tuple[int, int], ExteriorElement] = {}
        for i in range(M.n):
            e_i = algebra.e(i + 1)
            for (b, a), c in M.action[i][k].entries.items():
                term = e_i * c
                entries[(b, a)] = entries[(b, a)] + term if (b, a) in entries else term
        diffs.append(SparseMatrix(M.dims[k + 1], M.dims[k], algebra, entries))
    return ExteriorComplex(algebra, terms, tuple(diffs), M.lo)


# --------------------------------------------------------------------------- #
#                          TATE RESOLUTION PIECES                             #
# --------------------------------------------------------------------------- #


def cartan_differential(s: int, n: int, field: Field = QQ, ambient: Optional[int] = None) -> SparseMatrix:
    """
    ``d_s`` of the Tate resolution of the residue field.

    Rows are the degree ``s-1`` monomials, columns the degree ``s`` monomials (both grevlex
    descending); the entry is ``e_k`` exactly when ``column = x_k * row``. With ``ambient``
    the entries live in the exterior algebra on that many variables.
    """
    if s < 1:
        raise InvalidInputError(f"Cartan differential index must be >= 1, got {s}")
    if n < 1:
        raise InvalidInputError("Need at least one variable")
    algebra = ExteriorAlgebra(ambient if ambient is not None else n, field)
    if algebra.n < n:
        raise InvalidInputError(f"Ambient algebra on {algebra.n} variables cannot hold {n}")
    rows = monomials_of_degree(n, s - 1)
    cols = monomials_of_degree(n, s)
    rindex = {m: r for r, m in enumerate(rows)}
    entries = {}
    for c, m in enumerate(cols):
        for k in range(n):
            if m[k]:
                below = m[:k] + (m[k] - 1,) + m[k + 1:]
                entries[(rindex[below], c)] = algebra.e(k + 1)
    return SparseMatrix(len(rows), len(cols), algebra, entries)


def socle_differential(n: int, field: Field = QQ, ambient: Optional[int] = None) -> SparseMatrix:
    """The ``1 x 1`` matrix ``[e_1 ... e_n]`` joining the two halves of the Tate resolution."""
    algebra = ExteriorAlgebra(ambient if ambient is not None else n, field)
    return SparseMatrix(1, 1, algebra, {(0, 0): algebra.monomial(*range(1, n + 1))})


@dataclass(frozen=True)
class TateWindow:
    """
    A stretch of the Tate resolution: ``differentials[s]`` for ``s`` in ``s_lo..s_hi``.

    Index 0 is the socle map; positive ``s`` is the projective side
    ``E^{C(n+s-1,s)}(s) -> E^{C(n+s-2,s-1)}(s-1)``.
    """

    n: int
    field: Field
    differentials: Dict[int, SparseMatrix]

    @staticmethod
    def projective_twist(s: int) -> int:
        return s

    def injective_twist(self, s: int) -> int:
        return -self.n - s

    def composites_vanish(self) -> bool:
        for s in sorted(self.differentials):
            if s >= 1 and s + 1 in self.differentials:
                if not (self.differentials[s] @ self.differentials[s + 1]).is_zero():
                    return False
        return True


def tate_window(n: int, s_lo: int, s_hi: int, field: Field = QQ) -> TateWindow:
    if s_lo < 0 or s_hi < s_lo:
        raise InvalidInputError(f"Need 0 <= s_lo <= s_hi, got {s_lo}, {s_hi}")
    diffs = {}
    for s in range(s_lo, s_hi + 1):
        diffs[s] = socle_differential(n, field) if s == 0 else cartan_differential(s, n, field)
    return TateWindow(n, field, diffs)


def tate_Nnd(n: int, d: int, field: Field = QQ, ambient: Optional[int] = None) -> GradedExtModule:
    """
    ``N_{n,d} = coker(d_{d-1}^T)``, generated in degree 0, so that ``L(N_{n,d}(-n+1))`` is the
    linear strand ``L_{n,d}``. For ``d = 1`` the relation is the socle monomial ``e_1...e_n``.

    Over a larger ``ambient`` algebra the same presentation gives the module written with a bar.
    """
    if n < 1 or d < 1:
        raise InvalidInputError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    if d == 1:
        P = socle_differential(n, field, ambient)
        return module_from_cokernel(P, [0], [n])
    D = cartan_differential(d - 1, n, field, ambient)
    P = D.transpose()
    return module_from_cokernel(P, [0] * P.nrows, [1] * P.ncols)
