# -*- coding: utf-8 -*-
"""
The exterior algebra E = field<e_1, ..., e_n> and finitely generated graded E-modules.

Degree conventions: ``deg e_i = -1`` and a twist shifts degrees by ``N(a)_d = N_{a+d}``, so
the free module ``E(a)`` has its generator in degree ``-a``.

A :class:`GradedExtModule` is stored as a list of vector spaces ``N_top, N_{top-1}, ...`` plus,
for every variable, the matrices of left multiplication ``e_i : N_d -> N_{d-1}``.
"""
from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import QQ, Field, Residue, Scalar, SparseMatrix
from .errors import (
    DegreeIncompatibleError,
    DimensionMismatchError,
    FieldError,
    InvalidInputError,
    NonHomogeneousError,
    SizeCapExceededError,
    VariableCountMismatchError,
)
from .linalg import kernel_basis, reduce_against, span_rref

logger = logging.getLogger("SubRanks.exterior")

COLON_CAP = 6

HilbertFunction = Tuple[int, ...]


def set_colon_cap(value: int) -> None:
    global COLON_CAP
    COLON_CAP = int(value)


# --------------------------------------------------------------------------- #
#                              EXTERIOR MONOMIALS                             #
# --------------------------------------------------------------------------- #


def mask_indices(mask: int) -> Tuple[int, ...]:
    """0-based indices of the set bits, increasing."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def indices_mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def ext_mul(a: int, b: int) -> Optional[Tuple[int, int]]:
    """
    Product ``e_a * e_b`` of two exterior monomials given as bit masks.

    Returns ``(sign, mask)`` or ``None`` when the product vanishes.
    """
    if a & b:
        return None
    swaps = 0
    for j in mask_indices(b):
        swaps += popcount(a >> (j + 1))
    return (-1 if swaps % 2 else 1, a | b)


@functools.lru_cache(maxsize=None)
def subsets_lex(n: int, k: int) -> Tuple[int, ...]:
    """Masks of the k-subsets of {0..n-1}, in lexicographic order of their index tuples."""
    if k < 0 or k > n:
        return ()
    return tuple(indices_mask(c) for c in itertools.combinations(range(n), k))


@dataclass(frozen=True)
class ExteriorMonomial:
    """``e_S`` for a subset ``S`` of ``{1..n}``; ``deg e_S = -|S|``."""

    support: int
    n: int

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in mask_indices(self.support))

    @property
    def degree(self) -> int:
        return -popcount(self.support)

    def __mul__(self, other: "ExteriorMonomial") -> Optional[Tuple[int, "ExteriorMonomial"]]:
        if self.n != other.n:
            raise VariableCountMismatchError("Monomials from different exterior algebras")
        res = ext_mul(self.support, other.support)
        if res is None:
            return None
        return res[0], ExteriorMonomial(res[1], self.n)


# --------------------------------------------------------------------------- #
#                               EXTERIOR ALGEBRA                              #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class ExteriorAlgebra:
    n: int
    field: Field = QQ

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidInputError("Number of exterior variables must be non-negative")

    def zero(self) -> "ExteriorElement":
        return ExteriorElement(self, {})

    def one(self) -> "ExteriorElement":
        return ExteriorElement(self, {0: self.field.one()})

    def constant(self, value: Any) -> "ExteriorElement":
        return ExteriorElement(self, {0: self.field(value)})

    def e(self, i: int) -> "ExteriorElement":
        """The generator e_i, 1-based."""
        if not 1 <= i <= self.n:
            raise InvalidInputError(f"Exterior variable index {i} out of range 1..{self.n}")
        return ExteriorElement(self, {1 << (i - 1): self.field.one()})

    def monomial(self, *indices: int, coefficient: Any = 1) -> "ExteriorElement":
        """``coefficient * e_{i1} * e_{i2} * ...`` in the order given (1-based)."""
        result = self.constant(coefficient)
        for i in indices:
            result = result * self.e(i)
        return result

    @property
    def gens(self) -> Tuple["ExteriorElement", ...]:
        return tuple(self.e(i) for i in range(1, self.n + 1))

    def basis(self, k: int) -> Tuple[int, ...]:
        """Monomial masks spanning E_{-k}, lexicographic in their index tuples."""
        return subsets_lex(self.n, k)

    def __call__(self, value: Any) -> "ExteriorElement":
        if isinstance(value, ExteriorElement):
            if value.algebra.n != self.n:
                raise VariableCountMismatchError(f"Element of E on {value.algebra.n} variables, not {self.n}")
            return value
        return self.constant(value)


class ExteriorElement:
    """A linear combination of exterior monomials, ``{mask: nonzero coefficient}``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: ExteriorAlgebra, terms: Dict[int, Any]):
        self.algebra = algebra
        fld = algebra.field
        self.terms = {m: c for m, c in ((m, fld(c)) for m, c in terms.items()) if c}

    def _lift(self, other: Any) -> Optional["ExteriorElement"]:
        if isinstance(other, ExteriorElement):
            if other.algebra.n != self.algebra.n:
                raise VariableCountMismatchError("Elements of different exterior algebras")
            if other.algebra.field != self.algebra.field:
                raise FieldError("Elements of exterior algebras over different fields")
            return other
        if isinstance(other, (int, Residue)) or hasattr(other, "denominator"):
            return self.algebra.constant(other)
        return None

    def __add__(self, other: Any) -> "ExteriorElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out[m] + c if m in out else c
        return ExteriorElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "ExteriorElement":
        return ExteriorElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Any) -> "ExteriorElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "ExteriorElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "ExteriorElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: Dict[int, Any] = {}
        for a, ca in self.terms.items():
            for b, cb in o.terms.items():
                res = ext_mul(a, b)
                if res is None:
                    continue
                sign, m = res
                v = ca * cb if sign > 0 else -(ca * cb)
                out[m] = out[m] + v if m in out else v
        return ExteriorElement(self.algebra, out)

    def __rmul__(self, other: Any) -> "ExteriorElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExteriorElement):
            return self.algebra.n == other.algebra.n and self.terms == other.terms
        if isinstance(other, int):
            return self == self.algebra.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.algebra.n, frozenset(self.terms.items())))

    def is_homogeneous(self) -> bool:
        return len({popcount(m) for m in self.terms}) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Degree of a homogeneous element, ``None`` for zero."""
        if not self.terms:
            return None
        if not self.is_homogeneous():
            raise NonHomogeneousError(f"{self} is not homogeneous")
        return -popcount(next(iter(self.terms)))

    @property
    def length(self) -> Optional[int]:
        d = self.degree
        return None if d is None else -d

    def coefficient(self, mask: int) -> Scalar:
        return self.terms.get(mask, self.algebra.field.zero())

    def sorted_terms(self) -> List[Tuple[int, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: (popcount(t[0]), mask_indices(t[0])))

    def to_json(self) -> List[List[Any]]:
        fld = self.algebra.field
        return [[fld.format(c), [i + 1 for i in mask_indices(m)]] for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        fld = self.algebra.field
        parts = []
        for m, c in self.sorted_terms():
            parts.append("*".join([fld.format(c)] + [f"e{i + 1}" for i in mask_indices(m)]))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ExteriorElement({self})"


def exterior_matrix_degree_check(P: SparseMatrix, row_twists: Sequence[int], col_twists: Sequence[int]) -> None:
    """Every nonzero ``P[i][j]`` must be homogeneous of length ``col_twists[j] - row_twists[i]``."""
    for (i, j), v in P.entries.items():
        if not v.is_homogeneous():
            raise NonHomogeneousError(f"Presentation entry ({i}, {j}) = {v} is not homogeneous")
        if v.length != col_twists[j] - row_twists[i]:
            raise DegreeIncompatibleError(
                f"Entry ({i}, {j}) has degree {v.degree}, expected {row_twists[i] - col_twists[j]}"
            )


# --------------------------------------------------------------------------- #
#                             GRADED E-MODULES                                #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class GradedExtModule:
    """
    A finite-length graded module over E on ``n`` variables.

    ``dims[k]`` is ``dim N_{top-k}``. ``action[i][k]`` is the matrix of ``e_{i+1}`` from
    ``N_{top-k}`` to ``N_{top-k-1}`` (shape ``dims[k+1] x dims[k]``, zero rows past the bottom).
    """

    n: int
    field: Field
    top: int
    dims: Tuple[int, ...]
    action: Tuple[Tuple[SparseMatrix, ...], ...]
    labels: Optional[Tuple[Tuple[Tuple[int, int], ...], ...]] = field(default=None, compare=False, repr=False)
    embedding: Optional[Tuple[SparseMatrix, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.action) != self.n:
            raise VariableCountMismatchError(f"Expected {self.n} action lists, got {len(self.action)}")
        K = len(self.dims)
        for i, mats in enumerate(self.action):
            if len(mats) != K:
                raise DimensionMismatchError(f"e_{i + 1} has {len(mats)} matrices for {K} degrees")
            for k, A in enumerate(mats):
                below = self.dims[k + 1] if k + 1 < K else 0
                if A.shape != (below, self.dims[k]):
                    raise DimensionMismatchError(
                        f"e_{i + 1} on degree {self.top - k} has shape {A.shape}, expected {(below, self.dims[k])}"
                    )
                if A.ring != self.field:
                    raise FieldError(f"Action matrix over {A.ring}, module over {self.field}")
        if not self.relations_hold():
            raise InvalidInputError("Action matrices violate e_i e_j = -e_j e_i or e_i^2 = 0")

    def relations_hold(self) -> bool:
        for k in range(len(self.dims) - 1):
            for i in range(self.n):
                Ai_k, Ai_k1 = self.action[i][k], self.action[i][k + 1]
                if not (Ai_k1 @ Ai_k).is_zero():
                    return False
                for j in range(i + 1, self.n):
                    Aj_k, Aj_k1 = self.action[j][k], self.action[j][k + 1]
                    if not (Ai_k1 @ Aj_k + Aj_k1 @ Ai_k).is_zero():
                        return False
        return True

    # -- degrees ---------------------------------------------------------- #

    @property
    def bottom(self) -> int:
        return self.top - len(self.dims) + 1

    def degrees(self) -> List[int]:
        return [self.top - k for k in range(len(self.dims))]

    def dim(self, d: int) -> int:
        k = self.top - d
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    @property
    def total_dimension(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dimension == 0

    def act(self, i: int, d: int) -> SparseMatrix:
        """Matrix of e_i (1-based) from N_d to N_{d-1}."""
        k = self.top - d
        if 0 <= k < len(self.dims):
            return self.action[i - 1][k]
        return SparseMatrix(self.dim(d - 1), self.dim(d), self.field)

    def multiply(self, i: int, d: int, vector: Sequence[Any]) -> List[Any]:
        return self.act(i, d).matvec([self.field(v) for v in vector])

    def twist(self, a: int) -> "GradedExtModule":
        """``N(a)``, with ``N(a)_d = N_{a+d}``."""
        return replace(self, top=self.top - a)

    def hilbert_function(self, origin: int = 0, length: Optional[int] = None) -> HilbertFunction:
        return hilbert_function(self, origin, length)

    def trimmed(self) -> "GradedExtModule":
        """Drop zero graded pieces at both ends."""
        nz = [k for k, v in enumerate(self.dims) if v]
        if not nz:
            return zero_module(self.n, self.field)
        lo, hi = nz[0], nz[-1] + 1
        action = tuple(
            tuple(mats[lo:hi - 1]) + (SparseMatrix(0, self.dims[hi - 1], self.field),) for mats in self.action
        )
        labels = self.labels[lo:hi] if self.labels is not None else None
        embedding = self.embedding[lo:hi] if self.embedding is not None else None
        return GradedExtModule(self.n, self.field, self.top - lo, self.dims[lo:hi], action, labels, embedding)


def zero_module(n: int, field: Field = QQ) -> GradedExtModule:
    return GradedExtModule(n, field, 0, (), tuple(() for _ in range(n)))


def hilbert_function(N: GradedExtModule, origin: int = 0, length: Optional[int] = None) -> HilbertFunction:
    """``h_i = dim N_{origin-i}`` for ``i = 0 .. length-1`` (``length`` defaults to ``n + 1``)."""
    if length is None:
        length = N.n + 1
    return tuple(N.dim(origin - i) for i in range(length))


# --------------------------------------------------------------------------- #
#                          MODULES FROM PRESENTATIONS                         #
# --------------------------------------------------------------------------- #


def module_from_cokernel(P: SparseMatrix, row_twists: Sequence[int], col_twists: Sequence[int]) -> GradedExtModule:
    """
    The module ``coker(P : sum E(c_j) -> sum E(r_i))`` degree by degree.

    Args:
        P: matrix over an :class:`ExteriorAlgebra`; entry ``(i, j)`` has length ``c_j - r_i``.
        row_twists: the twists ``r_i`` of the target generators.
        col_twists: the twists ``c_j`` of the relation generators.

    Basis vectors of the free module are ``e_S * eps_i`` ordered by generator, then by ``S``
    lexicographically; the quotient basis keeps the coordinates that are not pivots of the
    image, which are recorded in ``labels``.
    """
    algebra: ExteriorAlgebra = P.ring
    if not isinstance(algebra, ExteriorAlgebra):
        raise InvalidInputError("Presentation matrix must have exterior-algebra entries")
    if len(row_twists) != P.nrows or len(col_twists) != P.ncols:
        raise DimensionMismatchError(
            f"{len(row_twists)} row twists and {len(col_twists)} column twists for a {P.shape} presentation"
        )
    exterior_matrix_degree_check(P, row_twists, col_twists)
    n, fld = algebra.n, algebra.field
    if P.nrows == 0:
        return zero_module(n, fld)

    top = max(-r for r in row_twists)
    bottom = min(-r for r in row_twists) - n
    degrees = list(range(top, bottom - 1, -1))

    free_basis: Dict[int, List[Tuple[int, int]]] = {}
    for d in degrees:
        free_basis[d] = [(i, m) for i, r in enumerate(row_twists) for m in algebra.basis(-r - d)]
    index = {d: {lab: pos for pos, lab in enumerate(free_basis[d])} for d in degrees}

    columns = [P.column(j) for j in range(P.ncols)]
    image: Dict[int, Tuple[list, list]] = {}
    for d in degrees:
        vecs = []
        for j, c in enumerate(col_twists):
            k = -c - d
            if k < 0 or k > n:
                continue
            for m in algebra.basis(k):
                mono = ExteriorElement(algebra, {m: fld.one()})
                v = [fld.zero()] * len(free_basis[d])
                for i, entry in enumerate(columns[j]):
                    if not entry:
                        continue
                    for mask, coeff in (mono * entry).terms.items():
                        v[index[d][(i, mask)]] = v[index[d][(i, mask)]] + coeff
                if any(v):
                    vecs.append(v)
        image[d] = span_rref(vecs, len(free_basis[d]), fld) if vecs else ([], [])

    quotient: Dict[int, List[int]] = {}
    for d in degrees:
        pivots = set(image[d][1])
        quotient[d] = [pos for pos in range(len(free_basis[d])) if pos not in pivots]
    qindex = {d: {pos: q for q, pos in enumerate(quotient[d])} for d in degrees}

    dims = tuple(len(quotient[d]) for d in degrees)
    action = []
    for t in range(n):
        mats = []
        for d in degrees:
            below = d - 1
            rows_below = len(quotient[below]) if below in quotient else 0
            entries: Dict[Tuple[int, int], Any] = {}
            if rows_below:
                for q, pos in enumerate(quotient[d]):
                    i, mask = free_basis[d][pos]
                    res = ext_mul(1 << t, mask)
                    if res is None:
                        continue
                    sign, new_mask = res
                    v = [fld.zero()] * len(free_basis[below])
                    v[index[below][(i, new_mask)]] = fld(sign)
                    v = reduce_against(v, *image[below])
                    for pos2, c in enumerate(v):
                        if c:
                            entries[(qindex[below][pos2], q)] = c
            mats.append(SparseMatrix(rows_below, len(quotient[d]), fld, entries))
        action.append(tuple(mats))

    labels = tuple(tuple(free_basis[d][pos] for pos in quotient[d]) for d in degrees)
    N = GradedExtModule(n, fld, top, dims, tuple(action), labels)
    logger.debug("Cokernel of a %dx%d presentation has HF %s from degree %d", P.nrows, P.ncols, dims, top)
    return N.trimmed()


def free_module(n: int, field: Field = QQ, twist: int = 0) -> GradedExtModule:
    """``E(twist)`` as a graded module."""
    algebra = ExteriorAlgebra(n, field)
    return module_from_cokernel(SparseMatrix(1, 0, algebra), [twist], [])


def quotient_by_variables(n: int, m: int, field: Field = QQ) -> GradedExtModule:
    """``E / (e_{m+1}, ..., e_n)``, isomorphic to the exterior algebra on the first ``m`` variables."""
    if not 0 <= m <= n:
        raise InvalidInputError(f"Need 0 <= m <= n, got m={m}, n={n}")
    algebra = ExteriorAlgebra(n, field)
    P = SparseMatrix(1, n - m, algebra, {(0, j): algebra.e(m + 1 + j) for j in range(n - m)})
    return module_from_cokernel(P, [0], [1] * (n - m))


def element_vector(N: GradedExtModule, element: ExteriorElement, generator: int = 0) -> Tuple[int, List[Any]]:
    """
    Coordinates of ``element * eps_generator`` in a module built without relations in that degree.

    Returns ``(degree, vector)``; fails when a monomial is not a basis label of ``N``.
    """
    if N.labels is None:
        raise InvalidInputError("Module has no monomial labels to express elements in")
    if not element:
        raise InvalidInputError("The zero element has no degree")
    found = [(k, mask) for k, labs in enumerate(N.labels) for g, mask in labs if g == generator]
    if not found:
        raise InvalidInputError(f"Generator {generator} does not survive in the module")
    k0, mask0 = found[0]
    d = N.top - k0 + popcount(mask0) + element.degree
    k = N.top - d
    if not 0 <= k < len(N.dims):
        raise InvalidInputError(f"{element} falls outside the degrees of the module")
    pos = {lab: q for q, lab in enumerate(N.labels[k])}
    v = [N.field.zero()] * N.dims[k]
    for mask, c in element.terms.items():
        if (generator, mask) not in pos:
            raise InvalidInputError(f"Monomial e{mask_indices(mask)} is not a basis vector of the module")
        v[pos[(generator, mask)]] = c
    return d, v


# --------------------------------------------------------------------------- #
#                                SUBMODULES                                   #
# --------------------------------------------------------------------------- #


def submodule_generated(N: GradedExtModule, gens: Sequence[Tuple[int, Sequence[Any]]]) -> GradedExtModule:
    """
    The submodule of ``N`` generated by homogeneous elements ``(degree, coordinates)``.

    The result spans the same degrees as ``N``; ``embedding[k]`` has the basis of ``N'_{top-k}``
    as columns, written in the basis of ``N_{top-k}``.
    """
    fld = N.field
    K = len(N.dims)
    by_degree: Dict[int, List[List[Any]]] = {}
    for d, vec in gens:
        k = N.top - d
        if not 0 <= k < K:
            raise InvalidInputError(f"Generator degree {d} is outside the degrees {N.bottom}..{N.top} of the module")
        if len(vec) != N.dims[k]:
            raise DimensionMismatchError(f"Generator in degree {d} has {len(vec)} coordinates, expected {N.dims[k]}")
        by_degree.setdefault(k, []).append([fld(v) for v in vec])

    spans: List[Tuple[list, list]] = []
    for k in range(K):
        vecs = list(by_degree.get(k, []))
        if k > 0:
            prev_rows, _ = spans[k - 1]
            for row in prev_rows:
                w = [row.get(j, fld.zero()) for j in range(N.dims[k - 1])]
                for i in range(N.n):
                    vecs.append(N.action[i][k - 1].matvec(w))
        vecs = [v for v in vecs if any(v)]
        spans.append(span_rref(vecs, N.dims[k], fld) if vecs else ([], []))

    dims = tuple(len(p) for _, p in spans)
    action = []
    for i in range(N.n):
        mats = []
        for k in range(K):
            below = dims[k + 1] if k + 1 < K else 0
            entries = {}
            if below:
                _, piv_below = spans[k + 1]
                for col, row in enumerate(spans[k][0]):
                    w = [row.get(j, fld.zero()) for j in range(N.dims[k])]
                    u = N.action[i][k].matvec(w)
                    for r, pc in enumerate(piv_below):
                        if u[pc]:
                            entries[(r, col)] = u[pc]
            mats.append(SparseMatrix(below, dims[k], fld, entries))
        action.append(tuple(mats))
    embedding = tuple(
        SparseMatrix(N.dims[k], dims[k], fld, {(j, c): v for c, row in enumerate(spans[k][0]) for j, v in row.items()})
        for k in range(K)
    )
    return GradedExtModule(N.n, fld, N.top, dims, tuple(action), None, embedding)


# --------------------------------------------------------------------------- #
#                              IDEALS AND COLONS                              #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class ExteriorIdeal:
    algebra: ExteriorAlgebra
    generators: Tuple[ExteriorElement, ...] = ()

    def __post_init__(self) -> None:
        for g in self.generators:
            if g.algebra.n != self.algebra.n:
                raise VariableCountMismatchError("Ideal generator from a different exterior algebra")
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"Ideal generator {g} is not homogeneous")

    def graded_piece(self, k: int) -> Tuple[list, list]:
        """RREF basis of ``I ∩ E_{-k}`` in the lexicographic monomial basis."""
        basis = self.algebra.basis(k)
        pos = {m: q for q, m in enumerate(basis)}
        fld = self.algebra.field
        vecs = []
        for g in self.generators:
            if not g:
                continue
            s = g.length
            if s > k:
                continue
            for m in self.algebra.basis(k - s):
                prod = ExteriorElement(self.algebra, {m: fld.one()}) * g
                if prod:
                    v = [fld.zero()] * len(basis)
                    for mask, c in prod.terms.items():
                        v[pos[mask]] = c
                    vecs.append(v)
        return span_rref(vecs, len(basis), fld) if vecs else ([], [])

    def hilbert_function(self) -> HilbertFunction:
        return tuple(len(self.graded_piece(k)[1]) for k in range(self.algebra.n + 1))

    def same_as(self, other: "ExteriorIdeal") -> bool:
        if other.algebra.n != self.algebra.n:
            return False
        for k in range(self.algebra.n + 1):
            a, b = self.graded_piece(k), other.graded_piece(k)
            if b[1] != a[1] or [dict(r) for r in a[0]] != [dict(r) for r in b[0]]:
                return False
        return True

    def contains(self, element: ExteriorElement) -> bool:
        for k in {popcount(m) for m in element.terms}:
            rows, pivots = self.graded_piece(k)
            basis = self.algebra.basis(k)
            v = [element.terms.get(m, self.algebra.field.zero()) for m in basis]
            if any(reduce_against(v, rows, pivots)):
                return False
        return True


def colon_zero(ideal: ExteriorIdeal) -> ExteriorIdeal:
    """The annihilator ``(0 : I) = {x : x * I = 0}``, generated degree by degree."""
    algebra = ideal.algebra
    n, fld = algebra.n, algebra.field
    if n > COLON_CAP:
        raise SizeCapExceededError(f"Colon computation capped at n <= {COLON_CAP}", size=n, cap=COLON_CAP)
    gens = [g for g in ideal.generators if g]
    out: List[ExteriorElement] = []
    for k in range(n + 1):
        basis = algebra.basis(k)
        rows: Dict[Tuple[int, int], Any] = {}
        offset = 0
        for g in gens:
            target = algebra.basis(k + g.length)
            tpos = {m: q for q, m in enumerate(target)}
            for col, m in enumerate(basis):
                prod = ExteriorElement(algebra, {m: fld.one()}) * g
                for mask, c in prod.terms.items():
                    rows[(offset + tpos[mask], col)] = c
            offset += len(target)
        M = SparseMatrix(offset, len(basis), fld, rows)
        for vec in kernel_basis(M):
            out.append(ExteriorElement(algebra, {m: c for m, c in zip(basis, vec) if c}))
    logger.debug("Colon (0 : I) on %d variables has %d generators", n, len(out))
    return ExteriorIdeal(algebra, tuple(out))
