# -*- coding: utf-8 -*-
"""
Graded free complexes over S = field[x_1..x_n] and the classical families built on them:
Koszul complexes, Eagon-Northcott complexes and their linear strands.

Homological conventions: ``terms[k]`` sits at homological position ``start + k`` and
``diffs[k]`` is the differential from position ``start + k + 1`` down to ``start + k``.
A generator with twist ``t`` spans a copy of ``S(t)``, so it lives in degree ``-t``.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .algebra import (
    QQ,
    Field,
    PolynomialRing,
    SparseMatrix,
    SparsePoly,
    determinant,
    lift_constant_matrix,
    monomials_of_degree,
)
from .errors import (
    DegreeIncompatibleError,
    DimensionMismatchError,
    FieldError,
    InvalidInputError,
    NonHomogeneousError,
    VariableCountMismatchError,
)
from .linalg import matrix_rank, solve_in_column_space
from .ranks import is_koszul_rs

logger = logging.getLogger("SubRanks.complexes")

RankSequence = Tuple[int, ...]


# --------------------------------------------------------------------------- #
#                                   TYPES                                     #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class FreeModule:
    """A graded free module ``sum_i S(twists[i])``."""

    twists: Tuple[int, ...] = ()

    @classmethod
    def uniform(cls, rank: int, twist: int) -> "FreeModule":
        return cls((twist,) * rank)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def is_uniform(self) -> bool:
        return len(set(self.twists)) <= 1

    @property
    def twist(self) -> Optional[int]:
        """The common twist, ``None`` for rank 0; raises when generators sit in different degrees."""
        if not self.twists:
            return None
        if not self.is_uniform():
            raise DegreeIncompatibleError(f"Generators with mixed twists {sorted(set(self.twists))}")
        return self.twists[0]

    def shifted(self, a: int) -> "FreeModule":
        return FreeModule(tuple(t + a for t in self.twists))


@dataclass(frozen=True)
class GradedFreeComplex:
    ring: PolynomialRing
    terms: Tuple[FreeModule, ...]
    diffs: Tuple[SparseMatrix, ...] = ()
    start: int = 0
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if len(self.diffs) != max(len(self.terms) - 1, 0):
            raise DimensionMismatchError(f"{len(self.terms)} terms need {len(self.terms) - 1} differentials")
        for k, D in enumerate(self.diffs):
            want = (self.terms[k].rank, self.terms[k + 1].rank)
            if D.shape != want:
                raise DimensionMismatchError(
                    f"Differential out of position {self.start + k + 1} has shape {D.shape}, expected {want}"
                )
            if not isinstance(D.ring, PolynomialRing) or D.ring.n != self.ring.n:
                raise VariableCountMismatchError("Differential entries must live in the complex's ring")

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def field(self) -> Field:
        return self.ring.field

    @property
    def end(self) -> int:
        """Highest homological position carrying a term."""
        return self.start + len(self.terms) - 1

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(t.rank for t in self.terms)

    def positions(self) -> List[int]:
        return list(range(self.start, self.start + len(self.terms)))

    def term(self, h: int) -> Optional[FreeModule]:
        k = h - self.start
        return self.terms[k] if 0 <= k < len(self.terms) else None

    def differential(self, h: int) -> SparseMatrix:
        """``d_h`` from position ``h`` to ``h - 1``; zero matrices outside the complex."""
        k = h - self.start - 1
        if 0 <= k < len(self.diffs):
            return self.diffs[k]
        src, tgt = self.term(h), self.term(h - 1)
        return SparseMatrix(tgt.rank if tgt else 0, src.rank if src else 0, self.ring)

    @property
    def origin(self) -> int:
        """Position read as index 0 of the rank sequence: ``start`` when negative, else 0."""
        return min(self.start, 0)

    def rank_sequence(self, length: Optional[int] = None) -> RankSequence:
        """
        Ranks at positions ``origin, origin + 1, ...`` (padded with zeros up to ``length``).

        A complex that reaches below position 0, such as ``L(N)`` of a module living in
        negative degrees, is read from its lowest term; otherwise positions are absolute.
        """
        origin = self.origin
        if length is None:
            length = max(self.end + 1 - origin, 0)
        return tuple(self.term(origin + h).rank if self.term(origin + h) else 0 for h in range(length))

    def twisted(self, a: int) -> "GradedFreeComplex":
        """``C(a)``: every twist raised by ``a``."""
        return replace(self, terms=tuple(t.shifted(a) for t in self.terms))

    def shifted(self, s: int) -> "GradedFreeComplex":
        """Move every term ``s`` homological positions up."""
        return replace(self, start=self.start + s)

    def change_field(self, new_field: Field) -> "GradedFreeComplex":
        if new_field == self.field:
            return self
        ring = self.ring.with_field(new_field)
        diffs = tuple(D.map_entries(lambda e: e.change_field(new_field), ring) for D in self.diffs)
        return replace(self, ring=ring, diffs=diffs)


@dataclass(frozen=True)
class ComplexInclusion:
    """Scalar matrices ``maps[k] : F_{F.start+k} -> G_{F.start+k}`` (columns are images of F's basis)."""

    maps: Tuple[SparseMatrix, ...]


# --------------------------------------------------------------------------- #
#                                VALIDATION                                   #
# --------------------------------------------------------------------------- #


def verify_complex(C: GradedFreeComplex) -> bool:
    """Check that every entry is homogeneous of the right degree and that ``d o d = 0``."""
    for k, D in enumerate(C.diffs):
        tgt, src = C.terms[k], C.terms[k + 1]
        for (r, c), entry in D.entries.items():
            if not entry.is_homogeneous():
                logger.debug("Entry (%d, %d) of d_%d is not homogeneous", r, c, C.start + k + 1)
                return False
            if entry.degree != tgt.twists[r] - src.twists[c]:
                logger.debug(
                    "Entry (%d, %d) of d_%d has degree %s, expected %d",
                    r, c, C.start + k + 1, entry.degree, tgt.twists[r] - src.twists[c],
                )
                return False
    for k in range(len(C.diffs) - 1):
        if not (C.diffs[k] @ C.diffs[k + 1]).is_zero():
            logger.debug("d_%d o d_%d is not zero", C.start + k + 1, C.start + k + 2)
            return False
    return True


def is_subcomplex(F: GradedFreeComplex, G: GradedFreeComplex, phi: ComplexInclusion) -> bool:
    """
    Decide whether ``phi`` embeds ``F`` as a graded subcomplex of ``G``.

    Each ``phi_h`` must be injective and degree-preserving, and ``g o phi = phi o f`` everywhere.
    """
    if F.n != G.n:
        raise VariableCountMismatchError(f"Subcomplex over {F.n} variables, ambient over {G.n}")
    fld = G.field
    if len(phi.maps) != len(F.terms):
        raise DimensionMismatchError(f"{len(phi.maps)} inclusion maps for {len(F.terms)} terms")
    for k, M in enumerate(phi.maps):
        h = F.start + k
        Gt = G.term(h)
        g_rank = Gt.rank if Gt else 0
        if M.shape != (g_rank, F.terms[k].rank):
            raise DimensionMismatchError(
                f"Inclusion at position {h} has shape {M.shape}, expected {(g_rank, F.terms[k].rank)}"
            )
        if M.ring != fld:
            raise FieldError(f"Inclusion over {M.ring}, complex over {fld}")
        if matrix_rank(M) != F.terms[k].rank:
            logger.debug("Inclusion at position %d is not injective", h)
            return False
        for (r, c) in M.entries:
            if Gt.twists[r] != F.terms[k].twists[c]:
                logger.debug("Inclusion at position %d mixes twists %d and %d", h, F.terms[k].twists[c], Gt.twists[r])
                return False
    lifted = [lift_constant_matrix(M, G.ring) for M in phi.maps]
    for k in range(len(F.terms)):
        h = F.start + k
        if G.term(h) is None or G.term(h - 1) is None:
            continue
        left = G.differential(h) @ lifted[k]
        if k >= 1:
            right = lifted[k - 1] @ F.diffs[k - 1].map_entries(G.ring, G.ring)
        else:
            right = SparseMatrix(left.nrows, left.ncols, G.ring)
        if left != right:
            logger.debug("Inclusion does not commute with the differentials at position %d", h)
            return False
    return True


# --------------------------------------------------------------------------- #
#                              KOSZUL COMPLEXES                               #
# --------------------------------------------------------------------------- #


def koszul_general(forms: Sequence[SparsePoly], ring: Optional[PolynomialRing] = None) -> GradedFreeComplex:
    """
    Koszul complex of homogeneous forms ``f_1..f_m``.

    Position ``i`` has basis the ``i``-subsets ``T`` in lexicographic order, twist
    ``-sum(deg f_j for j in T)``; ``d(e_T) = sum_k (-1)^(k-1) f_{t_k} e_{T - t_k}``.
    """
    if ring is None:
        if not forms:
            raise InvalidInputError("An empty list of forms needs an explicit ring")
        ring = forms[0].ring
    degs = []
    for f in forms:
        if f.ring.n != ring.n:
            raise VariableCountMismatchError(f"Form {f} lives in {f.ring.n} variables, not {ring.n}")
        if not f:
            raise InvalidInputError("Koszul forms must be nonzero")
        if not f.is_homogeneous():
            raise NonHomogeneousError(f"Form {f} is not homogeneous")
        degs.append(f.degree)
    m = len(forms)
    bases = [list(itertools.combinations(range(m), i)) for i in range(m + 1)]
    terms = tuple(FreeModule(tuple(-sum(degs[j] for j in T) for T in basis)) for basis in bases)
    diffs = []
    for i in range(1, m + 1):
        index = {T: r for r, T in enumerate(bases[i - 1])}
        entries = {}
        for c, T in enumerate(bases[i]):
            for pos, j in enumerate(T):
                f = forms[j] if pos % 2 == 0 else -forms[j]
                entries[(index[T[:pos] + T[pos + 1:]], c)] = f
        diffs.append(SparseMatrix(len(bases[i - 1]), len(bases[i]), ring, entries))
    return GradedFreeComplex(ring, terms, tuple(diffs), 0, label=f"koszul({m})")


def koszul(n: int, field: Field = QQ) -> GradedFreeComplex:
    """Koszul complex on the variables of ``field[x_1..x_n]``; position i is ``S(-i)^C(n,i)``."""
    if n < 0:
        raise InvalidInputError("Number of variables must be non-negative")
    ring = PolynomialRing(n, field)
    C = koszul_general(ring.gens, ring)
    return replace(C, label=f"koszul({n})")


# --------------------------------------------------------------------------- #
#                           EAGON-NORTHCOTT COMPLEXES                         #
# --------------------------------------------------------------------------- #


def colex_subsets(q: int, s: int) -> List[Tuple[int, ...]]:
    return sorted(itertools.combinations(range(q), s), key=lambda T: tuple(reversed(T)))


def _uniform_entry_degree(A: SparseMatrix) -> int:
    degs = set()
    for (i, j), v in A.entries.items():
        if not v.is_homogeneous():
            raise NonHomogeneousError(f"Entry ({i}, {j}) = {v} is not homogeneous")
        degs.add(v.degree)
    if len(degs) > 1:
        raise DegreeIncompatibleError(f"Matrix entries have mixed degrees {sorted(degs)}")
    return degs.pop() if degs else 1


def eagon_northcott(A: SparseMatrix) -> GradedFreeComplex:
    """
    Eagon-Northcott complex of a ``p x q`` matrix of forms of one degree ``delta`` (``p <= q``).

    Position 0 is ``S``; position 1 is ``wedge^p F`` with the maximal minors as ``d_1``; position
    ``k + 1`` (``1 <= k <= q - p``) has basis ``Sym_k`` monomials (grevlex) times ``(p+k)``-subsets
    (colex), twist ``-delta (p + k)``, and

        d(a, S) = sum_i (-1)^(i-1) sum_j A[j][s_i] (a - e_j, S - s_i).
    """
    p, q = A.nrows, A.ncols
    ring: PolynomialRing = A.ring
    if p == 0 or p > q:
        raise InvalidInputError(f"Eagon-Northcott needs 1 <= p <= q, got a {p}x{q} matrix")
    delta = _uniform_entry_degree(A)

    terms = [FreeModule((0,))]
    bases: List[List[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = [[]]
    for k in range(q - p + 1):
        basis = [(a, S) for a in monomials_of_degree(p, k) for S in colex_subsets(q, p + k)]
        bases.append(basis)
        terms.append(FreeModule.uniform(len(basis), -delta * (p + k)))

    minors = {}
    for c, (_, S) in enumerate(bases[1]):
        minors[(0, c)] = determinant(A.submatrix(range(p), S))
    diffs = [SparseMatrix(1, len(bases[1]), ring, minors)]

    for k in range(1, q - p + 1):
        index = {lab: r for r, lab in enumerate(bases[k])}
        entries: Dict[Tuple[int, int], SparsePoly] = {}
        for c, (a, S) in enumerate(bases[k + 1]):
            for i, s in enumerate(S):
                rest = S[:i] + S[i + 1:]
                for j in range(p):
                    if a[j] == 0:
                        continue
                    entry = A.get(j, s)
                    if not entry:
                        continue
                    b = a[:j] + (a[j] - 1,) + a[j + 1:]
                    r = index[(b, rest)]
                    term = entry if i % 2 == 0 else -entry
                    entries[(r, c)] = entries[(r, c)] + term if (r, c) in entries else term
        diffs.append(SparseMatrix(len(bases[k]), len(bases[k + 1]), ring, entries))
    logger.debug("Eagon-Northcott of a %dx%d matrix has ranks %s", p, q, [t.rank for t in terms])
    return GradedFreeComplex(ring, tuple(terms), tuple(diffs), 0, label=f"eagon_northcott({p}x{q})")


def matrix_Mnd(n: int, d: int, field: Field = QQ) -> SparseMatrix:
    """The ``d x (n + d - 1)`` matrix with ``x_{j+1}`` on row ``i`` column ``i + j``."""
    if n < 1 or d < 1:
        raise InvalidInputError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    ring = PolynomialRing(n, field)
    gens = ring.gens
    return SparseMatrix(d, n + d - 1, ring, {(i, i + j): gens[j] for i in range(d) for j in range(n)})


def linear_strand_Lnd(n: int, d: int, field: Field = QQ) -> GradedFreeComplex:
    """
    ``L_{n,d}``: the Eagon-Northcott complex of ``M_{n,d}`` without its position-0 term,
    reindexed to start at 0 and twisted so the generators at position 0 have twist 0.
    """
    EN = eagon_northcott(matrix_Mnd(n, d, field))
    terms = tuple(t.shifted(d) for t in EN.terms[1:])
    return GradedFreeComplex(EN.ring, terms, EN.diffs[1:], 0, label=f"L({n},{d})")


def generic_matrix(p: int, q: int, field: Field = QQ) -> SparseMatrix:
    """A ``p x q`` matrix of distinct variables ``y_ij`` in ``p * q`` variables."""
    names = tuple(f"y{i + 1}{j + 1}" if p < 10 and q < 10 else f"y{i + 1}_{j + 1}" for i in range(p) for j in range(q))
    ring = PolynomialRing(p * q, field, names)
    gens = ring.gens
    return SparseMatrix(p, q, ring, {(i, j): gens[i * q + j] for i in range(p) for j in range(q)})


def twisted_cubic_matrix(field: Field = QQ) -> SparseMatrix:
    """``[[x, y, z], [y, z, w]]`` over ``field[x, y, z, w]``."""
    ring = PolynomialRing(4, field, ("x", "y", "z", "w"))
    x, y, z, w = ring.gens
    return SparseMatrix.from_rows([[x, y, z], [y, z, w]], ring)


# --------------------------------------------------------------------------- #
#                               SPECIALIZATION                                #
# --------------------------------------------------------------------------- #


def _propagate_twists(C: GradedFreeComplex, diffs: Sequence[SparseMatrix]) -> List[FreeModule]:
    terms = [C.terms[0]]
    for k, D in enumerate(diffs):
        tgt = terms[k]
        twists = []
        for c in range(D.ncols):
            found = None
            for r in range(D.nrows):
                v = D.entries.get((r, c))
                if v is None:
                    continue
                t = tgt.twists[r] - v.degree
                if found is None:
                    found = t
                elif found != t:
                    raise DegreeIncompatibleError(
                        f"Column {c} of d_{C.start + k + 1} is not homogeneous after specialization"
                    )
            if found is None:
                raise DegreeIncompatibleError(
                    f"Column {c} of d_{C.start + k + 1} vanishes; its twist cannot be recovered"
                )
            twists.append(found)
        terms.append(FreeModule(tuple(twists)))
    return terms


def specialize(C: GradedFreeComplex, images: Sequence[SparsePoly], target: Optional[PolynomialRing] = None) -> GradedFreeComplex:
    """
    Apply ``x_i -> images[i]`` to every differential.

    With images of one common degree ``delta`` every twist is scaled by ``delta``; otherwise
    position-0 twists are kept and the rest are recomputed from the specialized entries.
    """
    if len(images) != C.n:
        raise VariableCountMismatchError(f"Complex has {C.n} variables, got {len(images)} images")
    if target is None:
        if not images:
            raise InvalidInputError("An empty substitution needs an explicit target ring")
        target = images[0].ring
    degrees = set()
    for img in images:
        if img.ring.n != target.n:
            raise VariableCountMismatchError("All images must live in the same ring")
        if not img.is_homogeneous():
            raise DegreeIncompatibleError(f"Image {img} is not homogeneous")
        if img:
            degrees.add(img.degree)
    diffs = tuple(D.map_entries(lambda e: e.substitute(images), target) for D in C.diffs)
    if len(degrees) <= 1:
        delta = degrees.pop() if degrees else 1
        terms = tuple(FreeModule(tuple(delta * t for t in m.twists)) for m in C.terms)
    else:
        terms = tuple(_propagate_twists(C, diffs))
    return GradedFreeComplex(target, terms, diffs, C.start, label=f"specialized {C.label}".strip())


# --------------------------------------------------------------------------- #
#                        SUBCOMPLEXES FROM SUBSPACES                          #
# --------------------------------------------------------------------------- #


def _coefficient_vectors(values: Sequence[SparsePoly], size: int) -> Dict[Tuple[int, ...], List[Any]]:
    out: Dict[Tuple[int, ...], List[Any]] = {}
    for r, poly in enumerate(values):
        for exps, c in poly.terms.items():
            vec = out.get(exps)
            if vec is None:
                vec = out[exps] = [None] * size
            vec[r] = c
    return out


def induced_subcomplex(G: GradedFreeComplex, bases: Sequence[SparseMatrix]) -> Tuple[GradedFreeComplex, ComplexInclusion]:
    """
    The subcomplex of ``G`` spanned over S by scalar subspaces ``V_h`` (columns of ``bases[k]``
    at position ``G.start + k``), with the differentials it inherits from ``G``.

    Raises when some ``g(V_h)`` leaves ``S * V_{h-1}`` or a basis vector mixes twists.
    """
    if len(bases) != len(G.terms):
        raise DimensionMismatchError(f"{len(bases)} subspaces for {len(G.terms)} terms")
    fld = G.field
    terms = []
    for k, V in enumerate(bases):
        if V.nrows != G.terms[k].rank:
            raise DimensionMismatchError(f"Subspace at position {G.start + k} lives in dimension {V.nrows}")
        twists = []
        for j in range(V.ncols):
            seen = {G.terms[k].twists[r] for r in range(V.nrows) if V.get(r, j)}
            if len(seen) != 1:
                raise DegreeIncompatibleError(f"Basis vector {j} at position {G.start + k} is not homogeneous")
            twists.append(seen.pop())
        terms.append(FreeModule(tuple(twists)))
    diffs = []
    for k in range(1, len(bases)):
        D, V, below = G.diffs[k - 1], bases[k], bases[k - 1]
        entries: Dict[Tuple[int, int], SparsePoly] = {}
        for j in range(V.ncols):
            image = D.matvec(V.column(j)) if D.ncols else []
            for exps, vec in _coefficient_vectors(image, D.nrows).items():
                rhs = [fld.zero() if v is None else v for v in vec]
                x = solve_in_column_space(below, rhs)
                if x is None:
                    raise InvalidInputError(
                        f"The subspaces are not closed under d_{G.start + k} (basis vector {j})"
                    )
                for row, c in enumerate(x):
                    if c:
                        term = G.ring.monomial(exps, c)
                        entries[(row, j)] = entries[(row, j)] + term if (row, j) in entries else term
        diffs.append(SparseMatrix(below.ncols, V.ncols, G.ring, entries))
    F = GradedFreeComplex(G.ring, tuple(terms), tuple(diffs), G.start, label=f"subcomplex of {G.label}".strip())
    return F, ComplexInclusion(tuple(bases))


def koszul_subcomplex(r: Sequence[int], m: int, field: Field = QQ) -> Tuple[GradedFreeComplex, ComplexInclusion, GradedFreeComplex]:
    """
    A witness for ``r`` in the Koszul complex on ``m`` variables: the span of the first ``r_i``
    basis vectors ``e_T`` in colexicographic order of ``T``.

    Returns ``(F, phi, G)`` with ``G = koszul(m)``.
    """
    if not is_koszul_rs(r, m):
        raise InvalidInputError(f"{tuple(r)} is not a Koszul rank sequence for m = {m}")
    r = tuple(r) + (0,) * (m + 1 - len(r))
    G = koszul(m, field)
    bases = []
    for i in range(m + 1):
        lex = {T: pos for pos, T in enumerate(itertools.combinations(range(m), i))}
        chosen = colex_subsets(m, i)[:r[i]]
        bases.append(SparseMatrix(len(lex), len(chosen), field, {(lex[T], j): 1 for j, T in enumerate(chosen)}))
    F, phi = induced_subcomplex(G, bases)
    return F, phi, G


def push_forward_subcomplex(
    F: GradedFreeComplex, G: GradedFreeComplex, phi: ComplexInclusion, images: Sequence[SparsePoly]
) -> Tuple[GradedFreeComplex, GradedFreeComplex, ComplexInclusion]:
    """Specialize a subcomplex and its ambient complex along the same ring map; ``phi`` is unchanged."""
    return specialize(F, images), specialize(G, images), phi
