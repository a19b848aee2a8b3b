# -*- coding: utf-8 -*-
"""
Brute-force oracles over small prime fields.

- :func:`subcomplex_search` looks for scalar subspaces ``V_h`` of the generator spaces of a
  graded free complex with prescribed dimensions that are closed under the differential.
- :func:`enumerate_submodule_hfs` lists the Hilbert functions of all graded submodules of a
  small exterior module.
- :func:`verify_containment` checks the Hilbert-function containment relating ``N_{n,d}``,
  ``N_{n,d-1}`` and ``N_{n-1,d}`` over a larger algebra.

Subspaces are always handled through reduced row echelon forms, so each one is produced once.
Internally vectors are ``int64`` numpy rows reduced mod p.
"""
from __future__ import annotations

import itertools
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import timedelta
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import humanize
import numpy as np
import psutil

from .algebra import Field, PrimeField, SparseMatrix, get_field
from .bgg import tate_Nnd
from .complexes import GradedFreeComplex, induced_subcomplex, is_subcomplex
from .errors import (
    BudgetExceededError,
    FieldError,
    InvalidInputError,
    SizeCapExceededError,
    SubRanksError,
)
from .exterior import GradedExtModule, quotient_by_variables
from .linalg import rref_mod_p
from .ranks import normalize_rank_sequence, pad

logger = logging.getLogger("SubRanks.oracle")

HilbertFunction = Tuple[int, ...]

DEFAULT_BUDGET = 200_000
HF_CAP = 12


def set_limits(budget: Optional[int] = None, hf_cap: Optional[int] = None) -> None:
    global DEFAULT_BUDGET, HF_CAP
    if budget is not None:
        DEFAULT_BUDGET = int(budget)
    if hf_cap is not None:
        HF_CAP = int(hf_cap)


# --------------------------------------------------------------------------- #
#                              SUBSPACE ENUMERATION                           #
# --------------------------------------------------------------------------- #


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``GF(q)^n``."""
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(dim: int, k: int, p: int) -> Iterator[np.ndarray]:
    """
    Every ``k``-dimensional subspace of ``GF(p)^dim``, each exactly once, as its ``k x dim``
    reduced row echelon basis: pivot patterns in lexicographic order, then free entries.
    """
    if k < 0 or k > dim:
        return
    for pivots in itertools.combinations(range(dim), k):
        pivot_set = set(pivots)
        free = [(row, col) for row, pc in enumerate(pivots) for col in range(pc + 1, dim) if col not in pivot_set]
        for values in itertools.product(range(p), repeat=len(free)):
            A = np.zeros((k, dim), dtype=np.int64)
            for row, pc in enumerate(pivots):
                A[row, pc] = 1
            for (row, col), v in zip(free, values):
                A[row, col] = v
            yield A


def _extensions(R: np.ndarray, pivots: Sequence[int], dim: int, k: int, p: int) -> Iterator[np.ndarray]:
    """Subspaces of dimension ``k`` containing the row space of ``R`` (RREF with ``pivots``)."""
    a = len(pivots)
    if a > k:
        return
    quotient = [c for c in range(dim) if c not in set(pivots)]
    for U in enumerate_subspaces(len(quotient), k - a, p):
        lifted = np.zeros((k - a, dim), dtype=np.int64)
        if quotient:
            lifted[:, quotient] = U
        yield np.vstack([R.reshape(a, dim), lifted]) if a else lifted


def _span(blocks: Sequence[np.ndarray], V: np.ndarray, dim: int, p: int) -> Tuple[np.ndarray, List[int]]:
    """RREF of the span of ``M @ v`` over the blocks ``M`` and the rows ``v`` of ``V``."""
    if V.shape[0] == 0 or not blocks:
        return np.zeros((0, dim), dtype=np.int64), []
    stacked = np.vstack([(M @ V.T).T % p for M in blocks])
    return rref_mod_p(stacked, p)


# --------------------------------------------------------------------------- #
#                              SUBCOMPLEX SEARCH                              #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class SubspaceChoice:
    """``bases[h]`` has the chosen basis of ``V_h`` as columns, positions counted from 0."""

    bases: Tuple[SparseMatrix, ...]


@dataclass(frozen=True)
class SearchReport:
    verdict: str
    target: Tuple[int, ...]
    field: str
    candidate_space: int
    examined: int
    witness: Optional[SubspaceChoice] = None
    subcomplex: Optional[GradedFreeComplex] = None
    validated: bool = False

    @property
    def found(self) -> bool:
        return self.verdict == "found"


@dataclass
class _Problem:
    p: int
    ranks: Tuple[int, ...]
    target: Tuple[int, ...]
    # blocks[h]: one rank_{h-1} x rank_h matrix per monomial appearing in d_h
    blocks: Dict[int, List[np.ndarray]]
    prune: bool = True

    @property
    def top(self) -> int:
        return max(h for h, r in enumerate(self.target) if r)


def _coefficient_blocks(D: SparseMatrix, p: int) -> List[np.ndarray]:
    by_monomial: Dict[Tuple[int, ...], np.ndarray] = {}
    for (r, c), poly in D.entries.items():
        for exps, coeff in poly.terms.items():
            M = by_monomial.get(exps)
            if M is None:
                M = by_monomial[exps] = np.zeros(D.shape, dtype=np.int64)
            M[r, c] = int(coeff) % p
    return [by_monomial[e] for e in sorted(by_monomial)]


def _closed(problem: _Problem, h: int, V_above: np.ndarray, V: np.ndarray) -> bool:
    R, pivots = _span(problem.blocks.get(h + 1, []), V_above, problem.ranks[h], problem.p)
    if not pivots:
        return True
    return len(rref_mod_p(np.vstack([V, R]), problem.p)[1]) == V.shape[0]


def _above(problem: _Problem, chosen: Dict[int, np.ndarray], h: int) -> np.ndarray:
    if h + 1 in chosen:
        return chosen[h + 1]
    width = problem.ranks[h + 1] if h + 1 < len(problem.ranks) else 0
    return np.zeros((0, width), dtype=np.int64)


def _descend(problem: _Problem, h: int, chosen: Dict[int, np.ndarray], counter: List[int]) -> Optional[Dict[int, np.ndarray]]:
    if h < 0:
        if problem.prune:
            return dict(chosen)
        # exhaustive mode: one full tuple examined, closure checked at every position
        counter[0] += 1
        if all(_closed(problem, g, _above(problem, chosen, g), chosen[g]) for g in range(problem.top + 1)):
            return dict(chosen)
        return None
    dim, k = problem.ranks[h], problem.target[h]
    if problem.prune:
        R, pivots = _span(problem.blocks.get(h + 1, []), _above(problem, chosen, h), dim, problem.p)
        candidates = _extensions(R, pivots, dim, k, problem.p)
    else:
        candidates = enumerate_subspaces(dim, k, problem.p)
    for V in candidates:
        if problem.prune:
            counter[0] += 1
        chosen[h] = V
        found = _descend(problem, h - 1, chosen, counter)
        if found is not None:
            return found
    chosen.pop(h, None)
    return None


def _run_shard(problem: _Problem, tops: Sequence[np.ndarray]) -> Tuple[Optional[Dict[int, np.ndarray]], int]:
    """Search with ``V_top`` restricted to ``tops``; returns the first witness and the work done."""
    counter = [0]
    h = problem.top
    for V in tops:
        if problem.prune:
            counter[0] += 1
        found = _descend(problem, h - 1, {h: V}, counter)
        if found is not None:
            return found, counter[0]
    return None, counter[0]


def _build_problem(G: GradedFreeComplex, r: Tuple[int, ...], p: int, prune: bool) -> _Problem:
    L = max(len(r), G.end + 1)
    ranks = tuple(G.term(h).rank if G.term(h) else 0 for h in range(L))
    target = pad(r, L)
    for h, k in enumerate(target):
        if k and not G.term(h).is_uniform():
            raise InvalidInputError(f"Position {h} mixes twists; the oracle needs one twist per position")
    blocks = {h: _coefficient_blocks(G.differential(h), p) for h in range(1, L) if G.term(h) and G.term(h - 1)}
    return _Problem(p, ranks, target, blocks, prune)


def _resolve_field(current: Field, p: Optional[int]) -> PrimeField:
    if p is None:
        if isinstance(current, PrimeField):
            return current
        raise FieldError("The oracle works over GF(p); pass a prime")
    target = get_field(f"GF({p})") if isinstance(p, int) else get_field(p)
    if not isinstance(target, PrimeField):
        raise FieldError(f"The oracle needs a prime field, got {target}")
    if isinstance(current, PrimeField) and current != target:
        raise FieldError(f"Complex is defined over {current}, cannot search over {target}")
    return target


def subcomplex_search(
    G: GradedFreeComplex,
    r: Sequence[int],
    p: Optional[int] = None,
    budget: Optional[int] = None,
    workers: int = 1,
    prune: bool = True,
) -> SearchReport:
    """
    Exhaustively decide whether ``G`` has a subcomplex spanned by scalar subspaces of
    dimensions ``r`` (indexed by homological position, starting at 0) over ``GF(p)``.

    The search descends from the highest position: every ``V_h`` must contain the monomial
    coefficient vectors of ``g_{h+1}(V_{h+1})``. With ``prune=False`` every tuple of subspaces is
    generated and tested, so ``examined`` equals the product of Gaussian binomials when the
    answer is ``exhausted``.
    """
    r = normalize_rank_sequence(r)
    budget = DEFAULT_BUDGET if budget is None else budget
    if G.start < 0:
        raise InvalidInputError(f"Complex starts at position {G.start}; shift it to start at 0 or later")
    fld = _resolve_field(G.field, p)
    G = G.change_field(fld)

    L = max(len(r), G.end + 1)
    ranks = [G.term(h).rank if G.term(h) else 0 for h in range(L)]
    target = pad(r, L)
    space = 1
    for dim, k in zip(ranks, target):
        space *= gaussian_binomial(dim, k, fld.p)
    if space > budget:
        raise BudgetExceededError(
            f"{space} candidate subspace tuples exceed the budget of {budget}", size=space, cap=budget
        )
    logger.debug("Searching %s for ranks %s over %s (%d candidates)", G.label or "complex", target, fld, space)

    if space == 0:
        return SearchReport("exhausted", target, fld.name, 0, 0)
    if not any(target):
        bases = tuple(SparseMatrix(ranks[h], 0, fld) for h in range(L))
        return _finish(G, target, fld, space, 0, bases)

    problem = _build_problem(G, target, fld.p, prune)
    started = time.perf_counter()
    tops = list(enumerate_subspaces(ranks[problem.top], target[problem.top], fld.p))
    if workers > 1 and len(tops) > 1:
        size = -(-len(tops) // workers)
        shards = [tops[i:i + size] for i in range(0, len(tops), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_shard, [problem] * len(shards), shards))
    else:
        results = [_run_shard(problem, tops)]

    examined = 0
    report = None
    for found, count in results:
        examined += count
        if found is not None:
            bases = tuple(
                SparseMatrix(ranks[h], target[h], fld,
                             {(i, j): int(v) for j, row in enumerate(found[h]) for i, v in enumerate(row) if v})
                if h in found else SparseMatrix(ranks[h], 0, fld)
                for h in range(L)
            )
            report = _finish(G, target, fld, space, examined, bases)
            break
    if report is None:
        report = SearchReport("exhausted", target, fld.name, space, examined)
    _log_summary(report, time.perf_counter() - started)
    return report


def _log_summary(report: SearchReport, elapsed: float) -> None:
    rss = psutil.Process(os.getpid()).memory_info().rss
    logger.info(
        "Search for %s over %s: %s after %s of %s candidates in %s (rss %s)",
        report.target, report.field, report.verdict, humanize.intcomma(report.examined),
        humanize.intcomma(report.candidate_space), humanize.naturaldelta(timedelta(seconds=elapsed)),
        humanize.naturalsize(rss),
    )


def _finish(G: GradedFreeComplex, target: Tuple[int, ...], fld: PrimeField, space: int, examined: int,
            bases: Tuple[SparseMatrix, ...]) -> SearchReport:
    own = bases[G.start:G.end + 1]
    F, phi = induced_subcomplex(G, own)
    if not is_subcomplex(F, G, phi):
        raise SubRanksError(f"Witness for {target} over {fld} failed re-validation")
    return SearchReport("found", target, fld.name, space, examined, SubspaceChoice(bases), F, True)


# --------------------------------------------------------------------------- #
#                          SUBMODULE HILBERT FUNCTIONS                        #
# --------------------------------------------------------------------------- #


def _action_arrays(N: GradedExtModule, p: int) -> List[List[np.ndarray]]:
    out = []
    for k in range(len(N.dims) - 1):
        mats = []
        for i in range(N.n):
            A = np.zeros(N.action[i][k].shape, dtype=np.int64)
            for (r, c), v in N.action[i][k].entries.items():
                A[r, c] = int(v) % p
            mats.append(A)
        out.append(mats)
    return out


def enumerate_submodule_hfs(N: GradedExtModule, p: Optional[int] = None, cap: Optional[int] = None,
                            origin: int = 0, length: Optional[int] = None) -> FrozenSet[HilbertFunction]:
    """
    The Hilbert functions (``h_i = dim N'_{origin-i}``) of all graded submodules ``N'``.

    Degrees are visited from the top down; each graded piece ranges over the subspaces that
    contain the image of the piece chosen one degree higher.
    """
    cap = HF_CAP if cap is None else cap
    fld = _resolve_field(N.field, p)
    if N.field != fld:
        raise FieldError(f"Module is defined over {N.field}, not {fld}")
    if N.total_dimension > cap:
        raise SizeCapExceededError(
            f"Module of total dimension {N.total_dimension} exceeds the enumeration cap {cap}",
            size=N.total_dimension, cap=cap,
        )
    if length is None:
        length = N.n + 1
    K = len(N.dims)
    arrays = _action_arrays(N, fld.p)
    memo: Dict[Tuple[int, bytes, Tuple[int, ...]], FrozenSet[Tuple[int, ...]]] = {}

    def tails(k: int, R: np.ndarray, pivots: List[int]) -> FrozenSet[Tuple[int, ...]]:
        if k == K:
            return frozenset({()})
        key = (k, R.tobytes(), R.shape)
        if key in memo:
            return memo[key]
        out: Set[Tuple[int, ...]] = set()
        dim = N.dims[k]
        for size in range(len(pivots), dim + 1):
            seen_next: Set[Tuple[bytes, Tuple[int, ...]]] = set()
            for V in _extensions(R, pivots, dim, size, fld.p):
                if k + 1 < K:
                    R2, piv2 = _span(arrays[k], V, N.dims[k + 1], fld.p)
                else:
                    R2, piv2 = np.zeros((0, 0), dtype=np.int64), []
                sig = (R2.tobytes(), R2.shape)
                if sig in seen_next:
                    continue
                seen_next.add(sig)
                for tail in tails(k + 1, R2, piv2):
                    out.add((size,) + tail)
        memo[key] = frozenset(out)
        return memo[key]

    dims_sets = tails(0, np.zeros((0, N.dims[0] if K else 0), dtype=np.int64), []) if K else frozenset({()})
    result = set()
    for dims in dims_sets:
        by_degree = {N.top - k: v for k, v in enumerate(dims)}
        result.add(tuple(by_degree.get(origin - i, 0) for i in range(length)))
    logger.debug("Module with HF %s has %d submodule Hilbert functions", N.dims, len(result))
    return frozenset(result)


# --------------------------------------------------------------------------- #
#                          HILBERT-FUNCTION CONTAINMENT                       #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class ContainmentReport:
    n: int
    d: int
    field: str
    kind: str
    holds: bool
    strict: bool
    left: FrozenSet[HilbertFunction]
    right: FrozenSet[HilbertFunction]
    counterexamples: Tuple[HilbertFunction, ...] = ()
    unattained: Tuple[HilbertFunction, ...] = ()


def verify_containment(n: int, d: int, p: int = 2, ambient: int = 2, cap: Optional[int] = None) -> ContainmentReport:
    """
    For ``n >= 2, d >= 2`` check ``HF(N_{n,d}) ⊆ HF(N_{n,d-1}) + HF(N_{n-1,d} over n variables)``
    and whether the containment is strict.

    For ``n = 1`` check the equality ``HF(N_{1,d}) = HF(E / (e_2..e_m))`` over an algebra on
    ``ambient`` variables.
    """
    fld = _resolve_field(get_field(f"GF({p})"), None)
    if n == 1 and d >= 1:
        if ambient < 1:
            raise InvalidInputError("Ambient algebra needs at least one variable")
        left = enumerate_submodule_hfs(tate_Nnd(1, d, fld, ambient), cap=cap)
        right = enumerate_submodule_hfs(quotient_by_variables(ambient, ambient - 1, fld), cap=cap)
        counter = tuple(sorted(left - right))
        missing = tuple(sorted(right - left))
        return ContainmentReport(n, d, fld.name, "equality", left == right, False, left, right, counter, missing)
    if n < 2 or d < 2:
        raise InvalidInputError(f"Containment needs n >= 2 and d >= 2 (or n = 1), got n={n}, d={d}")
    left = enumerate_submodule_hfs(tate_Nnd(n, d, fld), cap=cap)
    first = enumerate_submodule_hfs(tate_Nnd(n, d - 1, fld), cap=cap)
    second = enumerate_submodule_hfs(tate_Nnd(n - 1, d, fld, ambient=n), cap=cap)
    right = frozenset(tuple(a + b for a, b in zip(x, y)) for x in first for y in second)
    counter = tuple(sorted(left - right))
    missing = tuple(sorted(right - left))
    logger.info(
        "Containment for N(%d,%d) over %s: %d left, %d right, %d counterexamples",
        n, d, fld, len(left), len(right), len(counter),
    )
    return ContainmentReport(n, d, fld.name, "containment", not counter, bool(missing), left, right, counter, missing)
