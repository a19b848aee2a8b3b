# -*- coding: utf-8 -*-
"""
Rank sequences: the exact Macaulay-type test for subcomplexes of a Koszul complex and the
weighted sumset filter for subcomplexes of Eagon-Northcott complexes.

Everything here is integer arithmetic; no field is involved.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import InvalidInputError, SizeCapExceededError

logger = logging.getLogger("SubRanks.ranks")

RankSequence = Tuple[int, ...]

ENUMERATE_CAP = 6
SUMSET_NODE_CAP = 2_000_000


def set_caps(enumerate_cap: Optional[int] = None, sumset_node_cap: Optional[int] = None) -> None:
    global ENUMERATE_CAP, SUMSET_NODE_CAP
    if enumerate_cap is not None:
        ENUMERATE_CAP = int(enumerate_cap)
    if sumset_node_cap is not None:
        SUMSET_NODE_CAP = int(sumset_node_cap)


def normalize_rank_sequence(r: Sequence[int]) -> RankSequence:
    out = []
    for v in r:
        if isinstance(v, bool) or int(v) != v or v < 0:
            raise InvalidInputError(f"Rank sequence entries must be non-negative integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


def pad(r: Sequence[int], length: int) -> RankSequence:
    return tuple(r) + (0,) * (length - len(r))


def rank_sequence_from_hf(h: Sequence[int], shift: int) -> RankSequence:
    """Ranks of ``L(N(-shift))`` for ``N`` with Hilbert function ``h``: ``r_j = h_{shift-j}``."""
    if any(h[i] for i in range(shift + 1, len(h))):
        raise InvalidInputError(f"Hilbert function {tuple(h)} has entries beyond index {shift}")
    return tuple(h[shift - j] if shift - j < len(h) else 0 for j in range(shift + 1))


def hf_from_rank_sequence(r: Sequence[int], shift: int, length: Optional[int] = None) -> Tuple[int, ...]:
    """Inverse of :func:`rank_sequence_from_hf`."""
    if length is None:
        length = shift + 1
    return tuple(r[shift - i] if 0 <= shift - i < len(r) else 0 for i in range(length))


# --------------------------------------------------------------------------- #
#                           MACAULAY REPRESENTATIONS                          #
# --------------------------------------------------------------------------- #


def macaulay_expansion(a: int, i: int) -> Tuple[int, ...]:
    """
    The ``i``-th Macaulay representation ``a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)``
    with ``a_i > a_{i-1} > ... > a_j >= j >= 1``, computed greedily.
    """
    if a < 1 or i < 1:
        raise InvalidInputError(f"Macaulay expansion needs a >= 1 and i >= 1, got a={a}, i={i}")
    out: List[int] = []
    rem, k = a, i
    while rem > 0:
        x = k
        while comb(x + 1, k) <= rem:
            x += 1
        out.append(x)
        rem -= comb(x, k)
        k -= 1
    assert sum(comb(x, i - j) for j, x in enumerate(out)) == a
    return tuple(out)


def macaulay_shift(a: int, i: int) -> int:
    """``a^(i) = sum C(a_k, k + 1)`` over the ``i``-th Macaulay representation; ``0^(i) = 0``."""
    if a < 0:
        raise InvalidInputError(f"Macaulay shift of a negative number {a}")
    if a == 0:
        return 0
    return sum(comb(x, i - j + 1) for j, x in enumerate(macaulay_expansion(a, i)))


# --------------------------------------------------------------------------- #
#                              KOSZUL RANK SEQUENCES                          #
# --------------------------------------------------------------------------- #


def is_koszul_rs(r: Sequence[int], m: int) -> bool:
    """
    Exact membership in the rank sequences of subcomplexes of the Koszul complex on ``m``
    variables: the zero sequence, or ``r_0 = 1``, ``r_1 <= m`` and ``r_{i+1} <= r_i^(i)``.
    """
    r = normalize_rank_sequence(r)
    if m < 0:
        raise InvalidInputError("Number of variables must be non-negative")
    if len(r) > m + 1:
        if any(r[m + 1:]):
            return False
        r = r[:m + 1]
    r = pad(r, m + 1)
    if not any(r):
        return True
    if r[0] != 1:
        return False
    if m >= 1 and r[1] > m:
        return False
    for i in range(1, m):
        if r[i + 1] > macaulay_shift(r[i], i):
            return False
    return True


def enumerate_koszul_rs(m: int, cap: Optional[int] = None) -> FrozenSet[RankSequence]:
    """Every sequence accepted by :func:`is_koszul_rs`, each of length ``m + 1``."""
    cap = ENUMERATE_CAP if cap is None else cap
    if m < 0:
        raise InvalidInputError("Number of variables must be non-negative")
    if m > cap:
        raise SizeCapExceededError(f"Enumeration capped at m <= {cap}", size=m, cap=cap)
    found = {(0,) * (m + 1)}
    if m == 0:
        found.add((1,))
        return frozenset(found)

    def extend(prefix: Tuple[int, ...]) -> None:
        i = len(prefix) - 1
        if i == m:
            found.add(prefix)
            return
        bound = m if i == 0 else macaulay_shift(prefix[i], i)
        for v in range(bound + 1):
            extend(prefix + (v,))

    extend((1,))
    return frozenset(found)


# --------------------------------------------------------------------------- #
#                               WEIGHTED SUMSETS                              #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class WeightedSumsetSpec:
    """``sum_j c_j * RS(K_{m_j})`` written as ``((c_1, m_1), (c_2, m_2), ...)``, sizes decreasing."""

    parts: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        sizes = [m for _, m in self.parts]
        for c, m in self.parts:
            if c < 1 or m < 0:
                raise InvalidInputError(f"Invalid sumset part {c} x RS(K_{m})")
        if sizes != sorted(set(sizes), reverse=True):
            raise InvalidInputError(f"Sumset sizes must be distinct and decreasing, got {sizes}")

    @property
    def length(self) -> int:
        return max((m for _, m in self.parts), default=-1) + 1

    def capacity(self) -> RankSequence:
        """Largest possible entry at each position."""
        return tuple(sum(c * comb(m, i) for c, m in self.parts) for i in range(self.length))

    def to_json(self) -> List[Dict[str, int]]:
        return [{"copies": c, "size": m} for c, m in self.parts]

    def __str__(self) -> str:
        return " + ".join(f"{c}*RS(K_{m})" for c, m in self.parts) or "0"

    @classmethod
    def parse(cls, text: str) -> "WeightedSumsetSpec":
        """Parse ``"3x2,2x1,1x0"`` (copies x size)."""
        parts = []
        for chunk in text.replace(" ", "").split(","):
            if not chunk:
                continue
            try:
                c, m = chunk.lower().split("x")
                parts.append((int(c), int(m)))
            except ValueError as e:
                raise InvalidInputError(f"Cannot parse sumset part {chunk!r}; expected COPIESxSIZE") from e
        return cls(tuple(parts))


def en_weights(n: int, d: int) -> WeightedSumsetSpec:
    """Weights for ``L_{n,d}``: parts ``(C(n-j+d-2, d-1), n-j-1)`` for ``j = 0..n-1``."""
    if n < 1 or d < 1:
        raise InvalidInputError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    return WeightedSumsetSpec(tuple((comb(n - j + d - 2, d - 1), n - j - 1) for j in range(n)))


def en_weights_pq(p: int, q: int) -> WeightedSumsetSpec:
    """Weights for the Eagon-Northcott complex of a ``p x q`` matrix: ``(C(q-j-1, p-1), q-p-j)``."""
    if p < 1 or p > q:
        raise InvalidInputError(f"Need 1 <= p <= q, got p={p}, q={q}")
    return WeightedSumsetSpec(tuple((comb(q - j - 1, p - 1), q - p - j) for j in range(q - p + 1)))


@dataclass(frozen=True)
class MembershipCertificate:
    """Result of a sumset search; ``decomposition[j]`` lists the sequences chosen for part ``j``."""

    member: bool
    spec: WeightedSumsetSpec
    target: RankSequence
    decomposition: Tuple[Tuple[RankSequence, ...], ...] = ()
    nodes: int = 0

    @property
    def verdict(self) -> str:
        return "member" if self.member else "non-member"

    def total(self) -> RankSequence:
        out = [0] * len(self.target)
        for part in self.decomposition:
            for seq in part:
                for i, v in enumerate(seq):
                    out[i] += v
        return tuple(out)


class _NodeBudget:
    __slots__ = ("used", "cap")

    def __init__(self, cap: int):
        self.used = 0
        self.cap = cap

    def tick(self) -> None:
        self.used += 1
        if self.used > self.cap:
            raise SizeCapExceededError(f"Sumset search exceeded {self.cap} nodes", size=self.used, cap=self.cap)


def sumset_membership(r: Sequence[int], spec: WeightedSumsetSpec, node_cap: Optional[int] = None) -> MembershipCertificate:
    """
    Decide ``r in sum_j c_j * RS(K_{m_j})`` by depth-first search.

    Parts are visited in decreasing ``m``; the copies of one part are chosen as a multiset
    (non-increasing option index), failing states are memoised and branches whose remaining
    capacity cannot cover the residual are cut.
    """
    node_cap = SUMSET_NODE_CAP if node_cap is None else node_cap
    r = normalize_rank_sequence(r)
    length = max(len(r), spec.length, 1)
    target = pad(r, length)
    if any(target[spec.length:]):
        return MembershipCertificate(False, spec, target)

    options = []
    for c, m in spec.parts:
        opts = sorted((pad(s, length) for s in enumerate_koszul_rs(m, cap=max(m, ENUMERATE_CAP))), reverse=True)
        options.append(opts)
    suffix = [tuple(0 for _ in range(length))]
    for c, m in reversed(spec.parts):
        prev = suffix[0]
        suffix.insert(0, tuple(prev[i] + c * comb(m, i) for i in range(length)))

    budget = _NodeBudget(node_cap)
    failed = set()

    def solve(pi: int, used: int, start: int, residual: RankSequence) -> Optional[List[Tuple[int, RankSequence]]]:
        budget.tick()
        if pi == len(spec.parts):
            return [] if not any(residual) else None
        c, m = spec.parts[pi]
        if used == c:
            return solve(pi + 1, 0, 0, residual)
        key = (pi, used, start, residual)
        if key in failed:
            return None
        room = tuple((c - used) * comb(m, i) + suffix[pi + 1][i] for i in range(length))
        if any(residual[i] > room[i] for i in range(length)):
            failed.add(key)
            return None
        opts = options[pi]
        for idx in range(start, len(opts)):
            seq = opts[idx]
            if any(seq[i] > residual[i] for i in range(length)):
                continue
            rest = solve(pi, used + 1, idx, tuple(residual[i] - seq[i] for i in range(length)))
            if rest is not None:
                return [(pi, seq)] + rest
        failed.add(key)
        return None

    path = solve(0, 0, 0, target)
    logger.debug("Sumset search for %s in %s explored %d nodes", target, spec, budget.used)
    if path is None:
        return MembershipCertificate(False, spec, target, (), budget.used)
    groups: List[List[RankSequence]] = [[] for _ in spec.parts]
    for pi, seq in path:
        groups[pi].append(seq[:spec.parts[pi][1] + 1])
    cert = MembershipCertificate(True, spec, target, tuple(tuple(g) for g in groups), budget.used)
    assert cert.total() == target
    return cert


# --------------------------------------------------------------------------- #
#                          EAGON-NORTHCOTT FILTER                             #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class FilterVerdict:
    admissible: bool
    reason: str
    certificate: Optional[MembershipCertificate] = None

    @property
    def verdict(self) -> str:
        return "possibly-admissible" if self.admissible else "ruled-out"


def _strand_filter(r: RankSequence, spec: WeightedSumsetSpec, strand: bool, node_cap: Optional[int]) -> FilterVerdict:
    if strand:
        tail = r
    else:
        if r and r[0] not in (0, 1):
            return FilterVerdict(False, f"position 0 has rank 1; got {r[0]}")
        if r and r[0] == 0 and any(r[1:]):
            return FilterVerdict(False, "a subcomplex meeting the strand must contain the image in position 0")
        tail = r[1:]
    if any(tail[spec.length:]):
        return FilterVerdict(False, f"the strand has only {spec.length} positions")
    cert = sumset_membership(tail[:spec.length], spec, node_cap)
    if cert.member:
        return FilterVerdict(True, "sumset member", cert)
    return FilterVerdict(False, "sumset non-member", cert)


def en_rs_filter(r: Sequence[int], n: int, d: int, strand: bool = False, node_cap: Optional[int] = None) -> FilterVerdict:
    """
    Necessary condition for ``r`` to be the rank sequence of a subcomplex of the
    Eagon-Northcott complex of ``M_{n,d}`` (or of its linear strand when ``strand`` is set).

    ``ruled-out`` is a proof of non-existence; ``possibly-admissible`` proves nothing.
    For ``d = 1`` and the full complex the exact Koszul test is used.
    """
    r = normalize_rank_sequence(r)
    if n < 1 or d < 1:
        raise InvalidInputError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    if d == 1 and not strand:
        ok = is_koszul_rs(r, n)
        return FilterVerdict(ok, "exact Koszul test" + ("" if ok else " fails"))
    return _strand_filter(r, en_weights(n, d), strand, node_cap)


def en_rs_filter_pq(r: Sequence[int], p: int, q: int, strand: bool = False, node_cap: Optional[int] = None) -> FilterVerdict:
    """The same filter for the Eagon-Northcott complex of a generic ``p x q`` matrix."""
    r = normalize_rank_sequence(r)
    return _strand_filter(r, en_weights_pq(p, q), strand, node_cap)
