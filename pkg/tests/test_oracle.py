# -*- coding: utf-8 -*-
import itertools
from math import comb

import pytest

from core.algebra import PolynomialRing, PrimeField
from core.bgg import bgg_L, tate_Nnd
from core.complexes import (
    eagon_northcott,
    koszul,
    koszul_general,
    specialize,
    twisted_cubic_matrix,
    verify_complex,
)
from core.errors import BudgetExceededError, FieldError, InvalidInputError, SizeCapExceededError
from core.exterior import free_module, zero_module
from core.oracle import (
    enumerate_submodule_hfs,
    enumerate_subspaces,
    gaussian_binomial,
    subcomplex_search,
    verify_containment,
)
from core.ranks import enumerate_koszul_rs

GF2 = PrimeField(2)

N22_HFS = {(0, 0, 0), (0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 0), (1, 3, 0), (2, 3, 0)}


# --------------------------------------------------------------------------- #
#                                   SUBSPACES                                 #
# --------------------------------------------------------------------------- #


@pytest.mark.parametrize("n,k,q,expected", [(3, 1, 2, 7), (3, 2, 2, 7), (4, 2, 2, 35), (3, 2, 3, 13), (2, 1, 5, 6), (2, 3, 2, 0)])
def test_gaussian_binomial(n, k, q, expected):
    assert gaussian_binomial(n, k, q) == expected


@pytest.mark.parametrize("dim,k,p", [(3, 1, 2), (3, 2, 2), (4, 2, 2), (3, 2, 3), (2, 0, 5)])
def test_each_subspace_is_produced_once(dim, k, p):
    seen = set()
    for A in enumerate_subspaces(dim, k, p):
        assert A.shape == (k, dim)
        seen.add(A.tobytes())
    assert len(seen) == gaussian_binomial(dim, k, p)


# --------------------------------------------------------------------------- #
#                                SUBCOMPLEX SEARCH                            #
# --------------------------------------------------------------------------- #


def test_koszul_sequence_rejected_by_the_macaulay_test_has_no_witness():
    report = subcomplex_search(koszul(3), (1, 2, 2, 0), p=2)
    assert report.verdict == "exhausted"
    assert report.candidate_space == 49
    assert report.witness is None


def test_exhaustive_mode_examines_every_tuple():
    report = subcomplex_search(koszul(3), (1, 2, 2, 0), p=2, prune=False)
    assert report.verdict == "exhausted"
    assert report.examined == report.candidate_space == 49


def test_parallel_search_gives_the_same_answer():
    serial = subcomplex_search(koszul(3), (1, 2, 2, 0), p=2)
    parallel = subcomplex_search(koszul(3), (1, 2, 2, 0), p=2, workers=2)
    assert parallel.verdict == serial.verdict
    assert parallel.examined == serial.examined


@pytest.mark.parametrize("m", [1, 2])
def test_oracle_finds_exactly_the_koszul_sequences(m):
    G = koszul(m)
    box = itertools.product(*(range(comb(m, i) + 1) for i in range(m + 1)))
    found = {r for r in box if subcomplex_search(G, r, p=2).found}
    assert found == enumerate_koszul_rs(m)


@pytest.mark.slow
def test_oracle_finds_exactly_the_koszul_sequences_on_three_variables():
    G = koszul(3)
    box = itertools.product(*(range(comb(3, i) + 1) for i in range(4)))
    found = {r for r in box if subcomplex_search(G, r, p=2).found}
    assert found == enumerate_koszul_rs(3)


def test_witnesses_are_validated_subcomplexes():
    report = subcomplex_search(koszul(3), (1, 3, 1, 0), p=3)
    assert report.found and report.validated
    assert report.subcomplex.rank_sequence(4) == (1, 3, 1, 0)
    assert verify_complex(report.subcomplex)
    assert [B.shape for B in report.witness.bases] == [(1, 1), (3, 3), (3, 1), (1, 0)]


def test_trivial_targets():
    empty = subcomplex_search(koszul(2), (0, 0, 0), p=2)
    assert empty.found and empty.examined == 0
    impossible = subcomplex_search(koszul(2), (2,), p=2)
    assert impossible.verdict == "exhausted" and impossible.candidate_space == 0


def _specialized_twisted_cubic():
    C = eagon_northcott(twisted_cubic_matrix())
    R = C.ring
    images = list(R.gens)
    images[0] = R.zero()
    images[3] = R.zero()
    return C, specialize(C, images, R)


def test_specialized_twisted_cubic_has_the_subcomplex():
    _, Cs = _specialized_twisted_cubic()
    report = subcomplex_search(Cs, (1, 2, 1), p=2)
    assert report.found and report.validated
    assert report.field == "GF(2)"
    assert report.candidate_space == 21
    assert report.subcomplex.rank_sequence() == (1, 2, 1)


@pytest.mark.parametrize("p,space", [(2, 21), (3, 52), (5, 186)])
def test_twisted_cubic_has_no_such_subcomplex(p, space):
    C, _ = _specialized_twisted_cubic()
    report = subcomplex_search(C, (1, 2, 1), p=p)
    assert report.verdict == "exhausted"
    assert report.candidate_space == space


def test_search_limits_and_fields():
    with pytest.raises(BudgetExceededError):
        subcomplex_search(koszul(4), (1, 2, 3, 2), p=2, budget=5)
    with pytest.raises(FieldError):
        subcomplex_search(koszul(3, PrimeField(3)), (1, 1), p=2)
    with pytest.raises(FieldError):
        subcomplex_search(koszul(3), (1, 1))
    with pytest.raises(InvalidInputError):
        subcomplex_search(koszul(2).shifted(-1), (1,), p=2)


def test_search_needs_one_twist_per_position():
    R = PolynomialRing(2)
    G = koszul_general([R.x(1) ** 2, R.x(2) ** 3], R)
    with pytest.raises(InvalidInputError):
        subcomplex_search(G, (1, 1, 0), p=2)


# --------------------------------------------------------------------------- #
#                          SUBMODULE HILBERT FUNCTIONS                        #
# --------------------------------------------------------------------------- #


def test_hilbert_functions_of_N22():
    hfs = enumerate_submodule_hfs(tate_Nnd(2, 2, GF2))
    assert hfs == N22_HFS
    assert (1, 1, 0) not in hfs


def test_hilbert_functions_of_small_modules():
    assert enumerate_submodule_hfs(zero_module(2, GF2)) == {(0, 0, 0)}
    free = enumerate_submodule_hfs(free_module(2, GF2))
    assert (1, 2, 1) in free and (0, 0, 1) in free and (1, 0, 0) not in free
    with pytest.raises(SizeCapExceededError):
        enumerate_submodule_hfs(free_module(4, GF2))
    with pytest.raises(FieldError):
        enumerate_submodule_hfs(free_module(2), p=2)


@pytest.mark.parametrize("p", [2, 3])
def test_containment_for_N22(p):
    report = verify_containment(2, 2, p)
    assert report.kind == "containment"
    assert report.holds and report.strict
    assert report.unattained == ((1, 1, 0),)
    assert report.counterexamples == ()
    assert report.right == N22_HFS | {(1, 1, 0)}


def test_equality_for_a_single_variable():
    report = verify_containment(1, 2)
    assert report.kind == "equality"
    assert report.holds


def test_containment_rejects_small_indices():
    with pytest.raises(InvalidInputError):
        verify_containment(2, 1)


# --------------------------------------------------------------------------- #
#                  BOTH ORACLES AGREE THROUGH THE BGG FUNCTOR                  #
# --------------------------------------------------------------------------- #


def test_submodules_and_subcomplexes_agree():
    N = tate_Nnd(2, 2, GF2)
    G = bgg_L(N.twist(-1))
    for h in N22_HFS:
        assert subcomplex_search(G, (h[1], h[0]), p=2).found, h
    assert subcomplex_search(G, (1, 1), p=2).verdict == "exhausted"

