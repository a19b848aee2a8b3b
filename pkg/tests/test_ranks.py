# -*- coding: utf-8 -*-
import itertools
from math import comb

import pytest

from core.complexes import eagon_northcott, linear_strand_Lnd, matrix_Mnd
from core.errors import InvalidInputError, SizeCapExceededError
from core.ranks import (
    WeightedSumsetSpec,
    en_rs_filter,
    en_rs_filter_pq,
    en_weights,
    en_weights_pq,
    enumerate_koszul_rs,
    hf_from_rank_sequence,
    is_koszul_rs,
    macaulay_expansion,
    macaulay_shift,
    rank_sequence_from_hf,
    sumset_membership,
)

# ----- #
# Macaulay representations
# ----- #


def test_macaulay_expansion_and_shift():
    assert macaulay_expansion(5, 2) == (3, 2)
    assert macaulay_shift(5, 2) == 2
    assert macaulay_shift(2, 1) == 1
    assert macaulay_shift(4, 2) == 1
    assert macaulay_shift(0, 3) == 0


@pytest.mark.parametrize("i", range(1, 7))
def test_macaulay_expansion_sums_back_and_decreases(i):
    for a in range(1, 501):
        xs = macaulay_expansion(a, i)
        assert sum(comb(x, i - j) for j, x in enumerate(xs)) == a, (a, i)
        assert all(x > y for x, y in zip(xs, xs[1:])), (a, i)
        assert xs[-1] >= i - len(xs) + 1, (a, i)


@pytest.mark.parametrize("i", range(1, 7))
def test_macaulay_shift_is_monotone(i):
    shifts = [macaulay_shift(a, i) for a in range(0, 201)]
    assert all(x <= y for x, y in zip(shifts, shifts[1:])), i


def test_macaulay_expansion_rejects_zero():
    with pytest.raises(InvalidInputError):
        macaulay_expansion(0, 2)
    with pytest.raises(InvalidInputError):
        macaulay_shift(-1, 2)


# ----- #
# Koszul rank sequences
# ----- #


@pytest.mark.parametrize(
    "r,m,expected",
    [
        ((1, 4, 4, 1, 0), 4, True),
        ((1, 2, 2, 0), 3, False),
        ((1, 1, 0, 0, 0, 0), 2, True),
        ((1, 0, 0, 1), 2, False),
        ((0, 1), 2, False),
        ((0, 0, 0), 2, True),
        ((1, 3, 3, 1), 3, True),
        ((1, 4), 3, False),
        ((2,), 0, False),
    ],
)
def test_is_koszul_rs(r, m, expected):
    assert is_koszul_rs(r, m) is expected


def test_enumeration_for_two_variables():
    assert enumerate_koszul_rs(2) == {(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 2, 1)}
    assert enumerate_koszul_rs(1) == {(0, 0), (1, 0), (1, 1)}
    assert enumerate_koszul_rs(0) == {(0,), (1,)}


@pytest.mark.parametrize("m", range(0, 5))
def test_enumeration_agrees_with_the_test(m):
    box = itertools.product(*(range(comb(m, i) + 1) for i in range(m + 1)))
    assert {r for r in box if is_koszul_rs(r, m)} == enumerate_koszul_rs(m)


def test_enumeration_cap():
    with pytest.raises(SizeCapExceededError):
        enumerate_koszul_rs(3, cap=2)


def test_negative_entries_are_input_errors():
    with pytest.raises(InvalidInputError):
        is_koszul_rs((1, -1), 2)


# ----- #
# Weights and sumsets
# ----- #


def test_eagon_northcott_weights():
    assert en_weights(4, 3).parts == ((10, 3), (6, 2), (3, 1), (1, 0))
    assert en_weights(3, 2) == WeightedSumsetSpec.parse("3x2,2x1,1x0") == en_weights_pq(2, 4)
    assert en_weights(3, 2).capacity() == (6, 8, 3)
    assert str(en_weights(3, 2)) == "3*RS(K_2) + 2*RS(K_1) + 1*RS(K_0)"


@pytest.mark.parametrize("p,q", [(p, q) for q in range(1, 9) for p in range(1, q + 1)])
def test_generic_weights_match_the_Mnd_weights(p, q):
    assert en_weights_pq(p, q) == en_weights(q - p + 1, p)


@pytest.mark.parametrize("text", ["2x1,3x2", "3x2,1x2", "abc", "0x1"])
def test_malformed_sumset_specs(text):
    with pytest.raises(InvalidInputError):
        WeightedSumsetSpec.parse(text)


def test_sumset_membership():
    spec = WeightedSumsetSpec.parse("3x2,2x1,1x0")
    miss = sumset_membership((5, 5, 3), spec)
    assert not miss.member and miss.verdict == "non-member"
    hit = sumset_membership((3, 6, 3), spec)
    assert hit.member
    assert hit.total() == (3, 6, 3)
    assert hit.decomposition[0] == ((1, 2, 1),) * 3
    assert not sumset_membership((0, 0, 0, 1), spec).member


def test_sumset_node_cap():
    with pytest.raises(SizeCapExceededError):
        sumset_membership((3, 6, 3), WeightedSumsetSpec.parse("3x2,2x1,1x0"), node_cap=1)


# ----- #
# Eagon-Northcott filter
# ----- #


def test_filter_rules_out_the_motivating_sequence():
    v = en_rs_filter((1, 5, 5, 3), 3, 2)
    assert v.verdict == "ruled-out"
    assert v.reason == "sumset non-member"
    assert en_rs_filter_pq((1, 5, 5, 3), 2, 4).verdict == "ruled-out"


def test_filter_on_the_strand():
    assert not en_rs_filter((10, 16, 20, 8), 4, 3, strand=True).admissible
    assert en_rs_filter((3, 6, 3), 3, 2, strand=True).admissible


def test_filter_position_zero():
    assert not en_rs_filter((2, 1, 0, 0), 3, 2).admissible
    assert not en_rs_filter((0, 1, 0, 0), 3, 2).admissible
    assert en_rs_filter((0, 0, 0, 0), 3, 2).admissible
    assert en_rs_filter((2, 1, 0, 0), 3, 2).reason == "position 0 has rank 1; got 2"


def test_filter_needs_position_zero_when_the_strand_is_hit():
    assert sumset_membership((3, 0, 0), en_weights(3, 2)).member
    v = en_rs_filter((0, 3, 0, 0), 3, 2)
    assert v.verdict == "ruled-out"
    assert v.certificate is None
    assert "position 0" in v.reason


def test_filter_uses_the_koszul_test_for_linear_forms():
    v = en_rs_filter((1, 1, 0), 2, 1)
    assert v.admissible and v.reason == "exact Koszul test"
    assert not en_rs_filter((1, 2, 2, 0), 3, 1).admissible


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 5) for d in range(2, 6) if n + d <= 6])
def test_whole_complexes_pass_their_own_filter(n, d):
    assert en_rs_filter(linear_strand_Lnd(n, d).ranks, n, d, strand=True).admissible
    assert en_rs_filter(eagon_northcott(matrix_Mnd(n, d)).rank_sequence(), n, d).admissible


# ----- #
# Hilbert functions
# ----- #


def test_rank_sequences_and_hilbert_functions():
    assert rank_sequence_from_hf((0, 1, 4, 4, 1), 4) == (1, 4, 4, 1, 0)
    assert hf_from_rank_sequence((1, 4, 4, 1, 0), 4) == (0, 1, 4, 4, 1)
    assert rank_sequence_from_hf((1, 2, 0), 1) == (2, 1)
    with pytest.raises(InvalidInputError):
        rank_sequence_from_hf((1, 2, 1), 1)
