# -*- coding: utf-8 -*-
from math import comb

import pytest

from core.algebra import QQ, PolynomialRing, PrimeField, SparseMatrix
from core.complexes import (
    FreeModule,
    GradedFreeComplex,
    eagon_northcott,
    generic_matrix,
    induced_subcomplex,
    is_subcomplex,
    koszul,
    koszul_general,
    koszul_subcomplex,
    linear_strand_Lnd,
    matrix_Mnd,
    push_forward_subcomplex,
    specialize,
    twisted_cubic_matrix,
    verify_complex,
)
from core.errors import DimensionMismatchError, InvalidInputError, NonHomogeneousError
from core.ranks import enumerate_koszul_rs


def _rank_twist(C):
    return [(t.rank, t.twist) for t in C.terms]


def test_koszul_three_first_differential():
    C = koszul(3)
    x1, x2, x3 = C.ring.gens
    assert C.diffs[0].to_rows() == [[x1, x2, x3]]
    assert _rank_twist(C) == [(1, 0), (3, -1), (3, -2), (1, -3)]


def test_koszul_three_higher_differentials():
    C = koszul(3)
    x1, x2, x3 = C.ring.gens
    z = C.ring.zero()
    assert C.diffs[1].to_rows() == [[-x2, -x3, z], [x1, z, -x3], [z, x1, x2]]
    assert C.diffs[2].to_rows() == [[x3], [-x2], [x1]]


@pytest.mark.parametrize("n", range(0, 7))
def test_koszul_is_a_complex(n):
    C = koszul(n)
    assert verify_complex(C)
    assert C.ranks == tuple(comb(n, i) for i in range(n + 1))
    assert C.rank_sequence() == C.ranks


def test_koszul_of_forms_carries_their_degrees():
    R = PolynomialRing(2)
    x1, x2 = R.gens
    C = koszul_general([x1 ** 2, x2 ** 3], R)
    assert C.terms[1].twists == (-2, -3)
    assert C.terms[2].twists == (-5,)
    assert verify_complex(C)
    with pytest.raises(NonHomogeneousError):
        koszul_general([x1 + x2 ** 2], R)


def test_eagon_northcott_of_M32():
    A = matrix_Mnd(3, 2)
    x1, x2, x3 = A.ring.gens
    z = A.ring.zero()
    assert A.to_rows() == [[x1, x2, x3, z], [z, x1, x2, x3]]
    C = eagon_northcott(A)
    assert _rank_twist(C) == [(1, 0), (6, -2), (8, -3), (3, -4)]
    assert verify_complex(C)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 7) for d in range(1, 8 - n)])
def test_eagon_northcott_census_of_Mnd(n, d):
    C = eagon_northcott(matrix_Mnd(n, d))
    expected = [(1, 0)] + [(comb(d + k - 1, k) * comb(n + d - 1, d + k), -(d + k)) for k in range(n)]
    assert _rank_twist(C) == expected


@pytest.mark.parametrize("n,d,ranks", [(3, 2, (6, 8, 3)), (4, 3, (20, 45, 36, 10)), (2, 2, (3, 2))])
def test_linear_strand_ranks(n, d, ranks):
    L = linear_strand_Lnd(n, d)
    assert L.ranks == ranks
    assert [t.twist for t in L.terms] == [-k for k in range(len(ranks))]
    assert verify_complex(L)


@pytest.mark.parametrize("p,q", [(1, 3), (2, 3), (2, 4), (3, 4), (3, 5)])
def test_generic_eagon_northcott_is_a_complex(p, q):
    C = eagon_northcott(generic_matrix(p, q))
    assert verify_complex(C)
    assert C.ranks[1] == comb(q, p)


def test_eagon_northcott_rejects_wide_matrices():
    with pytest.raises(InvalidInputError):
        eagon_northcott(generic_matrix(3, 2))


def test_twisted_cubic_minors_and_specialization():
    Fp = eagon_northcott(twisted_cubic_matrix())
    R = Fp.ring
    x, y, z, w = R.gens
    assert Fp.diffs[0].to_rows() == [[R.parse("x*z - y^2"), R.parse("x*w - y*z"), R.parse("y*w - z^2")]]
    assert Fp.diffs[1].column(0) == [z, -y, x]
    F = specialize(Fp, [R.zero(), y, z, R.zero()])
    assert F.diffs[0].to_rows() == [[-(y ** 2), -(y * z), -(z ** 2)]]
    assert F.diffs[1].column(0) == [z, -y, R.zero()]
    assert _rank_twist(F) == _rank_twist(Fp)
    assert verify_complex(F)


def test_subcomplex_of_the_specialization_is_not_one_of_the_generic_complex():
    Fp = eagon_northcott(twisted_cubic_matrix())
    R = Fp.ring
    F = specialize(Fp, [R.zero(), R.x(2), R.x(3), R.zero()])
    bases = [
        SparseMatrix(1, 1, QQ, {(0, 0): 1}),
        SparseMatrix(3, 2, QQ, {(0, 0): 1, (1, 1): 1}),
        SparseMatrix(2, 1, QQ, {(0, 0): 1}),
    ]
    G, phi = induced_subcomplex(F, bases)
    assert G.rank_sequence() == (1, 2, 1)
    assert is_subcomplex(G, F, phi)
    assert not is_subcomplex(G, Fp, phi)
    with pytest.raises(InvalidInputError):
        induced_subcomplex(Fp, bases)


def test_specialize_with_mixed_degrees_recomputes_twists():
    C = koszul(2)
    R = C.ring
    x1, x2 = R.gens
    S = specialize(C, [x1 ** 2, x2 ** 3])
    assert S.terms[1].twists == (-2, -3)
    assert S.terms[2].twists == (-5,)
    assert verify_complex(S)


def test_change_field_reduces_coefficients():
    C = koszul(2).change_field(PrimeField(2))
    assert C.field == PrimeField(2)
    assert verify_complex(C)


def test_complex_shape_is_checked():
    R = PolynomialRing(1)
    with pytest.raises(DimensionMismatchError):
        GradedFreeComplex(R, (FreeModule((0,)), FreeModule((-1,))), (SparseMatrix(2, 1, R),))


def test_rank_sequence_reads_from_the_lowest_term():
    C = koszul(2).shifted(-1)
    assert C.origin == -1
    assert C.rank_sequence() == (1, 2, 1)
    assert C.rank_sequence(4) == (1, 2, 1, 0)
    D = koszul(2).shifted(2)
    assert D.origin == 0
    assert D.rank_sequence() == (0, 0, 1, 2, 1)


REGULAR_SEQUENCES = [
    lambda R: [R.x(1) ** 2, R.x(2) ** 2],
    lambda R: [R.x(1) ** 2, R.x(2) ** 3],
    lambda R: [R.x(1) * R.x(2), R.x(1) ** 2 + R.x(2) ** 2],
    lambda R: [R.x(1) ** 2, R.x(2) ** 2, R.x(3) ** 2],
]


@pytest.mark.parametrize("make_forms", REGULAR_SEQUENCES)
def test_koszul_witnesses_push_forward_along_regular_sequences(make_forms):
    m = len(make_forms(PolynomialRing(3)))
    R = PolynomialRing(m)
    forms = make_forms(R)
    for r in enumerate_koszul_rs(m):
        F, phi, G = koszul_subcomplex(r, m)
        assert is_subcomplex(F, G, phi)
        Fs, Gs, phi_s = push_forward_subcomplex(F, G, phi, forms)
        assert verify_complex(Gs)
        assert is_subcomplex(Fs, Gs, phi_s), r
        assert Fs.rank_sequence(m + 1) == r


def test_koszul_subcomplex_rejects_impossible_sequences():
    with pytest.raises(InvalidInputError):
        koszul_subcomplex((1, 2, 2, 0), 3)
