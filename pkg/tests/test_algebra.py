# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from core.algebra import (
    QQ,
    PolynomialRing,
    PrimeField,
    SparseMatrix,
    determinant,
    get_field,
    monomials_of_degree,
)
from core.errors import FieldError, InvalidInputError, VariableCountMismatchError


def test_get_field_accepts_every_spelling():
    assert get_field("QQ") is QQ
    assert get_field(None) is QQ
    assert get_field("GF(5)") == PrimeField(5)
    assert get_field("7") == PrimeField(7)
    assert get_field(3) == PrimeField(3)
    with pytest.raises(FieldError):
        get_field("GF(4)")
    with pytest.raises(FieldError):
        get_field("RR")


def test_residue_arithmetic():
    F = PrimeField(5)
    assert F(3) + F(4) == F(2)
    assert F(2).inverse() == F(3)
    assert F(3) / F(4) == F(2)
    assert F("1/2") == F(3)
    assert F(-1) == F(4)
    assert F(2) ** 4 == F(1)
    with pytest.raises(FieldError):
        F("1 mod 3")


def test_scalar_formatting():
    assert QQ.format(Fraction(-1, 2)) == "-1/2"
    assert QQ.format(3) == "3/1"
    assert PrimeField(2).format(3) == "1 mod 2"
    assert PrimeField(5).parse("3 mod 5") == PrimeField(5)(3)


def test_monomials_are_grevlex_descending():
    assert monomials_of_degree(3, 2) == (
        (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2),
    )
    assert monomials_of_degree(2, 0) == ((0, 0),)
    assert monomials_of_degree(0, 1) == ()


def test_canonical_text_parses_back():
    R = PolynomialRing(2)
    x1, x2 = R.gens
    f = x1 ** 2 - x2
    assert f.to_str() == "1/1*x1^2 + -1/1*x2^1"
    assert R.parse(f.to_str()) == f
    assert R.parse("x1^2 - 3*x2*x1") == x1 ** 2 - 3 * x1 * x2
    assert R.parse("-x1 + 1/2*x2").to_str() == "-1/1*x1^1 + 1/2*x2^1"
    assert R.parse("0") == R.zero()


def test_parse_over_prime_field():
    R = PolynomialRing(2, PrimeField(2))
    x1, _ = R.gens
    assert R.parse("1 mod 2*x1^1") == x1
    assert str(x1) == "1 mod 2*x1^1"
    assert R.parse("3*x1") == x1
    with pytest.raises(FieldError):
        R.parse("1 mod 3*x1^1")


def test_parse_rejects_unknown_names():
    R = PolynomialRing(2)
    with pytest.raises(InvalidInputError):
        R.parse("x9")
    with pytest.raises(InvalidInputError):
        R.parse("x1 ** 2")


def test_named_variables_and_substitution():
    R = PolynomialRing(4, QQ, ("x", "y", "z", "w"))
    x, y, z, w = R.gens
    f = R.parse("x*z - y^2")
    assert f == x * z - y * y
    g = f.substitute([R.zero(), y, z, R.zero()])
    assert g == -(y ** 2)
    assert g.is_homogeneous() and g.degree == 2


def test_mixing_rings_fails():
    a = PolynomialRing(2).x(1)
    b = PolynomialRing(3).x(1)
    with pytest.raises(VariableCountMismatchError):
        a + b
    with pytest.raises(FieldError):
        a + PolynomialRing(2, PrimeField(3)).x(1)


def test_determinant_of_a_two_by_two_minor():
    R = PolynomialRing(3)
    x1, x2, x3 = R.gens
    M = SparseMatrix.from_rows([[x1, x2], [x2, x3]], R)
    assert determinant(M) == x1 * x3 - x2 ** 2


def test_sparse_matrix_product_and_transpose():
    A = SparseMatrix.from_rows([[1, 2], [0, 1]], QQ)
    B = SparseMatrix.from_rows([[1, 0], [3, 1]], QQ)
    assert (A @ B).to_rows() == [[7, 2], [3, 1]]
    assert A.T.to_rows() == [[1, 0], [2, 1]]
    assert A.nnz == 3
    assert (A - A).is_zero()
