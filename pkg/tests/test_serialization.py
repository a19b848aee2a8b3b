# -*- coding: utf-8 -*-
import json

import pytest

from core.algebra import PolynomialRing, PrimeField
from core.bgg import cartan_differential, tate_Nnd
from core.complexes import eagon_northcott, koszul, koszul_general, twisted_cubic_matrix
from core.errors import DimensionMismatchError, InvalidInputError
from core.algebra import SparseMatrix
from core.exterior import ExteriorAlgebra
from core.serialization import (
    complex_from_json,
    complex_to_json,
    dumps,
    exterior_matrix_from_json,
    exterior_matrix_to_json,
    module_from_json,
    module_to_json,
)


def test_koszul_payload():
    payload = complex_to_json(koszul(2))
    assert payload["terms"] == [{"rank": 1, "twist": 0}, {"rank": 2, "twist": -1}, {"rank": 1, "twist": -2}]
    assert payload["diffs"][0] == [["1/1*x1^1", "1/1*x2^1"]]
    assert payload["diffs"][1] == [["-1/1*x2^1"], ["1/1*x1^1"]]
    assert payload["variables"] == ["x1", "x2"]


@pytest.mark.parametrize(
    "build",
    [
        lambda: koszul(3),
        lambda: koszul(2, PrimeField(3)),
        lambda: eagon_northcott(twisted_cubic_matrix()),
        lambda: koszul_general([PolynomialRing(2).x(1) ** 2, PolynomialRing(2).x(2) ** 3]),
    ],
)
def test_complexes_survive_the_trip(build):
    C = build()
    assert complex_from_json(json.loads(dumps(complex_to_json(C)))) == C


def test_mixed_twists_are_listed():
    payload = complex_to_json(koszul_general([PolynomialRing(2).x(1) ** 2, PolynomialRing(2).x(2) ** 3]))
    assert payload["terms"][1] == {"rank": 2, "twists": [-2, -3]}


def test_field_override_when_reading():
    payload = complex_to_json(koszul(2))
    assert complex_from_json(payload, field=PrimeField(2)).field == PrimeField(2)


def test_malformed_complexes():
    with pytest.raises(InvalidInputError):
        complex_from_json({"n": 1, "terms": [{"rank": 1, "twist": 0}]})
    with pytest.raises(InvalidInputError):
        complex_from_json({"n": 1, "terms": [{"rank": 1}], "diffs": []})
    with pytest.raises(DimensionMismatchError):
        complex_from_json({"n": 1, "terms": [{"rank": 1, "twist": 0}, {"rank": 1, "twist": -1}], "diffs": []})
    with pytest.raises(DimensionMismatchError):
        complex_from_json({
            "n": 1,
            "terms": [{"rank": 1, "twist": 0}, {"rank": 1, "twist": -1}],
            "diffs": [[["x1", "x1"]]],
        })


def test_modules_survive_the_trip():
    N = tate_Nnd(2, 2)
    payload = module_to_json(N)
    assert payload["hilbert_function"] == [2, 3, 0]
    assert module_from_json(json.loads(dumps(payload))) == N


def test_module_payload_needs_one_action_list_per_variable():
    payload = module_to_json(tate_Nnd(2, 2))
    payload["action"] = payload["action"][:1]
    with pytest.raises(DimensionMismatchError):
        module_from_json(payload)


def test_exterior_matrices():
    D = cartan_differential(1, 3)
    payload = exterior_matrix_to_json(D)
    assert payload["entries"] == [[[["1/1", [1]]], [["1/1", [2]]], [["1/1", [3]]]]]
    assert exterior_matrix_from_json(payload) == D
    A = ExteriorAlgebra(3)
    M = SparseMatrix(1, 2, A, {(0, 0): A.e(2) * A.e(1)})
    assert exterior_matrix_to_json(M)["entries"] == [[[["-1/1", [1, 2]]], []]]
    assert exterior_matrix_from_json(exterior_matrix_to_json(M)) == M


def test_dumps_is_deterministic():
    a = dumps({"b": [1, 2], "a": {"d": 1, "c": 2}})
    assert a == dumps({"a": {"c": 2, "d": 1}, "b": [1, 2]})
    assert a.splitlines()[1] == '  "a": {'
