# -*- coding: utf-8 -*-
"""
Exact-arithmetic library behind the ``subranks`` command line.

Layers, bottom up: ``algebra`` (fields, polynomials, sparse matrices) and ``linalg``;
``exterior`` (the exterior algebra and its graded modules); ``complexes`` (Koszul and
Eagon-Northcott complexes); ``bgg`` (the BGG functors and Tate pieces); ``ranks`` (integer
decision procedures); ``oracle`` (brute-force searches over GF(p)); ``serialization``.
"""
from .algebra import QQ, PolynomialRing, PrimeField, SparseMatrix, SparsePoly, get_field
from .bgg import bgg_L, bgg_R, cartan_differential, tate_Nnd, tate_window
from .complexes import (
    GradedFreeComplex,
    eagon_northcott,
    is_subcomplex,
    koszul,
    koszul_general,
    linear_strand_Lnd,
    matrix_Mnd,
    specialize,
    verify_complex,
)
from .errors import (
    BudgetExceededError,
    InvalidInputError,
    SizeCapExceededError,
    SubRanksError,
)
from .exterior import ExteriorAlgebra, GradedExtModule, hilbert_function, module_from_cokernel
from .oracle import enumerate_submodule_hfs, subcomplex_search, verify_containment
from .ranks import en_rs_filter, en_weights, enumerate_koszul_rs, is_koszul_rs, macaulay_shift, sumset_membership

__all__ = [
    "QQ",
    "PolynomialRing",
    "PrimeField",
    "SparseMatrix",
    "SparsePoly",
    "get_field",
    "bgg_L",
    "bgg_R",
    "cartan_differential",
    "tate_Nnd",
    "tate_window",
    "GradedFreeComplex",
    "eagon_northcott",
    "is_subcomplex",
    "koszul",
    "koszul_general",
    "linear_strand_Lnd",
    "matrix_Mnd",
    "specialize",
    "verify_complex",
    "BudgetExceededError",
    "InvalidInputError",
    "SizeCapExceededError",
    "SubRanksError",
    "ExteriorAlgebra",
    "GradedExtModule",
    "hilbert_function",
    "module_from_cokernel",
    "enumerate_submodule_hfs",
    "subcomplex_search",
    "verify_containment",
    "en_rs_filter",
    "en_weights",
    "enumerate_koszul_rs",
    "is_koszul_rs",
    "macaulay_shift",
    "sumset_membership",
]
