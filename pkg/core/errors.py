# -*- coding: utf-8 -*-
"""Exception hierarchy shared by the core modules and the command line."""
from __future__ import annotations


class SubRanksError(Exception):
    """Base class for every error raised on purpose by this project."""


class InvalidInputError(SubRanksError, ValueError):
    """Malformed or out-of-range input (bad JSON, bad rank sequence, p > q, ...)."""


class FieldError(InvalidInputError):
    """Unknown field specification or an operation the field cannot perform."""


class DimensionMismatchError(InvalidInputError):
    """Matrix / vector / term shapes do not line up."""


class VariableCountMismatchError(InvalidInputError):
    """Two polynomials (or a polynomial and a ring) disagree on the number of variables."""


class NonHomogeneousError(InvalidInputError):
    """A polynomial, exterior element or presentation entry is not homogeneous."""


class DegreeIncompatibleError(InvalidInputError):
    """A substitution or twist assignment breaks the grading of a complex."""


class SizeCapExceededError(SubRanksError):
    """Exact computation refused because the instance exceeds a configured cap."""

    def __init__(self, message: str, *, size: int = 0, cap: int = 0):
        super().__init__(message)
        self.size = size
        self.cap = cap


class BudgetExceededError(SizeCapExceededError):
    """Exhaustive oracle search would examine more candidates than the budget allows."""
