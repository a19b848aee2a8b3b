# -*- coding: utf-8 -*-
from __future__ import annotations

import uuid
from typing import TYPE_CHECKING, Optional, Sequence

from core.errors import (
    BudgetExceededError,
    DegreeIncompatibleError,
    DimensionMismatchError,
    FieldError,
    InvalidInputError,
    NonHomogeneousError,
    SizeCapExceededError,
    SubRanksError,
    VariableCountMismatchError,
)
from core.serialization import dumps
from utils.custom_logger import setup_error_logger

if TYPE_CHECKING:
    from subranks import SubRanksApp

EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


def exit_code_for(error: BaseException) -> int:
    """Budget and size caps are inconclusive (3); everything else is an input problem (2)."""
    if isinstance(error, SizeCapExceededError):
        return EXIT_BUDGET
    return EXIT_INPUT_ERROR


def generate_advice(error: BaseException) -> str:
    """A one-line hint for the person running the command."""
    if isinstance(error, BudgetExceededError):
        return "Raise --budget (or oracle.budget) or pick a smaller complex or field."
    if isinstance(error, SizeCapExceededError):
        return "The instance is over a configured cap; raise the cap in config.json if you can wait."
    if isinstance(error, FieldError):
        return "Fields are written QQ, GF(p) or a bare prime p."
    if isinstance(error, VariableCountMismatchError):
        return "Check that every polynomial and matrix uses the same variables."
    if isinstance(error, DimensionMismatchError):
        return "Check the shapes of the matrices against the ranks of the terms."
    if isinstance(error, NonHomogeneousError):
        return "Entries and forms must be homogeneous."
    if isinstance(error, DegreeIncompatibleError):
        return "The grading cannot be kept; check twists and substitution degrees."
    if isinstance(error, InvalidInputError):
        return "Check the arguments; run with --help for the expected formats."
    return "Unexpected failure; see the error report in the log directory."


def handle_command_error(app: "SubRanksApp", error: BaseException, argv: Sequence[str],
                         command: Optional[str] = None) -> int:
    """Write an error report, print a JSON error object and return the exit code."""
    code = exit_code_for(error)
    advice = generate_advice(error)
    error_code = uuid.uuid4().hex[:8]
    expected = isinstance(error, SubRanksError)

    report_logger = setup_error_logger(app.config["logging"].get("dir") or "data/logs")
    report_logger.error(
        str(error),
        exc_info=None if expected else (type(error), error, error.__traceback__),
        extra={
            "error_code": error_code,
            "command": command or "N/A",
            "argv": list(argv),
            "severity": "Low" if expected else "High",
            "note": type(error).__name__,
            "possible_fix": advice,
        },
    )
    log = app.logger.warning if expected else app.logger.error
    log(f"[{error_code}] {type(error).__name__}: {error}")

    print(dumps({"error": type(error).__name__, "message": str(error), "advice": advice}))
    return code


def setup(app: "SubRanksApp") -> None:
    app.error_handler = handle_command_error
