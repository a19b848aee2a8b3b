# -*- coding: utf-8 -*-

# --- Standard Library Imports ---
import datetime
import logging
import os
import traceback
import uuid
from pathlib import Path
from typing import Union

ERROR_LOGGER_NAME = "SubRanks.errors"


# --- Custom Formatter Class ---
class ErrorReportFormatter(logging.Formatter):
    """
    A custom logging formatter to create detailed, multi-line error reports.

    Reads the optional ``extra`` fields ``error_code``, ``command``, ``argv``, ``severity``,
    ``note`` and ``possible_fix`` from the record.
    """

    def format(self, record: logging.LogRecord) -> str:
        """Formats the log record into a detailed error report."""

        error_code = getattr(record, "error_code", uuid.uuid4().hex[:8])
        command = getattr(record, "command", "N/A")
        argv = getattr(record, "argv", [])
        folder, file_name = os.path.split(record.pathname)
        severity = getattr(record, "severity", "High")
        note = getattr(record, "note", "An unexpected error occurred.")
        possible_fix = getattr(record, "possible_fix", "Review the error details and traceback.")

        if record.exc_info:
            error_type, error_value, tb = record.exc_info
            error_text = "".join(traceback.format_exception(error_type, error_value, tb))
        else:
            error_text = record.getMessage()

        error_time = datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")

        return f"""
──────────────── ERROR REPORT ────────────────
error code   : [{error_code}]
error        : {error_text.strip()}
command      : [{command}]
argv         : [{' '.join(str(a) for a in argv)}]
file         : [{file_name}]
folder       : [{folder}]
severity     : [{severity}]
note         : [{note}]
possible fix : [{possible_fix}]
error time   : [{error_time}]
──────────────────────────────────────────────
"""


def setup_error_logger(log_dir: Union[str, Path] = "data/logs") -> logging.Logger:
    """Logger writing error reports to ``errors.log`` and ``errors.txt`` under ``log_dir``."""
    logger = logging.getLogger(ERROR_LOGGER_NAME)
    logger.setLevel(logging.ERROR)
    # Reports go to the files only; stdout carries the JSON error object.
    logger.propagate = False

    target = Path(log_dir)
    wanted = {str((target / name).resolve()) for name in ("errors.log", "errors.txt")}
    present = {getattr(h, "baseFilename", None) for h in logger.handlers}
    if wanted <= present:
        return logger

    for h in list(logger.handlers):
        logger.removeHandler(h)
        h.close()

    formatter = ErrorReportFormatter()
    try:
        target.mkdir(parents=True, exist_ok=True)
        for name in ("errors.log", "errors.txt"):
            handler = logging.FileHandler(target / name, mode="a", encoding="utf-8")
            handler.setFormatter(formatter)
            logger.addHandler(handler)
    except OSError:
        logger.addHandler(logging.NullHandler())

    return logger
