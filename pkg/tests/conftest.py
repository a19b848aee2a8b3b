# -*- coding: utf-8 -*-
from __future__ import annotations

import json
import logging
from typing import Any

import pytest

import subranks


def assert_contains(actual: Any, expected: Any, path: str = "$") -> None:
    """``expected`` is a sub-document of ``actual``: dict keys may be omitted, lists may not."""
    if isinstance(expected, dict):
        assert isinstance(actual, dict), f"{path}: expected an object, got {actual!r}"
        for key, value in expected.items():
            assert key in actual, f"{path}: missing key {key!r}"
            assert_contains(actual[key], value, f"{path}.{key}")
    elif isinstance(expected, list):
        assert isinstance(actual, list), f"{path}: expected a list, got {actual!r}"
        assert len(actual) == len(expected), f"{path}: length {len(actual)} != {len(expected)}"
        for i, (a, e) in enumerate(zip(actual, expected)):
            assert_contains(a, e, f"{path}[{i}]")
    else:
        assert actual == expected, f"{path}: {actual!r} != {expected!r}"


@pytest.fixture
def run_cli(tmp_path, monkeypatch, capsys):
    """Run one subcommand in a scratch directory; returns ``(exit_code, payload, raw_stdout)``."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("SUBRANKS_LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.delenv("SUBRANKS_FIELD", raising=False)
    monkeypatch.delenv("SUBRANKS_ORACLE_FIELD", raising=False)

    def _run(*argv: Any):
        code = subranks.run([str(a) for a in argv])
        out = capsys.readouterr().out
        return code, json.loads(out), out

    yield _run

    for name in ("SubRanks", "SubRanks.errors"):
        logger = logging.getLogger(name)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()


@pytest.fixture
def contains():
    return assert_contains
