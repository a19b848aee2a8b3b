# -*- coding: utf-8 -*-
import asyncio
import json

import pytest

from core import exterior, oracle, ranks
from core.errors import FieldError
from utils.config import apply_config, apply_env_overrides, get_default_config, load_config, save_config


@pytest.fixture(autouse=True)
def restore_limits():
    yield
    apply_config(get_default_config())


def test_defaults_are_fresh():
    a = get_default_config()
    a["oracle"]["budget"] = 1
    assert get_default_config()["oracle"]["budget"] == 200_000
    assert a["field"] == "QQ"
    assert get_default_config()["oracle"]["field"] == "GF(2)"


def test_file_values_merge_over_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"oracle": {"budget": 50}, "field": "GF(3)"}), encoding="utf-8")
    config = asyncio.run(load_config(path, environ={}))
    assert config["oracle"]["budget"] == 50
    assert config["oracle"]["hf_cap"] == 12
    assert config["field"] == "GF(3)"


def test_missing_or_broken_files_fall_back_to_defaults(tmp_path):
    assert asyncio.run(load_config(tmp_path / "nope.json", environ={})) == get_default_config()
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert asyncio.run(load_config(broken, environ={})) == get_default_config()
    listy = tmp_path / "list.json"
    listy.write_text("[1, 2]", encoding="utf-8")
    assert asyncio.run(load_config(listy, environ={})) == get_default_config()


def test_environment_wins():
    env = {
        "SUBRANKS_FIELD": "GF(5)",
        "SUBRANKS_ORACLE_BUDGET": "1_000",
        "SUBRANKS_LOG_LEVEL": "DEBUG",
        "SUBRANKS_ORACLE_FIELD": "",
    }
    config = apply_env_overrides(get_default_config(), env)
    assert config["field"] == "GF(5)"
    assert config["oracle"]["budget"] == 1000
    assert config["logging"]["level"] == "DEBUG"
    assert config["oracle"]["field"] == "GF(2)"


def test_invalid_integers_are_ignored():
    config = apply_env_overrides(get_default_config(), {"SUBRANKS_ORACLE_BUDGET": "lots"})
    assert config["oracle"]["budget"] == 200_000


def test_save_then_load(tmp_path):
    path = tmp_path / "saved.json"
    config = get_default_config()
    config["ranks"]["enumerate_cap"] = 4
    asyncio.run(save_config(config, path))
    assert not (tmp_path / "saved.json.tmp").exists()
    assert asyncio.run(load_config(path, environ={})) == config


def test_apply_config_pushes_limits():
    config = get_default_config()
    config["oracle"]["budget"] = 77
    config["ranks"]["enumerate_cap"] = 3
    config["exterior"]["colon_cap"] = 2
    apply_config(config)
    assert oracle.DEFAULT_BUDGET == 77
    assert ranks.ENUMERATE_CAP == 3
    assert exterior.COLON_CAP == 2


def test_apply_config_checks_fields():
    config = get_default_config()
    config["oracle"]["field"] = "GF(4)"
    with pytest.raises(FieldError):
        apply_config(config)
