# -*- coding: utf-8 -*-
"""
Configuration for the command line front end.

Defaults live in :func:`get_default_config`; ``config.json`` at the repository root (or any
path given with ``--config``) is merged over them, and ``SUBRANKS_*`` environment variables
(optionally from a ``.env`` file) win over both.
"""
from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import aiofiles

from core import exterior, linalg, oracle, ranks
from core.algebra import get_field

logger = logging.getLogger("SubRanks.config")

DEFAULT_CONFIG_PATH = Path("config.json")

ENV_OVERRIDES = {
    "SUBRANKS_FIELD": ("field",),
    "SUBRANKS_ORACLE_FIELD": ("oracle", "field"),
    "SUBRANKS_ORACLE_BUDGET": ("oracle", "budget"),
    "SUBRANKS_LOG_LEVEL": ("logging", "level"),
    "SUBRANKS_LOG_DIR": ("logging", "dir"),
}


def get_default_config() -> Dict[str, Any]:
    """
    Return a fresh default configuration.

    Always returns a NEW dict (no shared references between callers).
    """
    return {
        "field": "QQ",
        "oracle": {
            "field": "GF(2)",
            "budget": 200_000,
            "hf_cap": 12,
            "workers": 1,
        },
        "ranks": {
            "enumerate_cap": 6,
            "sumset_node_cap": 2_000_000,
        },
        "exterior": {"colon_cap": 6},
        "linalg": {"dense_threshold": 200},
        "logging": {"level": "INFO", "dir": "data/logs"},
    }


def _recursive_update(d: Dict[str, Any], u: Dict[str, Any]) -> Dict[str, Any]:
    """Recursively update dictionary d with values from u."""
    for k, v in u.items():
        if isinstance(v, dict) and isinstance(d.get(k), dict):
            d[k] = _recursive_update(d[k], v)
        else:
            d[k] = v
    return d


def _coerce(current: Any, raw: str) -> Any:
    if isinstance(current, bool):
        return raw.strip().lower() in {"1", "true", "yes", "on"}
    if isinstance(current, int):
        return int(raw.replace("_", ""))
    return raw


def apply_env_overrides(config: Dict[str, Any], environ: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    env = os.environ if environ is None else environ
    for var, path in ENV_OVERRIDES.items():
        raw = env.get(var)
        if raw is None or raw == "":
            continue
        level = config
        for key in path[:-1]:
            level = level.setdefault(key, {})
        try:
            level[path[-1]] = _coerce(level.get(path[-1]), raw)
        except ValueError:
            logger.warning(f"Ignoring {var}={raw!r}: not a valid value for {'.'.join(path)}.")
    return config


async def load_config(path: Union[str, Path, None] = None, environ: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    """Defaults, then the JSON file, then environment overrides."""
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    config = get_default_config()
    try:
        if not config_path.exists():
            raise FileNotFoundError
        async with aiofiles.open(config_path, "r", encoding="utf-8") as f:
            data = json.loads(await f.read())
        if not isinstance(data, dict):
            raise json.JSONDecodeError("top level must be an object", "", 0)
        _recursive_update(config, data)
        logger.debug(f"Configuration loaded from {config_path}.")
    except FileNotFoundError:
        logger.debug(f"{config_path} not found. Using defaults.")
    except json.JSONDecodeError:
        logger.warning(f"{config_path} is invalid JSON. Using defaults.")
    except Exception as e:
        logger.warning(f"Unexpected error reading {config_path}: {e}. Using defaults.")
    return apply_env_overrides(config, environ)


async def save_config(config: Dict[str, Any], path: Union[str, Path, None] = None) -> None:
    """Atomic write through a temporary sibling file."""
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    temp_path = config_path.with_suffix(f"{config_path.suffix}.tmp")
    async with aiofiles.open(temp_path, "w", encoding="utf-8") as f:
        await f.write(json.dumps(config, indent=4, ensure_ascii=False))
    os.replace(temp_path, config_path)


def apply_config(config: Dict[str, Any]) -> None:
    """Push the numeric limits into the library modules and validate both field names."""
    get_field(config["field"])
    get_field(config["oracle"]["field"])
    linalg.set_dense_threshold(int(config["linalg"]["dense_threshold"]))
    exterior.set_colon_cap(int(config["exterior"]["colon_cap"]))
    ranks.set_caps(
        enumerate_cap=int(config["ranks"]["enumerate_cap"]),
        sumset_node_cap=int(config["ranks"]["sumset_node_cap"]),
    )
    oracle.set_limits(budget=int(config["oracle"]["budget"]), hf_cap=int(config["oracle"]["hf_cap"]))
