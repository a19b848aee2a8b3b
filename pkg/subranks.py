# subranks.py
# -*- coding: utf-8 -*-
"""
Command line entry point.

    python subranks.py rs-check --m 4 --r 1,4,4,1,0
    python subranks.py en-filter --n 3 --d 2 --r 1,5,5,3

Every subcommand prints one JSON object on stdout; logs go to stderr and to
``<log_dir>/subranks.log``. Exit codes: 0 accepted/member/found, 1 rejected/non-member/
exhausted, 2 usage or input error, 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import asyncio
import importlib
import logging
import sys
from logging.handlers import RotatingFileHandler, TimedRotatingFileHandler
from pathlib import Path
from typing import Any, Awaitable, Callable, Dict, List, Optional, Sequence

from dotenv import load_dotenv

from commands.utils import write_json
from core.errors import InvalidInputError
from core.serialization import dumps
from utils.config import apply_config, load_config

# --------------------------------------------------------------------------- #
#                               CONSTANTS & PATHS                             #
# --------------------------------------------------------------------------- #

ROOT_PATH = Path(__file__).resolve().parent
COMMANDS_PACKAGE = "commands"

EXIT_ACCEPTED = 0
EXIT_REJECTED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

# --------------------------------------------------------------------------- #
#                                    LOGGING                                  #
# --------------------------------------------------------------------------- #

LOG_FORMAT = "%(asctime)s - %(levelname)s - [%(name)s] %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def _setup_logging(log_dir: Optional[Path] = None, level: str = "INFO") -> logging.Logger:
    logger = logging.getLogger("SubRanks")
    logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))

    # Avoid adding duplicate handlers when run() is called repeatedly
    if logger.handlers:
        return logger

    formatter = logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT)

    # Console handler (stdout carries the JSON payload)
    ch = logging.StreamHandler(sys.stderr)
    ch.setFormatter(formatter)
    logger.addHandler(ch)

    if log_dir is None:
        return logger

    try:
        log_dir.mkdir(parents=True, exist_ok=True)
    except OSError:
        logger.warning(f"Cannot create log directory {log_dir}; logging to stderr only.")
        return logger
    daily_log_path = log_dir / "subranks.log"

    try:
        th = TimedRotatingFileHandler(
            daily_log_path,
            when="midnight",
            backupCount=7,
            encoding="utf-8",
            utc=True,
        )
        th.setFormatter(formatter)
        logger.addHandler(th)
    except Exception:
        # Fallback: size-based rotation
        fh = RotatingFileHandler(
            daily_log_path,
            maxBytes=5 * 1024 * 1024,
            backupCount=3,
            encoding="utf-8",
        )
        fh.setFormatter(formatter)
        logger.addHandler(fh)

    return logger


load_dotenv()

# --------------------------------------------------------------------------- #
#                                 ARG PARSING                                 #
# --------------------------------------------------------------------------- #


class SubRanksArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of printing usage and exiting with status 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise InvalidInputError(f"{self.prog}: {message}")


Handler = Callable[["SubRanksApp", argparse.Namespace], Awaitable[Any]]

# --------------------------------------------------------------------------- #
#                                     APP                                     #
# --------------------------------------------------------------------------- #


class SubRanksApp:
    """Holds the configuration, the argument parser and the registered subcommands."""

    def __init__(self, config: Dict[str, Any], root_path: Path = ROOT_PATH):
        self.config = config
        self.root_path = root_path
        self.logger = logging.getLogger("SubRanks")
        self.handlers: Dict[str, Handler] = {}
        self.error_handler: Optional[Callable[..., int]] = None
        self.common = SubRanksArgumentParser(add_help=False)
        self.common.add_argument("--field", default=None, help="QQ, GF(p) or a prime p")
        self.common.add_argument("--json-out", dest="json_out", default=None, help="also write the payload here")
        self.common.add_argument("--seed", type=int, default=None, help="reserved; every command is deterministic")
        self.parser = SubRanksArgumentParser(prog="subranks", description="Rank sequences of subcomplexes.")
        self.parser.add_argument("--config", default=None, help="path of a JSON configuration file")
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="COMMAND")
        self.subparsers.required = True

    def add_command(self, name: str, handler: Handler, help: str = "") -> argparse.ArgumentParser:
        if name in self.handlers:
            raise ValueError(f"Subcommand '{name}' registered twice")
        self.handlers[name] = handler
        return self.subparsers.add_parser(name, help=help, description=help, parents=[self.common])

    # ----------------------------- COMMAND LOADING --------------------------- #

    def load_commands(self) -> None:
        """Discover and load command modules from the 'commands' directory."""
        command_dir = self.root_path / COMMANDS_PACKAGE
        loaded: List[str] = []
        failed: List[str] = []

        if not command_dir.exists():
            self.logger.warning(f"Command directory '{command_dir}' does not exist. Nothing to run.")
            return

        for item in sorted(command_dir.iterdir()):
            if item.is_file() and item.suffix == ".py" and not item.name.startswith("_"):
                module_name = f"{COMMANDS_PACKAGE}.{item.stem}"
                try:
                    module = importlib.import_module(module_name)
                    setup = getattr(module, "setup", None)
                    if setup is None:
                        continue
                    setup(self)
                    loaded.append(module_name)
                except Exception:
                    failed.append(module_name)
                    self.logger.exception(f"Failed to load command module: {module_name}")

        self.logger.debug(f"Loaded {len(loaded)} command modules.")
        if failed:
            self.logger.warning(f"Failed to load {len(failed)} command modules: {failed}")

    # -------------------------------- DISPATCH ------------------------------- #

    async def dispatch(self, argv: Sequence[str]) -> int:
        args: Optional[argparse.Namespace] = None
        try:
            apply_config(self.config)
            args = self.parser.parse_args(list(argv))
            result = await self.handlers[args.command](self, args)
            if getattr(args, "json_out", None):
                await write_json(args.json_out, result.payload)
            print(dumps(result.payload))
            return result.exit_code
        except SystemExit as e:
            # --help and --version
            return int(e.code or 0)
        except Exception as error:
            if self.error_handler is None:
                raise
            return self.error_handler(self, error, argv, getattr(args, "command", None))


async def _build_app(argv: Sequence[str]) -> SubRanksApp:
    config_path = None
    if "--config" in argv:
        i = list(argv).index("--config")
        config_path = argv[i + 1] if i + 1 < len(argv) else None
    config = await load_config(config_path)
    log_dir = Path(config["logging"]["dir"]) if config["logging"].get("dir") else None
    _setup_logging(log_dir, config["logging"]["level"])
    app = SubRanksApp(config)
    app.load_commands()
    return app


async def run_async(argv: Sequence[str]) -> int:
    app = await _build_app(argv)
    return await app.dispatch(argv)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns the exit code instead of exiting."""
    argv = list(sys.argv[1:] if argv is None else argv)
    return asyncio.run(run_async(argv))


# --------------------------------------------------------------------------- #
#                              MAIN EXECUTION BLOCK                           #
# --------------------------------------------------------------------------- #


def main() -> None:
    try:
        code = run()
    except KeyboardInterrupt:
        logging.getLogger("SubRanks").info("Stopped via KeyboardInterrupt.")
        code = 130
    sys.exit(code)


if __name__ == "__main__":
    main()
