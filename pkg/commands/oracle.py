# -*- coding: utf-8 -*-
from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

from core.algebra import QQ, PrimeField
from core.errors import FieldError
from core.oracle import enumerate_submodule_hfs, subcomplex_search, verify_containment
from core.serialization import containment_to_json, report_to_json

from .utils import (
    CommandResult,
    add_complex_source,
    add_module_source,
    parse_rank_sequence,
    resolve_complex,
    resolve_field,
    resolve_module,
)

if TYPE_CHECKING:
    from subranks import SubRanksApp


def _search_prime(app: "SubRanksApp", args: argparse.Namespace) -> int:
    fld = resolve_field(app, args, oracle=True)
    if not isinstance(fld, PrimeField):
        raise FieldError(f"The oracle searches over GF(p), not {fld}")
    return fld.p


async def oracle_sub_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    p = _search_prime(app, args)
    G = await resolve_complex(args, QQ, keep_file_field=True)
    workers = args.workers if args.workers is not None else int(app.config["oracle"]["workers"])
    report = subcomplex_search(
        G,
        parse_rank_sequence(args.r),
        p=p,
        budget=args.budget,
        workers=max(1, workers),
        prune=not args.no_prune,
    )
    return CommandResult(0 if report.found else 1, report_to_json(report))


async def oracle_hf_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    p = _search_prime(app, args)
    N = await resolve_module(args, PrimeField(p))
    origin = N.top if args.origin is None else args.origin
    length = args.length if args.length is not None else max(N.n + 1, origin - N.bottom + 1)
    hfs = enumerate_submodule_hfs(N, p=p, cap=args.cap, origin=origin, length=length)
    payload = {
        "field": f"GF({p})",
        "origin": origin,
        "module_hilbert_function": list(N.hilbert_function(origin, length)),
        "count": len(hfs),
        "hilbert_functions": sorted(list(h) for h in hfs),
    }
    return CommandResult(0, payload)


async def containment_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    p = _search_prime(app, args)
    report = verify_containment(args.n, args.d, p=p, ambient=args.ambient, cap=args.cap)
    return CommandResult(0 if report.holds else 1, containment_to_json(report))


def setup(app: "SubRanksApp") -> None:
    p = app.add_command("oracle-sub", oracle_sub_command, help="exhaustive subcomplex search over GF(p)")
    add_complex_source(p)
    p.add_argument("--r", required=True, help="rank sequence, index 0 first")
    p.add_argument("--budget", type=int, default=None, help="largest candidate count to accept")
    p.add_argument("--workers", type=int, default=None, help="worker processes for the search")
    p.add_argument("--no-prune", dest="no_prune", action="store_true", help="test every tuple of subspaces")

    p = app.add_command("oracle-hf", oracle_hf_command, help="Hilbert functions of all submodules over GF(p)")
    add_module_source(p)
    p.add_argument("--origin", type=int, default=None, help="degree reported as h_0 (default: top degree)")
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--cap", type=int, default=None, help="largest total dimension to enumerate")

    p = app.add_command("containment", containment_command, help="Hilbert-function containment for N_{n,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ambient", type=int, default=2)
    p.add_argument("--cap", type=int, default=None)
