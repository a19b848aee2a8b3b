# -*- coding: utf-8 -*-
"""Integer decision procedures: rs-check, rs-list, en-filter, sumset, weights, macaulay."""
from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

from core.errors import InvalidInputError
from core.ranks import (
    WeightedSumsetSpec,
    en_rs_filter,
    en_rs_filter_pq,
    en_weights,
    en_weights_pq,
    enumerate_koszul_rs,
    is_koszul_rs,
    macaulay_expansion,
    macaulay_shift,
    sumset_membership,
)
from core.serialization import certificate_to_json, spec_to_json, verdict_to_json

from .utils import CommandResult, parse_rank_sequence

if TYPE_CHECKING:
    from subranks import SubRanksApp


def _pair_choice(args: argparse.Namespace) -> str:
    """Either ``--n/--d`` or ``--p/--q``, never a mix."""
    nd = args.n is not None or args.d is not None
    pq = args.p is not None or args.q is not None
    if nd == pq:
        raise InvalidInputError("Give exactly one of --n/--d or --p/--q")
    if nd and (args.n is None or args.d is None):
        raise InvalidInputError("--n and --d go together")
    if pq and (args.p is None or args.q is None):
        raise InvalidInputError("--p and --q go together")
    return "nd" if nd else "pq"


async def rs_check_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    r = parse_rank_sequence(args.r)
    ok = is_koszul_rs(r, args.m)
    payload = {"m": args.m, "rank_sequence": list(r), "verdict": "accepted" if ok else "rejected"}
    return CommandResult(0 if ok else 1, payload)


async def rs_list_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    found = sorted(enumerate_koszul_rs(args.m), reverse=True)
    return CommandResult(0, {"m": args.m, "count": len(found), "rank_sequences": [list(s) for s in found]})


async def en_filter_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    r = parse_rank_sequence(args.r)
    if _pair_choice(args) == "nd":
        verdict = en_rs_filter(r, args.n, args.d, strand=args.strand)
        payload = {"n": args.n, "d": args.d}
    else:
        verdict = en_rs_filter_pq(r, args.p, args.q, strand=args.strand)
        payload = {"p": args.p, "q": args.q}
    payload.update(verdict_to_json(verdict))
    payload["rank_sequence"] = list(r)
    payload["strand"] = args.strand
    return CommandResult(0 if verdict.admissible else 1, payload)


async def sumset_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    spec = WeightedSumsetSpec.parse(args.spec)
    cert = sumset_membership(parse_rank_sequence(args.r), spec)
    return CommandResult(0 if cert.member else 1, certificate_to_json(cert))


async def weights_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    if _pair_choice(args) == "nd":
        spec = en_weights(args.n, args.d)
    else:
        spec = en_weights_pq(args.p, args.q)
    return CommandResult(0, spec_to_json(spec))


async def macaulay_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    if args.a < 0 or args.i < 1:
        raise InvalidInputError(f"Need a >= 0 and i >= 1, got a={args.a}, i={args.i}")
    payload = {
        "a": args.a,
        "i": args.i,
        "expansion": list(macaulay_expansion(args.a, args.i)) if args.a else [],
        "shift": macaulay_shift(args.a, args.i),
    }
    return CommandResult(0, payload)


def _add_pair_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)


def setup(app: "SubRanksApp") -> None:
    p = app.add_command("rs-check", rs_check_command, help="exact test for subcomplexes of a Koszul complex")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", required=True, help="rank sequence, index 0 first")

    p = app.add_command("rs-list", rs_list_command, help="every rank sequence of a Koszul subcomplex")
    p.add_argument("--m", type=int, required=True)

    p = app.add_command("en-filter", en_filter_command, help="weighted-sumset filter for Eagon-Northcott complexes")
    _add_pair_options(p)
    p.add_argument("--r", required=True, help="rank sequence, index 0 first")
    p.add_argument("--strand", action="store_true", help="r is a rank sequence of the linear strand")

    p = app.add_command("sumset", sumset_command, help="membership in a weighted Koszul sumset")
    p.add_argument("--spec", required=True, help="parts COPIESxSIZE, e.g. '3x2,2x1,1x0'")
    p.add_argument("--r", required=True)

    p = app.add_command("weights", weights_command, help="the weighted sumset of an Eagon-Northcott complex")
    _add_pair_options(p)

    p = app.add_command("macaulay", macaulay_command, help="Macaulay expansion of a at level i")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
