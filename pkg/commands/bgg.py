# -*- coding: utf-8 -*-
from __future__ import annotations

import argparse
from typing import TYPE_CHECKING

from core.bgg import bgg_L, bgg_R, polynomial_window, tate_Nnd, tate_window
from core.serialization import exterior_complex_to_json, module_to_json, tate_window_to_json

from .complexes import complex_payload
from .utils import CommandResult, add_module_source, parse_int_list, resolve_field, resolve_module

if TYPE_CHECKING:
    from subranks import SubRanksApp


async def bgg_l_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    N = await resolve_module(args, resolve_field(app, args), keep_file_field=not args.field)
    if args.twist:
        N = N.twist(args.twist)
    C = bgg_L(N)
    payload = complex_payload(C)
    payload["hilbert_function"] = list(N.hilbert_function(origin=N.top, length=len(N.dims)))
    payload["module_top"] = N.top
    return CommandResult(0, payload)


async def bgg_r_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    killed = parse_int_list(args.killed, "--killed") if args.killed else ()
    M = polynomial_window(args.n, args.lo, args.hi, resolve_field(app, args), killed)
    X = bgg_R(M)
    payload = exterior_complex_to_json(X)
    return CommandResult(0 if payload["composites_vanish"] else 1, payload)


async def cartan_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    s_hi = args.s if args.s_hi is None else args.s_hi
    W = tate_window(args.n, args.s, s_hi, resolve_field(app, args))
    payload = tate_window_to_json(W)
    payload["composites_vanish"] = W.composites_vanish()
    return CommandResult(0, payload)


async def tate_n_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    N = tate_Nnd(args.n, args.d, resolve_field(app, args), args.ambient)
    return CommandResult(0, module_to_json(N))


def setup(app: "SubRanksApp") -> None:
    p = app.add_command("bgg-l", bgg_l_command, help="the linear complex L(N) of an exterior module")
    add_module_source(p)
    p.add_argument("--twist", type=int, default=0, help="apply N(a) first")

    p = app.add_command("bgg-r", bgg_r_command, help="the exterior complex R(M) of a polynomial window")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("--killed", default=None, help="comma-separated variables set to zero")

    p = app.add_command("cartan", cartan_command, help="Cartan differentials of the Tate resolution")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--s-hi", dest="s_hi", type=int, default=None, help="last index of a window")

    p = app.add_command("tate-n", tate_n_command, help="the module N_{n,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ambient", type=int, default=None)
