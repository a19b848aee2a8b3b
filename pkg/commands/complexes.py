# -*- coding: utf-8 -*-
"""Constructors: koszul, koszul-gen, en, strand, verify."""
from __future__ import annotations

import argparse
from typing import TYPE_CHECKING, Any, Dict

from core.algebra import PolynomialRing
from core.complexes import (
    GradedFreeComplex,
    eagon_northcott,
    generic_matrix,
    koszul,
    koszul_general,
    linear_strand_Lnd,
    matrix_Mnd,
    twisted_cubic_matrix,
    verify_complex,
)
from core.errors import InvalidInputError
from core.serialization import complex_to_json

from .utils import (
    CommandResult,
    add_complex_source,
    load_json,
    parse_forms,
    parse_matrix,
    parse_pair,
    parse_variables,
    resolve_complex,
    resolve_field,
)

if TYPE_CHECKING:
    from subranks import SubRanksApp


def complex_payload(C: GradedFreeComplex) -> Dict[str, Any]:
    """The complex itself plus its rank sequence read from ``C.origin``."""
    payload = complex_to_json(C)
    payload["ranks"] = list(C.ranks)
    payload["rank_sequence"] = list(C.rank_sequence())
    payload["rank_sequence_origin"] = C.origin
    return payload


async def koszul_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    C = koszul(args.n, resolve_field(app, args))
    return CommandResult(0, complex_payload(C))


async def koszul_gen_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    names = parse_variables(args.vars, args.n)
    ring = PolynomialRing(len(names) if names else args.n, resolve_field(app, args), names)
    forms = parse_forms(args.forms, ring)
    return CommandResult(0, complex_payload(koszul_general(forms, ring)))


async def en_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    field = resolve_field(app, args)
    if args.mnd:
        A = matrix_Mnd(*parse_pair(args.mnd, "--mnd"), field)
    elif args.generic:
        A = generic_matrix(*parse_pair(args.generic, "--generic"), field)
    elif args.twisted_cubic:
        A = twisted_cubic_matrix(field)
    elif args.matrix_file:
        payload = await load_json(args.matrix_file)
        if not isinstance(payload, dict) or "rows" not in payload:
            raise InvalidInputError("Matrix file needs 'rows' and 'variables' (or 'n')")
        names = tuple(payload.get("variables") or ())
        ring = PolynomialRing(len(names) if names else int(payload.get("n", 0)), field, names)
        A = parse_matrix(";".join(",".join(str(e) for e in row) for row in payload["rows"]), ring)
    else:
        names = parse_variables(args.vars, args.n)
        ring = PolynomialRing(len(names) if names else args.n, field, names)
        A = parse_matrix(args.matrix, ring)
    return CommandResult(0, complex_payload(eagon_northcott(A)))


async def strand_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    C = linear_strand_Lnd(args.n, args.d, resolve_field(app, args))
    return CommandResult(0, complex_payload(C))


async def verify_command(app: "SubRanksApp", args: argparse.Namespace) -> CommandResult:
    C = await resolve_complex(args, resolve_field(app, args), keep_file_field=not args.field)
    ok = verify_complex(C)
    app.logger.debug(f"verify: {C.label or 'complex'} with ranks {C.ranks} -> {ok}")
    payload = {
        "verified": ok,
        "n": C.n,
        "field": C.field.name,
        "start": C.start,
        "ranks": list(C.ranks),
    }
    return CommandResult(0 if ok else 1, payload)


def setup(app: "SubRanksApp") -> None:
    p = app.add_command("koszul", koszul_command, help="Koszul complex on the variables")
    p.add_argument("--n", type=int, required=True)

    p = app.add_command("koszul-gen", koszul_gen_command, help="Koszul complex of homogeneous forms")
    p.add_argument("--forms", required=True, help="comma-separated forms, e.g. 'x1^2,x2^3'")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--vars", default=None, help="comma-separated variable names")

    p = app.add_command("en", en_command, help="Eagon-Northcott complex of a matrix of forms")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", help="rows separated by ';', entries by ','")
    group.add_argument("--matrix-file", dest="matrix_file", help="JSON file with 'rows' and 'variables'")
    group.add_argument("--mnd", metavar="N,D", help="the banded matrix M_{N,D}")
    group.add_argument("--generic", metavar="P,Q", help="a generic PxQ matrix")
    group.add_argument("--twisted-cubic", dest="twisted_cubic", action="store_true")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--vars", default=None, help="comma-separated variable names")

    p = app.add_command("strand", strand_command, help="linear strand L_{n,d}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = app.add_command("verify", verify_command, help="check homogeneity and d o d = 0")
    add_complex_source(p)
