# -*- coding: utf-8 -*-
"""Argument parsing and file helpers shared by the command modules."""
from __future__ import annotations

import argparse
import json
import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

import aiofiles

from core.algebra import Field, PolynomialRing, SparseMatrix, SparsePoly, get_field
from core.bgg import tate_Nnd
from core.complexes import (
    GradedFreeComplex,
    eagon_northcott,
    generic_matrix,
    koszul,
    linear_strand_Lnd,
    matrix_Mnd,
    specialize,
    twisted_cubic_matrix,
)
from core.errors import InvalidInputError
from core.exterior import (
    ExteriorAlgebra,
    ExteriorElement,
    GradedExtModule,
    element_vector,
    free_module,
    quotient_by_variables,
    submodule_generated,
)
from core.ranks import RankSequence, normalize_rank_sequence
from core.serialization import complex_from_json, dumps, module_from_json

if TYPE_CHECKING:
    from subranks import SubRanksApp


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: Dict[str, Any]


# --------------------------------------------------------------------------- #
#                                SCALAR OPTIONS                               #
# --------------------------------------------------------------------------- #


def parse_int_list(text: str, what: str = "list") -> Tuple[int, ...]:
    parts = [p.strip() for p in str(text).strip().strip("()[]").split(",")]
    if parts == [""]:
        return ()
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidInputError(f"Malformed {what} '{text}': expected comma-separated integers") from None


def parse_rank_sequence(text: str) -> RankSequence:
    """``"1,5,5,3"`` (index 0 first) -> ``(1, 5, 5, 3)``."""
    return normalize_rank_sequence(parse_int_list(text, "rank sequence"))


def parse_pair(text: str, what: str) -> Tuple[int, int]:
    values = parse_int_list(text, what)
    if len(values) != 2:
        raise InvalidInputError(f"{what} needs exactly two integers, got '{text}'")
    return values[0], values[1]


def resolve_field(app: "SubRanksApp", args: argparse.Namespace, oracle: bool = False) -> Field:
    """``--field``, else the configured default (the oracle has its own default)."""
    if getattr(args, "field", None):
        return get_field(args.field)
    if oracle:
        return get_field(app.config["oracle"]["field"])
    return get_field(app.config["field"])


# --------------------------------------------------------------------------- #
#                                 FILE HELPERS                                #
# --------------------------------------------------------------------------- #


async def load_json(path: str) -> Any:
    try:
        async with aiofiles.open(path, "r", encoding="utf-8") as f:
            return json.loads(await f.read())
    except FileNotFoundError:
        raise InvalidInputError(f"No such file: {path}") from None
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Malformed JSON in {path}: {e.msg} (line {e.lineno})") from None


async def write_json(path: str, payload: Any) -> None:
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    temp_path = target.with_suffix(f"{target.suffix}.tmp")
    async with aiofiles.open(temp_path, "w", encoding="utf-8") as f:
        await f.write(dumps(payload) + "\n")
    os.replace(temp_path, target)


# --------------------------------------------------------------------------- #
#                             POLYNOMIAL ARGUMENTS                            #
# --------------------------------------------------------------------------- #


def parse_variables(text: Optional[str], n: Optional[int]) -> Tuple[str, ...]:
    if text:
        names = tuple(v.strip() for v in text.split(",") if v.strip())
        if n is not None and len(names) != n:
            raise InvalidInputError(f"--vars names {len(names)} variables but --n is {n}")
        return names
    if n is None:
        raise InvalidInputError("Give the variables with --vars or their number with --n")
    return ()


def parse_forms(text: str, ring: PolynomialRing) -> List[SparsePoly]:
    return [ring.parse(f) for f in text.split(",") if f.strip()]


def parse_matrix(text: str, ring: PolynomialRing) -> SparseMatrix:
    """Rows separated by ``;``, entries by ``,``: ``"x,y,z;y,z,w"``."""
    rows = [[ring.parse(e) for e in row.split(",")] for row in text.split(";") if row.strip()]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise InvalidInputError(f"Matrix '{text}' has rows of different lengths")
    return SparseMatrix.from_rows(rows, ring)


def parse_substitution(text: str, ring: PolynomialRing) -> List[SparsePoly]:
    """``"x=0,w=0"``: unnamed variables map to themselves."""
    images = list(ring.gens)
    for item in text.split(","):
        if not item.strip():
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in ring.names:
            raise InvalidInputError(f"Bad substitution '{item}': expected name=polynomial over {ring.names}")
        images[ring.names.index(name)] = ring.parse(value)
    return images


_EXT_TERM = re.compile(r"^\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?((?:e\d+\s*\*?\s*)*)$")


def parse_exterior_element(text: str, algebra: ExteriorAlgebra) -> ExteriorElement:
    """``"e1"``, ``"e2*e3"``, ``"e1*e2 - 2*e3*e4"``; ``1`` is the unit."""
    out = algebra.zero()
    for chunk in re.split(r"(?=[+-])", text.replace(" ", "")):
        if not chunk:
            continue
        sign = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        m = _EXT_TERM.match(body)
        if not body or not m:
            raise InvalidInputError(f"Cannot parse exterior term '{chunk}'")
        coeff = algebra.field.parse(m.group(1)) if m.group(1) else algebra.field.one()
        indices = [int(v) for v in re.findall(r"e(\d+)", m.group(2) or "")]
        if not indices and not m.group(1):
            raise InvalidInputError(f"Cannot parse exterior term '{chunk}'")
        if any(not 1 <= i <= algebra.n for i in indices):
            raise InvalidInputError(f"Term '{chunk}' uses a variable outside e1..e{algebra.n}")
        out = out + algebra.monomial(*indices, coefficient=coeff * sign)
    return out


# --------------------------------------------------------------------------- #
#                               COMPLEX SOURCES                               #
# --------------------------------------------------------------------------- #


def add_complex_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--complex", help="JSON file in the complex format")
    group.add_argument("--koszul", type=int, metavar="M", help="the Koszul complex on M variables")
    group.add_argument("--mnd", metavar="N,D", help="the Eagon-Northcott complex of M_{N,D}")
    group.add_argument("--strand", metavar="N,D", help="the linear strand L_{N,D}")
    group.add_argument("--twisted-cubic", dest="twisted_cubic", action="store_true",
                       help="the Eagon-Northcott complex of [[x,y,z],[y,z,w]]")
    group.add_argument("--generic", metavar="P,Q", help="the Eagon-Northcott complex of a generic PxQ matrix")
    parser.add_argument("--specialize", default=None, metavar="SUBST",
                        help="substitute before searching, e.g. 'x=0,w=0'")


async def resolve_complex(args: argparse.Namespace, field: Field, keep_file_field: bool = False) -> GradedFreeComplex:
    """Build the complex named by the source options; files keep their own field when asked."""
    if args.complex:
        C = complex_from_json(await load_json(args.complex), field=None if keep_file_field else field)
    elif args.koszul is not None:
        C = koszul(args.koszul, field)
    elif args.mnd:
        C = eagon_northcott(matrix_Mnd(*parse_pair(args.mnd, "--mnd"), field))
    elif args.strand:
        C = linear_strand_Lnd(*parse_pair(args.strand, "--strand"), field)
    elif args.twisted_cubic:
        C = eagon_northcott(twisted_cubic_matrix(field))
    else:
        C = eagon_northcott(generic_matrix(*parse_pair(args.generic, "--generic"), field))
    if args.specialize:
        C = specialize(C, parse_substitution(args.specialize, C.ring), C.ring)
    return C


# --------------------------------------------------------------------------- #
#                                MODULE SOURCES                               #
# --------------------------------------------------------------------------- #


def add_module_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--module", help="JSON file in the module format")
    group.add_argument("--ideal", metavar="GENS", help="ideal of E generated by e.g. 'e1,e2*e3' (needs --n)")
    group.add_argument("--quotient", metavar="N,M", help="E / (e_{M+1}..e_N) on N variables")
    group.add_argument("--nnd", metavar="N,D", help="the module N_{N,D} (see --ambient)")
    parser.add_argument("--n", type=int, default=None, help="number of exterior variables for --ideal")
    parser.add_argument("--ambient", type=int, default=None, help="variables of the ambient algebra for --nnd")


async def resolve_module(args: argparse.Namespace, field: Field, keep_file_field: bool = False) -> GradedExtModule:
    if args.module:
        return module_from_json(await load_json(args.module), field=None if keep_file_field else field)
    if args.ideal:
        if args.n is None:
            raise InvalidInputError("--ideal needs --n")
        E = free_module(args.n, field)
        algebra = ExteriorAlgebra(args.n, field)
        gens = [parse_exterior_element(g, algebra) for g in args.ideal.split(",") if g.strip()]
        return submodule_generated(E, [element_vector(E, g) for g in gens])
    if args.quotient:
        n, m = parse_pair(args.quotient, "--quotient")
        return quotient_by_variables(n, m, field)
    n, d = parse_pair(args.nnd, "--nnd")
    return tate_Nnd(n, d, field, args.ambient)
