# -*- coding: utf-8 -*-
"""
JSON payloads for complexes, modules, matrices and decision reports.

The formats are documented in ``docs/formats.md``. Polynomials are written in their canonical
text form, scalars as ``"num/den"`` or ``"k mod p"``, and exterior elements as lists of
``[coefficient, [indices]]`` pairs.
"""
from __future__ import annotations

import json
from typing import Any, Dict, List, Mapping, Optional, Sequence

from .algebra import Field, PolynomialRing, SparseMatrix, get_field
from .bgg import ExteriorComplex, TateWindow
from .complexes import FreeModule, GradedFreeComplex
from .errors import DimensionMismatchError, InvalidInputError
from .exterior import ExteriorAlgebra, ExteriorElement, GradedExtModule
from .oracle import ContainmentReport, SearchReport
from .ranks import FilterVerdict, MembershipCertificate, WeightedSumsetSpec


def dumps(payload: Any) -> str:
    """Canonical text of a payload; identical inputs always give identical bytes."""
    return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=True)


def _require(payload: Mapping[str, Any], *keys: str) -> None:
    missing = [k for k in keys if k not in payload]
    if missing:
        raise InvalidInputError(f"Payload is missing keys: {', '.join(missing)}")


# --------------------------------------------------------------------------- #
#                                  MATRICES                                   #
# --------------------------------------------------------------------------- #


def scalar_matrix_to_json(M: SparseMatrix) -> List[List[str]]:
    fld: Field = M.ring
    return [[fld.format(v) for v in row] for row in M.to_rows()]


def scalar_matrix_from_json(rows: Sequence[Sequence[Any]], field: Field, nrows: int, ncols: int) -> SparseMatrix:
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise DimensionMismatchError(f"Expected a {nrows}x{ncols} matrix")
    return SparseMatrix(nrows, ncols, field, {(i, j): field.parse(str(v)) for i, r in enumerate(rows) for j, v in enumerate(r)})


def poly_matrix_to_json(M: SparseMatrix) -> List[List[str]]:
    return [[str(v) for v in row] for row in M.to_rows()]


def poly_matrix_from_json(rows: Sequence[Sequence[str]], ring: PolynomialRing, nrows: int, ncols: int) -> SparseMatrix:
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise DimensionMismatchError(f"Expected a {nrows}x{ncols} polynomial matrix")
    return SparseMatrix(nrows, ncols, ring, {(i, j): ring.parse(str(v)) for i, r in enumerate(rows) for j, v in enumerate(r)})


def exterior_matrix_to_json(M: SparseMatrix) -> Dict[str, Any]:
    algebra: ExteriorAlgebra = M.ring
    return {
        "n": algebra.n,
        "field": algebra.field.name,
        "rows": M.nrows,
        "cols": M.ncols,
        "entries": [[v.to_json() for v in row] for row in M.to_rows()],
    }


def exterior_element_from_json(terms: Sequence[Sequence[Any]], algebra: ExteriorAlgebra) -> ExteriorElement:
    out = algebra.zero()
    for coeff, indices in terms:
        out = out + algebra.monomial(*indices, coefficient=algebra.field.parse(str(coeff)))
    return out


def exterior_matrix_from_json(payload: Mapping[str, Any]) -> SparseMatrix:
    _require(payload, "n", "rows", "cols", "entries")
    algebra = ExteriorAlgebra(int(payload["n"]), get_field(payload.get("field", "QQ")))
    rows = payload["entries"]
    if len(rows) != payload["rows"] or any(len(r) != payload["cols"] for r in rows):
        raise DimensionMismatchError("Exterior matrix entries do not match its shape")
    entries = {(i, j): exterior_element_from_json(v, algebra) for i, r in enumerate(rows) for j, v in enumerate(r)}
    return SparseMatrix(payload["rows"], payload["cols"], algebra, entries)


# --------------------------------------------------------------------------- #
#                                  COMPLEXES                                  #
# --------------------------------------------------------------------------- #


def complex_to_json(C: GradedFreeComplex) -> Dict[str, Any]:
    terms = []
    for t in C.terms:
        entry: Dict[str, Any] = {"rank": t.rank}
        if t.is_uniform():
            entry["twist"] = t.twist
        else:
            entry["twists"] = list(t.twists)
        terms.append(entry)
    return {
        "n": C.n,
        "field": C.field.name,
        "variables": list(C.ring.names),
        "start": C.start,
        "terms": terms,
        "diffs": [poly_matrix_to_json(D) for D in C.diffs],
    }


def complex_from_json(payload: Mapping[str, Any], field: Optional[Field] = None) -> GradedFreeComplex:
    """Inverse of :func:`complex_to_json`; ``field`` overrides the field named in the payload."""
    _require(payload, "n", "terms", "diffs")
    fld = field or get_field(payload.get("field", "QQ"))
    names = tuple(payload.get("variables") or ())
    ring = PolynomialRing(int(payload["n"]), fld, names)
    terms = []
    for t in payload["terms"]:
        if "twists" in t:
            terms.append(FreeModule(tuple(int(v) for v in t["twists"])))
        else:
            _require(t, "rank")
            twist = t.get("twist")
            if int(t["rank"]) and twist is None:
                raise InvalidInputError("A nonzero term needs a twist")
            terms.append(FreeModule.uniform(int(t["rank"]), int(twist or 0)))
    diffs = payload["diffs"]
    if len(diffs) != max(len(terms) - 1, 0):
        raise DimensionMismatchError(f"{len(terms)} terms need {len(terms) - 1} differentials, got {len(diffs)}")
    mats = tuple(poly_matrix_from_json(D, ring, terms[k].rank, terms[k + 1].rank) for k, D in enumerate(diffs))
    return GradedFreeComplex(ring, tuple(terms), mats, int(payload.get("start", 0)))


def exterior_complex_to_json(C: ExteriorComplex) -> Dict[str, Any]:
    return {
        "n": C.algebra.n,
        "field": C.algebra.field.name,
        "lo": C.lo,
        "terms": [{"rank": t.rank, "twist": t.twist} for t in C.terms],
        "diffs": [exterior_matrix_to_json(D) for D in C.diffs],
        "composites_vanish": C.composites_vanish(),
    }


def tate_window_to_json(W: TateWindow) -> Dict[str, Any]:
    out = {}
    for s, D in sorted(W.differentials.items()):
        out[str(s)] = {
            "matrix": exterior_matrix_to_json(D),
            "source_twist": W.projective_twist(s) if s else W.n,
            "target_twist": W.projective_twist(s - 1) if s else 0,
            "injective_twist": W.injective_twist(s),
        }
    return {"n": W.n, "field": W.field.name, "differentials": out}


# --------------------------------------------------------------------------- #
#                                   MODULES                                   #
# --------------------------------------------------------------------------- #


def module_to_json(N: GradedExtModule) -> Dict[str, Any]:
    return {
        "n": N.n,
        "field": N.field.name,
        "top": N.top,
        "dims": list(N.dims),
        "hilbert_function": list(N.hilbert_function()),
        "action": [[scalar_matrix_to_json(A) for A in mats] for mats in N.action],
    }


def module_from_json(payload: Mapping[str, Any], field: Optional[Field] = None) -> GradedExtModule:
    _require(payload, "n", "top", "dims", "action")
    fld = field or get_field(payload.get("field", "QQ"))
    n = int(payload["n"])
    dims = tuple(int(v) for v in payload["dims"])
    if len(payload["action"]) != n:
        raise DimensionMismatchError(f"Module on {n} variables needs {n} action lists")
    action = []
    for mats in payload["action"]:
        if len(mats) != len(dims):
            raise DimensionMismatchError("Every variable needs one matrix per degree")
        action.append(tuple(
            scalar_matrix_from_json(A, fld, dims[k + 1] if k + 1 < len(dims) else 0, dims[k])
            for k, A in enumerate(mats)
        ))
    return GradedExtModule(n, fld, int(payload["top"]), dims, tuple(action))


# --------------------------------------------------------------------------- #
#                                  REPORTS                                    #
# --------------------------------------------------------------------------- #


def spec_to_json(spec: WeightedSumsetSpec) -> Dict[str, Any]:
    return {"parts": spec.to_json(), "text": str(spec), "capacity": list(spec.capacity())}


def certificate_to_json(cert: MembershipCertificate) -> Dict[str, Any]:
    return {
        "verdict": cert.verdict,
        "target": list(cert.target),
        "spec": spec_to_json(cert.spec),
        "decomposition": [
            {"copies": c, "size": m, "sequences": [list(s) for s in part]}
            for (c, m), part in zip(cert.spec.parts, cert.decomposition)
        ],
        "nodes": cert.nodes,
    }


def verdict_to_json(v: FilterVerdict) -> Dict[str, Any]:
    out: Dict[str, Any] = {"verdict": v.verdict, "reason": v.reason}
    if v.certificate is not None:
        out["certificate"] = certificate_to_json(v.certificate)
    return out


def report_to_json(report: SearchReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "verdict": report.verdict,
        "target": list(report.target),
        "field": report.field,
        "candidate_space": report.candidate_space,
        "examined": report.examined,
        "validated": report.validated,
    }
    if report.witness is not None:
        out["witness"] = [scalar_matrix_to_json(V) for V in report.witness.bases]
    if report.subcomplex is not None:
        out["subcomplex"] = complex_to_json(report.subcomplex)
    return out


def containment_to_json(report: ContainmentReport) -> Dict[str, Any]:
    return {
        "n": report.n,
        "d": report.d,
        "field": report.field,
        "kind": report.kind,
        "holds": report.holds,
        "strict": report.strict,
        "left": sorted(list(h) for h in report.left),
        "right": sorted(list(h) for h in report.right),
        "counterexamples": [list(h) for h in report.counterexamples],
        "unattained": [list(h) for h in report.unattained],
    }
