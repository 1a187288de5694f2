"""File formats and run reports.

All documents are UTF-8 JSON with an explicit ``format`` tag; integer
coefficients are serialized as decimal strings so width never matters.
Profile tables travel as CSV with columns ``n,value,status``.  Emission is
deterministic and byte-stable for a fixed input.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .chains import Chain, ChainComplex
from .errors import InvariantError, ParseError
from .filling import EXACT, LOWER_BOUND, FillResult
from .presentations import Presentation, word_from_tokens
from .profiles import INF, ProfileEntry, ProfileTable, QuasiFitWitness
from .simplicial import PermutationAssignment, SimplicialComplex

COMPLEX_FORMAT = "fillscope-complex/1"
SIMPLICIAL_FORMAT = "fillscope-simplicial/1"
PRESENTATION_FORMAT = "fillscope-presentation/1"
ASSIGNMENT_FORMAT = "fillscope-assignment/1"


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    return doc


def _expect_format(doc: dict, tag: str) -> None:
    got = doc.get("format")
    if got != tag:
        raise ParseError(f"expected format {tag!r}, got {got!r}")


def _int_field(value, where: str) -> int:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise ParseError(f"{where}: {value!r} is not a decimal integer") from None
    raise ParseError(f"{where}: expected an integer or decimal string")


# -- chain complexes ----------------------------------------------------------


def parse_complex(text: str) -> ChainComplex:
    doc = _load_json(text)
    _expect_format(doc, COMPLEX_FORMAT)
    raw_cells = doc.get("cells")
    if not isinstance(raw_cells, dict):
        raise ParseError("'cells' must be an object mapping dimension to a cell list")
    cells: dict[int, list[str]] = {}
    for key, ids in raw_cells.items():
        d = _int_field(key, "cells dimension")
        if d < 0:
            raise ParseError(f"negative dimension {d}")
        if not isinstance(ids, list) or not all(isinstance(x, str) for x in ids):
            raise ParseError(f"cells[{key}] must be a list of strings")
        cells[d] = list(ids)
    raw_bnd = doc.get("boundary", {})
    if not isinstance(raw_bnd, dict):
        raise ParseError("'boundary' must be an object mapping dimension to columns")
    boundary: dict[int, dict[str, dict[str, int]]] = {}
    for key, cols in raw_bnd.items():
        d = _int_field(key, "boundary dimension")
        if not isinstance(cols, list):
            raise ParseError(f"boundary[{key}] must be a list of [cell, entries] pairs")
        per: dict[str, dict[str, int]] = {}
        for item in cols:
            if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], str)):
                raise ParseError(f"boundary[{key}] entries must be [cell, entries] pairs")
            cell, entries = item
            col: dict[str, int] = {}
            for pair in entries:
                if not (isinstance(pair, list) and len(pair) == 2 and isinstance(pair[1], str)):
                    raise ParseError(
                        f"boundary[{key}][{cell}]: entries must be [coefficient, face] pairs"
                    )
                coeff = _int_field(pair[0], f"boundary[{key}][{cell}]")
                col[pair[1]] = col.get(pair[1], 0) + coeff
            per[cell] = col
        boundary[d] = per
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    return ChainComplex(cells, boundary, name=name)


def emit_complex(cc: ChainComplex) -> str:
    cells = {str(d): list(cc.cells(d)) for d in range(cc.top_dim + 1)}
    boundary = {}
    for d in range(1, cc.top_dim + 1):
        cols = []
        for cell in cc.cells(d):
            col = cc.column(d, cell)
            entries = [[str(col[f]), f] for f in cc.cells(d - 1) if f in col]
            cols.append([cell, entries])
        if cols:
            boundary[str(d)] = cols
    doc = {
        "format": COMPLEX_FORMAT,
        "name": cc.name,
        "cells": cells,
        "boundary": boundary,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- simplicial complexes -----------------------------------------------------


def parse_simplicial(text: str) -> SimplicialComplex:
    doc = _load_json(text)
    _expect_format(doc, SIMPLICIAL_FORMAT)
    simplices = doc.get("simplices")
    if not isinstance(simplices, list):
        raise ParseError("'simplices' must be a list of vertex lists")
    for s in simplices:
        if not isinstance(s, list) or not all(isinstance(v, str) for v in s):
            raise ParseError(f"simplex {s!r} must be a list of vertex names")
    vertices = doc.get("vertices")
    if vertices is None:
        vertices = sorted({v for s in simplices for v in s})
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("'vertices' must be a list of strings")
    return SimplicialComplex(vertices, simplices)


def emit_simplicial(sc: SimplicialComplex) -> str:
    top = [list(s) for d in range(sc.dim + 1) for s in sc.simplices(d)]
    doc = {
        "format": SIMPLICIAL_FORMAT,
        "vertices": list(sc.vertices),
        "simplices": top,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- presentations ------------------------------------------------------------


def parse_presentation(text: str) -> Presentation:
    doc = _load_json(text)
    _expect_format(doc, PRESENTATION_FORMAT)
    gens = doc.get("generators")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise ParseError("'generators' must be a list of strings")
    raw = doc.get("relators", [])
    if not isinstance(raw, list):
        raise ParseError("'relators' must be a list of token lists")
    relators = []
    for tokens in raw:
        if not isinstance(tokens, list) or not all(isinstance(t, str) for t in tokens):
            raise ParseError(f"relator {tokens!r} must be a list of tokens")
        relators.append(word_from_tokens(tokens, gens))
    name = doc.get("name", "")
    return Presentation(gens, relators, name=name)


def emit_presentation(p: Presentation) -> str:
    doc = {
        "format": PRESENTATION_FORMAT,
        "name": p.name,
        "generators": list(p.generators),
        "relators": [r.tokens(p.generators) for r in p.relators],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- cover assignments --------------------------------------------------------


def parse_assignment(text: str, sc: SimplicialComplex) -> PermutationAssignment:
    doc = _load_json(text)
    _expect_format(doc, ASSIGNMENT_FORMAT)
    d = _int_field(doc.get("fiber_size"), "fiber_size")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list of [[u,v], permutation] pairs")
    perms = {}
    for item in edges:
        if not (isinstance(item, list) and len(item) == 2):
            raise ParseError("each edge assignment must be [[u,v], permutation]")
        edge, perm = item
        if not (isinstance(edge, list) and len(edge) == 2):
            raise ParseError(f"bad edge {edge!r}")
        if not isinstance(perm, list):
            raise ParseError(f"bad permutation {perm!r}")
        perms[tuple(edge)] = [_int_field(x, "permutation entry") for x in perm]
    return PermutationAssignment.from_partial(sc, d, perms)


def emit_assignment(pa: PermutationAssignment) -> str:
    doc = {
        "format": ASSIGNMENT_FORMAT,
        "fiber_size": pa.fiber_size,
        "edges": [[list(e), list(p)] for e, p in sorted(pa.perms.items())],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- chains -------------------------------------------------------------------


def parse_chain_spec(text: str, dim: int) -> Chain:
    doc = _load_json(text)
    return Chain(dim, {cell: _int_field(v, f"coefficient of {cell}") for cell, v in doc.items()})


def chain_payload(c: Chain | None):
    if c is None:
        return None
    return {cell: str(k) for cell, k in sorted(c.coeffs.items())}


# -- profile CSV --------------------------------------------------------------


def emit_profile_csv(t: ProfileTable) -> str:
    lines = ["n,value,status"]
    for n, e in enumerate(t.entries):
        value = "inf" if e.value == INF else str(e.value)
        lines.append(f"{n},{value},{e.status}")
    return "\n".join(lines) + "\n"


def parse_profile_csv(text: str, label: str = "") -> ProfileTable:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or lines[0] != "n,value,status":
        raise ParseError("profile CSV must start with header 'n,value,status'")
    entries = []
    for i, ln in enumerate(lines[1:]):
        parts = ln.split(",")
        if len(parts) != 3:
            raise ParseError(f"line {i + 2}: expected 3 comma-separated fields")
        n = _int_field(parts[0], f"line {i + 2} n")
        if n != i:
            raise ParseError(f"line {i + 2}: rows must be consecutive from n=0")
        value = INF if parts[1] == "inf" else _int_field(parts[1], f"line {i + 2} value")
        status = parts[2]
        if status not in (EXACT, LOWER_BOUND):
            raise ParseError(f"line {i + 2}: bad status {status!r}")
        entries.append(ProfileEntry(value, status))
    return ProfileTable(entries, label=label)


# -- result payloads and run reports ------------------------------------------


def fill_result_payload(r: FillResult) -> dict:
    return {
        "status": r.status,
        "value": None if r.value is None else str(r.value),
        "witness": chain_payload(r.witness),
    }


def witness_payload(w: QuasiFitWitness | None):
    if w is None:
        return None
    return {"A": str(w.a), "B": str(w.b), "C": str(w.c), "D": str(w.d), "note": w.note}


def profile_payload(t: ProfileTable) -> dict:
    return {
        "label": t.label,
        "dim": t.dim,
        "budget": t.budget_note,
        "entries": [
            [n, "inf" if e.value == INF else str(e.value), e.status]
            for n, e in enumerate(t.entries)
        ],
    }


def digest_inputs(*texts: str) -> str:
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode("utf-8"))
        h.update(b"\x00")
    return h.hexdigest()


@dataclass
class RunReport:
    """Everything a run leaves behind: inputs digest, budgets, timings, the
    result payload, and a caveat string for every non-exact outcome."""

    command: str
    inputs_digest: str
    budgets: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    result: object = None
    caveats: list[str] = field(default_factory=list)


def _non_exact_markers(payload) -> bool:
    if isinstance(payload, dict):
        for key, val in payload.items():
            if key == "status" and val in (LOWER_BOUND, "NotTrivialWithinBudget"):
                return True
            if key == "found" and val is False:
                return True
            if _non_exact_markers(val):
                return True
        return False
    if isinstance(payload, (list, tuple)):
        return any(_non_exact_markers(v) for v in payload)
    return payload == LOWER_BOUND or payload == "NotTrivialWithinBudget"


def emit_report(r: RunReport) -> str:
    """Deterministic JSON for a report.  Refuses to emit a lower-bound or
    none-style result that carries no human-readable caveat."""
    if _non_exact_markers(r.result) and not r.caveats:
        raise InvariantError("non-exact result requires a caveat")
    doc = {
        "command": r.command,
        "inputs_digest": r.inputs_digest,
        "budgets": r.budgets,
        "timings": {k: round(float(v), 6) for k, v in r.timings.items()},
        "result": r.result,
        "caveats": list(r.caveats),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
