"""Command-line surface.

Exit codes: 0 success; 2 parse/syntax error; 3 invariant violation;
4 budget exhausted with a partial (lower-bound) result.  FILE arguments
accept either a path or a builtin example name.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction

from . import spaces
from .chains import ChainComplex
from .dehn import WordSearchLimits, dehn_function
from .errors import FillscopeError, ParseError
from .filling import LOWER_BOUND, SearchBudget, fill_volume
from .formats import (
    RunReport,
    digest_inputs,
    emit_complex,
    emit_presentation,
    emit_profile_csv,
    emit_report,
    emit_simplicial,
    fill_result_payload,
    parse_assignment,
    parse_chain_spec,
    parse_complex,
    parse_presentation,
    parse_profile_csv,
    parse_simplicial,
    profile_payload,
    witness_payload,
)
from .profiles import FitGrid, chain_profile, quasi_equivalent_fit
from .simplicial import barycentric_subdivide, build_cover, to_chain_complex
from .snf import homology_summary

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_BUDGET = 4

_RANGE = re.compile(r"^(\d+)\.\.(\d+)$")


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_complex(src: str) -> tuple[str, ChainComplex]:
    if os.path.exists(src):
        text = _read_text(src)
        try:
            doc_format = json.loads(text).get("format")
        except (json.JSONDecodeError, AttributeError):
            doc_format = None
        if doc_format == "fillscope-simplicial/1":
            return text, to_chain_complex(parse_simplicial(text), name=os.path.basename(src))
        return text, parse_complex(text)
    kind = spaces.builtin_kind(src)
    if kind == "presentation":
        raise ParseError(f"{src!r} is a presentation, not a complex")
    cc = spaces.builtin_complex(src)
    return emit_complex(cc), cc


def _load_simplicial(src: str):
    if os.path.exists(src):
        text = _read_text(src)
        return text, parse_simplicial(text)
    if spaces.builtin_kind(src) != "simplicial":
        raise ParseError(f"{src!r} is not a simplicial complex")
    sc = spaces.builtin_simplicial(src)
    return emit_simplicial(sc), sc


def _load_presentation(src: str):
    if os.path.exists(src):
        text = _read_text(src)
        return text, parse_presentation(text)
    if spaces.builtin_kind(src) != "presentation":
        raise ParseError(f"{src!r} is not a presentation")
    p = spaces.builtin_presentation(src)
    return emit_presentation(p), p


def _parse_grid(spec: str) -> FitGrid:
    spec = spec.strip()
    if re.fullmatch(r"\d+", spec):
        return FitGrid.square(int(spec))
    fields = {"amax": None, "b": None, "c": None, "d": None}
    for part in spec.split(";"):
        if not part.strip():
            continue
        if "=" not in part:
            raise ParseError(f"bad grid component {part!r}")
        key, _, val = part.partition("=")
        key = key.strip().lower()
        if key not in fields:
            raise ParseError(f"unknown grid key {key!r}")
        fields[key] = val.strip()
    if fields["amax"] is None:
        raise ParseError("grid spec needs amax=...")

    def fracs(raw: str) -> tuple[Fraction, ...]:
        out = []
        for tok in raw.split(","):
            tok = tok.strip()
            m = _RANGE.fullmatch(tok)
            if m:
                out.extend(Fraction(i) for i in range(int(m.group(1)), int(m.group(2)) + 1))
            else:
                try:
                    out.append(Fraction(tok))
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad grid value {tok!r}") from None
        return tuple(out)

    return FitGrid(
        a_max=Fraction(fields["amax"]),
        b_values=fracs(fields["b"] or "1"),
        c_values=fracs(fields["c"] or "0"),
        d_values=fracs(fields["d"] or "0"),
    )


def _print(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _profile_caveats(table) -> list[str]:
    bad = [n for n in range(table.n_max + 1) if table.status(n) == LOWER_BOUND]
    if not bad:
        return []
    return [
        f"entries at n={bad[0]}..{bad[-1]} are certified lower bounds only; "
        "the search budget was exhausted before every contributing fill completed"
    ]


def _profile_run(args, table, digest, budgets, elapsed, out) -> int:
    _print(out, emit_profile_csv(table))
    caveats = _profile_caveats(table)
    report = RunReport(
        command=args.command_line,
        inputs_digest=digest,
        budgets=budgets,
        timings={"total_s": elapsed},
        result=profile_payload(table),
        caveats=caveats,
    )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(emit_report(report))
    return EXIT_BUDGET if caveats else EXIT_OK


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = argparse.ArgumentParser(prog="fillscope", description=__doc__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_complex = sub.add_parser("complex", help="validate or summarize a chain complex")
    sub_complex = p_complex.add_subparsers(dest="sub", required=True)
    for name in ("check", "homology"):
        sp = sub_complex.add_parser(name)
        sp.add_argument("file")

    p_fill = sub.add_parser("fill", help="exact chain filling volume")
    p_fill.add_argument("file")
    p_fill.add_argument("--dim", type=int, required=True)
    p_fill.add_argument("--chain", required=True, help='JSON object {"cell": coeff}')
    p_fill.add_argument("--budget", type=int, default=SearchBudget().max_nodes)

    p_profile = sub.add_parser("profile", help="chain profile or Dehn function table")
    sub_profile = p_profile.add_subparsers(dest="sub", required=True)
    pc = sub_profile.add_parser("chain")
    pc.add_argument("file")
    pc.add_argument("--dim", type=int, required=True)
    pc.add_argument("--nmax", type=int, required=True)
    pc.add_argument("--budget", type=int, default=SearchBudget().max_nodes)
    pc.add_argument("--report", default=None)
    pd = sub_profile.add_parser("dehn")
    pd.add_argument("file")
    pd.add_argument("--nmax", type=int, required=True)
    pd.add_argument("--maxlen", type=int, default=None)
    pd.add_argument("--maxcost", type=int, default=None)
    pd.add_argument("--report", default=None)

    p_cover = sub.add_parser("cover", help="build a finite cover from monodromy data")
    sub_cover = p_cover.add_subparsers(dest="sub", required=True)
    cb = sub_cover.add_parser("build")
    cb.add_argument("file")
    cb.add_argument("--assignment", required=True)

    p_sub = sub.add_parser("subdivide", help="barycentric subdivision")
    p_sub.add_argument("file")

    p_fit = sub.add_parser("fit", help="fit quasi-equivalence witnesses")
    sub_fit = p_fit.add_subparsers(dest="sub", required=True)
    fq = sub_fit.add_parser("qequiv")
    fq.add_argument("csv1")
    fq.add_argument("csv2")
    fq.add_argument("--grid", required=True)

    p_ex = sub.add_parser("example", help="print a builtin example file")
    p_ex.add_argument("name")

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code not in (0, None) else EXIT_OK
    args.command_line = " ".join(["fillscope"] + list(argv or []))

    try:
        return _dispatch(args, out)
    except ParseError as e:
        _print(err, f"parse error: {e}")
        return EXIT_PARSE
    except FillscopeError as e:
        _print(err, f"invariant violation: {e}")
        return EXIT_INVARIANT
    except FileNotFoundError as e:
        _print(err, f"parse error: {e}")
        return EXIT_PARSE


def _dispatch(args, out) -> int:
    start = time.perf_counter()

    if args.cmd == "complex":
        text, cc = _load_complex(args.file)
        if args.sub == "check":
            payload = {
                "ok": True,
                "name": cc.name,
                "cells": [cc.n_cells(d) for d in range(cc.top_dim + 1)],
                "euler_characteristic": cc.euler_characteristic(),
            }
        else:
            payload = {
                "homology": {
                    str(d): {"betti": b, "torsion": tor}
                    for d in range(cc.top_dim + 1)
                    for b, tor in [homology_summary(cc, d)]
                }
            }
        report = RunReport(
            command=args.command_line,
            inputs_digest=digest_inputs(text),
            timings={"total_s": time.perf_counter() - start},
            result=payload,
        )
        _print(out, emit_report(report))
        return EXIT_OK

    if args.cmd == "fill":
        text, cc = _load_complex(args.file)
        chain = parse_chain_spec(args.chain, args.dim - 1)
        budget = SearchBudget(max_nodes=args.budget)
        result = fill_volume(cc, args.dim, chain, budget)
        caveats = []
        if result.status == LOWER_BOUND:
            caveats.append(
                f"budget of {budget.max_nodes} branch-and-bound nodes exhausted; "
                f"no filling of norm < {result.value} exists, the optimum is unproved"
            )
        report = RunReport(
            command=args.command_line,
            inputs_digest=digest_inputs(text, args.chain),
            budgets={"max_nodes": budget.max_nodes},
            timings={"total_s": time.perf_counter() - start},
            result=fill_result_payload(result),
            caveats=caveats,
        )
        _print(out, emit_report(report))
        return EXIT_BUDGET if result.status == LOWER_BOUND else EXIT_OK

    if args.cmd == "profile" and args.sub == "chain":
        text, cc = _load_complex(args.file)
        budget = SearchBudget(max_nodes=args.budget)
        table = chain_profile(cc, args.dim, args.nmax, budget)
        elapsed = time.perf_counter() - start
        return _profile_run(
            args, table, digest_inputs(text), {"max_nodes": budget.max_nodes}, elapsed, out
        )

    if args.cmd == "profile" and args.sub == "dehn":
        text, p = _load_presentation(args.file)
        maxlen = args.maxlen if args.maxlen is not None else 2 * args.nmax + 6
        maxcost = args.maxcost if args.maxcost is not None else args.nmax + 6
        limits = WordSearchLimits(max_word_len=maxlen, max_cost=maxcost)
        table = dehn_function(p, args.nmax, limits)
        elapsed = time.perf_counter() - start
        budgets = {"max_word_len": maxlen, "max_cost": maxcost}
        return _profile_run(args, table, digest_inputs(text), budgets, elapsed, out)

    if args.cmd == "cover":
        text, sc = _load_simplicial(args.file)
        atext = _read_text(args.assignment)
        pa = parse_assignment(atext, sc)
        cover = build_cover(sc, pa)
        _print(out, emit_simplicial(cover))
        return EXIT_OK

    if args.cmd == "subdivide":
        text, sc = _load_simplicial(args.file)
        _print(out, emit_simplicial(barycentric_subdivide(sc)))
        return EXIT_OK

    if args.cmd == "fit":
        t1 = _read_text(args.csv1)
        t2 = _read_text(args.csv2)
        f = parse_profile_csv(t1, label=os.path.basename(args.csv1))
        g = parse_profile_csv(t2, label=os.path.basename(args.csv2))
        grid = _parse_grid(args.grid)
        pair = quasi_equivalent_fit(f, g, grid)
        caveats = []
        if pair is None:
            payload = {"found": False, "forward": None, "backward": None}
            caveats.append(
                "no witness in this grid at these samples; this refutes only the "
                "searched grid on the tabulated range, never an asymptotic relation"
            )
        else:
            payload = {
                "found": True,
                "forward": witness_payload(pair[0]),
                "backward": witness_payload(pair[1]),
            }
        report = RunReport(
            command=args.command_line,
            inputs_digest=digest_inputs(t1, t2),
            budgets={"grid": args.grid},
            timings={"total_s": time.perf_counter() - start},
            result=payload,
            caveats=caveats,
        )
        _print(out, emit_report(report))
        return EXIT_OK

    if args.cmd == "example":
        kind = spaces.builtin_kind(args.name)
        if kind == "complex":
            _print(out, emit_complex(spaces.builtin_complex(args.name)))
        elif kind == "simplicial":
            _print(out, emit_simplicial(spaces.builtin_simplicial(args.name)))
        else:
            _print(out, emit_presentation(spaces.builtin_presentation(args.name)))
        return EXIT_OK

    raise ParseError(f"unknown command {args.cmd!r}")


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
