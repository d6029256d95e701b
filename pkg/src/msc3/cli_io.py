"""JSON documents and the ``msc3`` command line.

An Msc document looks like::

    {"field": {"char": 3, "tower": []},
     "entries": [["1", "0", ...], ["0", ...], ["0", ...]],
     "label": "optional", "seed": 0}

with scalars in the text encoding of ``field``.  Exit codes: 0 success,
1 failed self-check, 2 malformed input, 3 trace vectors dependent.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from pathlib import Path

from . import catalog
from .catalog_char2 import FAMILIES as CHAR2_FAMILIES
from .catalog_odd import FAMILIES as ODD_FAMILIES
from .engine import ClassificationResult
from .field import FieldCtx, solve_quadratic, sqrt
from .msc import Msc, act, inv3, matmul, traces
from .normalize import TraceDependent, normalize_traces
from .oracle import brute_force_iso, census, classify

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_DEPENDENT = 0, 1, 2, 3


class MalformedInput(ValueError):
    pass


# -- documents ------------------------------------------------------------------

def msc_to_doc(A: Msc, label: str | None = None, seed: int | None = None) -> dict:
    doc = {"field": A.ctx.to_json(), "entries": [[x.encode() for x in r] for r in A.rows]}
    if label is not None:
        doc["label"] = label
    if seed is not None:
        doc["seed"] = seed
    return doc


def doc_to_msc(doc: dict) -> Msc:
    try:
        ctx = FieldCtx.from_json(doc["field"])
        rows = doc["entries"]
        if len(rows) != 3 or any(len(r) != 9 for r in rows):
            raise MalformedInput("entries must be 3 rows of 9 scalars")
        return Msc([[ctx.parse(str(x)) for x in r] for r in rows])
    except (KeyError, TypeError, ValueError, ArithmeticError) as e:
        raise MalformedInput(str(e)) from e


_STRING = r'"(?:[^"\\]|\\.)*"'
_FLAT_LIST = re.compile(r"\[\s+(" + _STRING + r"(?:,\s+" + _STRING + r")*)\s+\]")


def dumps(doc: dict) -> str:
    """Indented JSON with every innermost list of strings kept on one line."""
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    flat = lambda m: "[" + ", ".join(re.findall(_STRING, m.group(1))) + "]"
    return _FLAT_LIST.sub(flat, text) + "\n"


def matrix_to_doc(g) -> list:
    return [[x.encode() for x in r] for r in g]


def doc_to_matrix(rows, ctx: FieldCtx) -> list:
    try:
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise MalformedInput("a basis change is a 3x3 matrix")
        return [[ctx.parse(str(x)) for x in r] for r in rows]
    except (TypeError, ValueError) as e:
        raise MalformedInput(str(e)) from e


def report(A: Msc, r: ClassificationResult) -> dict:
    fam = r.family
    ctx = r.msc.ctx.join(A.ctx)
    return {
        "family": {"parity": fam.parity, "index": fam.index},
        "name": fam.name,
        "params": {n: v.encode() for n, v in r.params.items()},
        "guards": list(r.guards),
        "witness": matrix_to_doc(r.witness.matrix()),
        "field": ctx.to_json(),
        "input": msc_to_doc(A)["entries"],
        "canonical": [[x.encode() for x in row] for row in r.msc.rows],
    }


def check_report(doc: dict) -> bool:
    """Recompute act(witness, input) and compare with the canonical matrix."""
    ctx = FieldCtx.from_json(doc["field"])
    A = Msc([[ctx.parse(x) for x in r] for r in doc["input"]])
    g = doc_to_matrix(doc["witness"], ctx)
    C = Msc([[ctx.parse(x) for x in r] for r in doc["canonical"]])
    return act(g, A) == C


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise MalformedInput(str(e)) from e


def _write(text: str, path: str | None):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands -------------------------------------------------------------------

def cmd_classify(args) -> int:
    A = doc_to_msc(_read_json(args.infile))
    r = classify(A)
    _write(dumps(report(A, r)), args.out)
    return EXIT_OK


def cmd_traces(args) -> int:
    A = doc_to_msc(_read_json(args.infile))
    t = traces(A)
    _write(dumps({"tr1": [x.encode() for x in t.tr1], "tr2": [x.encode() for x in t.tr2]}),
           args.out)
    return EXIT_OK


def cmd_act(args) -> int:
    A = doc_to_msc(_read_json(args.infile))
    g_doc = _read_json(args.g) if Path(args.g).exists() or args.g == "-" else json.loads(args.g)
    g = doc_to_matrix(g_doc, A.ctx)
    try:
        B = act(g, A)
    except ArithmeticError as e:
        raise MalformedInput(str(e)) from e
    _write(dumps(msc_to_doc(B)), args.out)
    return EXIT_OK


def cmd_iso(args) -> int:
    A = doc_to_msc(_read_json(args.a))
    B = doc_to_msc(_read_json(args.b))
    if A.ctx.char != B.ctx.char:
        raise MalformedInput("inputs over different characteristics")
    out = {"mode": args.mode}
    g = None
    if args.mode == "canonical":
        ra, rb = classify(A), classify(B)
        out["families"] = [ra.family.name, rb.family.name]
        if ra.same_class(rb):
            g = matmul(inv3(rb.witness.matrix()), ra.witness.matrix())
    else:
        na, nb = normalize_traces(A), normalize_traces(B)
        w = brute_force_iso(na.msc, nb.msc, args.search)
        if w is not None:
            g = matmul(inv3(nb.g0.matrix()), matmul(w.g.matrix(), na.g0.matrix()))
            out["search_space"] = w.search_space
    out["isomorphic"] = g is not None
    if g is not None:
        if act(g, A) != B:
            print("witness check failed", file=sys.stderr)
            return EXIT_FAIL
        out["witness"] = matrix_to_doc(g)
    _write(dumps(out), args.out)
    return EXIT_OK


def cmd_census(args) -> int:
    c = census(args.char, args.samples, args.seed)
    parity = "char2" if args.char == 2 else "odd"
    lines = [f"census char={c.char} samples={c.samples} seed={c.seed} "
             f"accepted={c.accepted} rejected={c.rejected}"]
    for index, n in sorted(c.counts.items()):
        lines.append(f"{catalog.FamilyId(parity, index).name:>8}  {n:7d}  {c.fraction(index):.4f}")
    doc = {"char": c.char, "samples": c.samples, "seed": c.seed, "rejected": c.rejected,
           "counts": {str(k): v for k, v in sorted(c.counts.items())}}
    sys.stdout.write("\n".join(lines) + "\n")
    if args.json:
        Path(args.json).write_text(dumps(doc))
    return EXIT_OK


def selftest_field(parity: str) -> FieldCtx:
    """The field selftest draws from: a one-level tower over F_3, or F_16."""
    if parity == "odd":
        ctx = FieldCtx.prime(3)
        _, ctx = sqrt(ctx.scalar(ctx.nonsquare_raw()))
        return ctx
    ctx = FieldCtx.prime(2)
    w, ctx = solve_quadratic(ctx.one(), ctx.one())
    _, ctx = solve_quadratic(ctx.one(), w)
    return ctx


def selftest(families, trials: int, seed: int, ctx_for=selftest_field) -> list[str]:
    """Idempotence and witness soundness; returns failure descriptions."""
    rng = random.Random(seed)
    failures = []
    for fam in families:
        if fam.empty:
            continue
        ctx = ctx_for(fam.id.parity)
        for _ in range(trials):
            params = catalog.sample_params(fam, ctx, rng)
            A = catalog.canonical_msc(fam, params, ctx)
            try:
                r = classify(A)
            except Exception as e:  # report, keep going
                failures.append(f"{fam.id.name}: {type(e).__name__}: {e}")
                break
            if r.family != fam.id or r.params != params:
                failures.append(f"{fam.id.name}: classified as {r.family.name}")
                break
            if act(r.witness, A) != r.msc:
                failures.append(f"{fam.id.name}: witness does not map input to the result")
                break
    return failures


def _select(spec: str):
    fams = ODD_FAMILIES + CHAR2_FAMILIES
    if spec == "all":
        return fams
    wanted = set()
    for part in spec.split(","):
        part = part.strip()
        parity, _, idx = part.rpartition(":")
        wanted.add((parity or "odd", int(idx)))
    out = [f for f in fams if (f.id.parity, f.id.index) in wanted]
    if len(out) != len(wanted):
        raise MalformedInput(f"unknown families in {spec!r}")
    return out


def cmd_selftest(args) -> int:
    try:
        fams = _select(args.families)
    except ValueError as e:
        raise MalformedInput(str(e)) from e
    t = time.time()
    failures = selftest(fams, args.trials, args.seed)
    for f in failures:
        print("FAIL", f)
    live = sum(1 for f in fams if not f.empty)
    print(f"selftest: {live} families, {args.trials} trials each, "
          f"{len(failures)} failures, {time.time() - t:.1f}s")
    return EXIT_FAIL if failures else EXIT_OK


def catalog_lines(parity: str | None = None) -> list[str]:
    lines = []
    for fam in ODD_FAMILIES + CHAR2_FAMILIES:
        if parity and fam.id.parity != parity:
            continue
        tag = " [empty]" if fam.empty else (" [new]" if fam.new else "")
        lines.append(f"{fam.id.name}{tag}")
        if not fam.empty:
            lines.append("  fixed:  " + ("; ".join(f"{n} = {e}" for n, e in fam.fixed) or "-"))
            lines.append("  free:   " + ", ".join(fam.free))
            for g in fam.guard_texts():
                lines.append("  guard:  " + g)
        if fam.note:
            lines.append("  note:   " + fam.note)
    return lines


def cmd_catalog(args) -> int:
    sys.stdout.write("\n".join(catalog_lines(args.parity)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="msc3", description="Canonical forms of 3-dimensional algebras")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("iso")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--mode", choices=("canonical", "brute"), default="canonical")
    s.add_argument("--search", choices=("stabilizer", "full"), default="stabilizer")
    s.add_argument("--out")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("census")
    s.add_argument("--char", type=int, required=True)
    s.add_argument("--samples", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("traces")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_traces)

    s = sub.add_parser("act")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--g", required=True, help="JSON 3x3 matrix of scalars, or a file holding one")
    s.add_argument("--out")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("selftest")
    s.add_argument("--families", default="all",
                   help="'all' or a list like 'odd:3,char2:22'")
    s.add_argument("--trials", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)

    s = sub.add_parser("catalog")
    s.add_argument("--parity", choices=("odd", "char2"))
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_MALFORMED if e.code else EXIT_OK
    try:
        return args.func(args)
    except MalformedInput as e:
        print(f"malformed input: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except TraceDependent as e:
        print(f"out of scope: {e}", file=sys.stderr)
        return EXIT_DEPENDENT


if __name__ == "__main__":
    sys.exit(main())
