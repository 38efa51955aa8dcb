"""Command-line front end.

Subcommands::

    obstrukt table --dim 7 --range 2
    obstrukt rep "A3" --profile
    obstrukt enumerate --dim 7 --kbound 1
    obstrukt decide --manifold m.json --bundle b.json --rep "A2+R+R" [--lift l.json] [--json]
    obstrukt validate --manifold m.json

``decide`` exits 0 when the criterion holds, 1 when it fails and 2 on a
hypothesis failure or any input error.  ``OBSTRUKT_TRACE=1`` prints the
derivation trace.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import decide as D
from .charclass import coeff_profile, q1_poly_of, table_rows
from .cohomodel import ModelError, unlocked_decisions, validate_model
from .fga import FgaElement
from .jsonio import load_bundle, load_lift, load_manifold
from .reps import complexified_weights, enumerate_reps, parse_rep

OPS = ("auto", "reduce_u2", "reduce_so3", "iso", "sp1", "g2", "sections", "cor6", "u2", "u3", "7u3")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _tracing() -> bool:
    return os.environ.get("OBSTRUKT_TRACE", "") not in ("", "0")


def _element(text: str | None, G, name: str) -> FgaElement | None:
    if text is None:
        return None
    try:
        vals = json.loads(text) if text.strip().startswith("[") else [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--{name}: cannot parse {text!r} as integer coordinates") from None
    if len(vals) != G.ngens:
        raise UsageError(f"--{name}: expected {G.ngens} coordinates for {G}, got {len(vals)}")
    return FgaElement(G, tuple(int(v) for v in vals))


# ---------------------------------------------------------------------------
# subcommands


def cmd_table(args, out) -> int:
    rows = table_rows(args.dim, args.range)
    if args.json:
        data = []
        for label, kw, V, prof in rows:
            row = {"family": label, "params": kw, "rep": str(V), "a": prof.a, "b": prof.b}
            if args.dim == 6:
                row.update(c=prof.c, d=prof.d)
            data.append(row)
        print(json.dumps(data, indent=1), file=out)
        return 0
    head = ["Representation", "a", "b"] + (["c", "d"] if args.dim == 6 else [])
    print("\t".join(["family", "params"] + head), file=out)
    for label, kw, V, prof in rows:
        params = ",".join(f"{k}={v}" for k, v in kw.items()) or "-"
        cols = [label, params, str(V), str(prof.a), str(prof.b)]
        if args.dim == 6:
            cols += [str(prof.c), str(prof.d)]
        print("\t".join(cols), file=out)
    return 0


def cmd_rep(args, out) -> int:
    V = parse_rep(args.expr)
    shown = False
    if args.profile:
        print(coeff_profile(V), file=out)
        shown = True
    if args.weights:
        print(" ".join(f"({w.alpha},{w.beta})" for w in complexified_weights(V)), file=out)
        shown = True
    if args.q1:
        parity, poly = q1_poly_of(V)
        print(f"q1 = {poly}  (b {parity})", file=out)
        shown = True
    if not shown:
        print(f"{V}\tdim={V.dim}\t{coeff_profile(V) if V.dim in (6, 7) else ''}".rstrip(), file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    for V in enumerate_reps(args.dim, args.kbound):
        if args.profile and V.dim in (6, 7):
            print(f"{V}\t{coeff_profile(V)}", file=out)
        else:
            print(V, file=out)
    return 0


def cmd_validate(args, out) -> int:
    M = load_manifold(args.manifold)
    issues = validate_model(M)
    for s in issues:
        print(f"violation: {s}", file=out)
    if not issues:
        print("ok", file=out)
        print("unlocked: " + ", ".join(unlocked_decisions(M)), file=out)
    return 2 if issues else 0


def _emit(op: str, result, args, out) -> int:
    if isinstance(result, D.Decision):
        if args.json:
            print(json.dumps({"op": op, **result.to_dict()}, indent=1), file=out)
        else:
            wit = " ".join(f"{k}={list(v.coords)}" for k, v in result.witnesses.items())
            print(f"{op}: {result.status}" + (f"  {wit}" if wit else ""), file=out)
            for h in result.hypothesis_failures:
                print(f"  hypothesis: {h}", file=out)
            if _tracing():
                for t in result.trace:
                    print(f"  | {t}", file=out)
        return result.exit_code
    cases = {str(k): v for k, v in result.items()}
    if args.case is not None:
        if args.case not in cases:
            raise UsageError(f"--case must be one of {sorted(cases)}")
        return _emit(f"{op}[{args.case}]", cases[args.case], args, out)
    if args.json:
        print(json.dumps({"op": op, "cases": {k: d.to_dict() for k, d in cases.items()}}, indent=1), file=out)
    else:
        for k, d in cases.items():
            wit = " ".join(f"{n}={list(v.coords)}" for n, v in d.witnesses.items())
            print(f"{op}[{k}]: {d.status}" + (f"  {wit}" if wit else ""), file=out)
            for h in d.hypothesis_failures:
                print(f"  hypothesis: {h}", file=out)
            if _tracing():
                for t in d.trace:
                    print(f"  | {t}", file=out)
    return 2 if any(d.hypothesis_failures for d in cases.values()) else 0


def cmd_decide(args, out) -> int:
    M = load_manifold(args.manifold)
    xi = load_bundle(M, args.bundle) if args.bundle else None
    l = load_lift(M, args.lift) if args.lift else None
    V = parse_rep(args.rep) if args.rep else None
    op = args.op
    if op == "auto":
        if V is None:
            raise UsageError("decide: --rep is required unless --op is given")
        op = "reduce_so3" if V.is_so3 and M.dim == 7 and l is None else "reduce_u2"
    needs_bundle = op not in ("u2", "u3")
    if needs_bundle and xi is None:
        raise UsageError(f"decide --op {op}: --bundle is required")
    if op == "reduce_u2":
        if V is None:
            raise UsageError("decide --op reduce_u2: --rep is required")
        return _emit(op, D.reduce_u2(M, xi, V, xi.l_ref if l is None else l), args, out)
    if op == "reduce_so3":
        if V is None:
            raise UsageError("decide --op reduce_so3: --rep is required")
        return _emit(op, D.reduce_so3_7(M, xi, V, method=args.method), args, out)
    if op == "iso":
        if not args.bundle2:
            raise UsageError("decide --op iso: --bundle2 is required")
        xi2 = load_bundle(M, args.bundle2)
        return _emit(op, (D.iso_7 if M.dim == 7 else D.iso_6)(M, xi, xi2), args, out)
    if op == "sp1":
        return _emit(op, D.sp1_menu(M, xi), args, out)
    if op == "g2":
        return _emit(op, D.g2_reduce(M, xi), args, out)
    if op == "sections":
        return _emit(op, D.sections_7(M, xi, args.k), args, out)
    if op == "cor6":
        return _emit(op, D.cor6_cases(M, xi, l), args, out)
    u = _element(args.u, M.H(4), "u")
    v = _element(args.v, M.H(6), "v")
    if op == "u2":
        if l is None or u is None:
            raise UsageError("decide --op u2: --lift and --u are required")
        return _emit(op, D.exists_u2(M, l, u), args, out)
    if op == "u3":
        if l is None or u is None or v is None:
            raise UsageError("decide --op u3: --lift, --u and --v are required")
        return _emit(op, D.exists_u3(M, l, u, v), args, out)
    if u is None or v is None:
        raise UsageError("decide --op 7u3: --u and --v are required")
    return _emit(op, D.prop_7u3(M, xi, u, v, l), args, out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="obstrukt", description="Characteristic classes of U(2)-representations and bundle reduction criteria.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="regenerate the representation table")
    t.add_argument("--dim", type=int, choices=(6, 7), required=True)
    t.add_argument("--range", type=int, default=2, help="parameters range over [-R, R]")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("rep", help="inspect one representation")
    r.add_argument("expr")
    r.add_argument("--profile", action="store_true", help="print a, b (and c, d in dim 6)")
    r.add_argument("--weights", action="store_true", help="print the complexified weights")
    r.add_argument("--q1", action="store_true", help="print q1 of the associated bundle")
    r.set_defaults(func=cmd_rep)

    e = sub.add_parser("enumerate", help="list canonical representations")
    e.add_argument("--dim", type=int, required=True)
    e.add_argument("--kbound", type=int, default=1)
    e.add_argument("--profile", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    d = sub.add_parser("decide", help="run a decision procedure")
    d.add_argument("--manifold", required=True)
    d.add_argument("--bundle")
    d.add_argument("--bundle2", help="second bundle for --op iso")
    d.add_argument("--rep")
    d.add_argument("--lift", help="JSON file with the class l in H^2")
    d.add_argument("--op", choices=OPS, default="auto")
    d.add_argument("--method", choices=("fast", "enumerate"), default="fast")
    d.add_argument("--k", type=int, default=4, help="number of sections for --op sections")
    d.add_argument("--u", help="class in H^4, e.g. 2 or [1,0]")
    d.add_argument("--v", help="class in H^6")
    d.add_argument("--case", help="select one case of sp1/cor6 for the exit code")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_decide)

    v = sub.add_parser("validate", help="check a manifold model")
    v.add_argument("--manifold", required=True)
    v.set_defaults(func=cmd_validate)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as e:
        print(f"error: {e}", file=err)
        return 2
    except (ModelError, ValueError, OSError) as e:
        print(f"error: {e}", file=err)
        return 2
    except SystemExit as e:  # --help
        return int(e.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
