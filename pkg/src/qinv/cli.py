"""The ``qinv`` command line.

Subcommands:

    axioms   [--max-color N]
    braid    --word "s1 s2^-1" --colors 1,1 [--m M] [--normalize-framing]
    link     --file F.sld [--m M] [--sum-colorings plain|qdim] [--normalize-framing]
    fusion   --m M [--table] [--json]
    surface  --genus G --m M
    hopf     --file F.json [--check all|H1.1|...|antipode]
    qnormal  --expr "b a" [--check-bialgebra] [--json]

Exit codes: 0 success, 1 domain error (validation and the like), 2 usage.
The generic Laurent ring is the default; --m M switches every scalar to
the cyclotomic ring of order M.  JSON output is stable: keys are emitted
in sorted order.
"""

from __future__ import annotations

import argparse
import json
import sys

from .axioms import run_axiom_suite
from .errors import QinvError
from .fusion import check_ring_axioms, frobenius_data, fusion_ring, surface_invariant
from .hopf import AXIOMS, FiniteBialgebra, check_all, check_antipode, check_axiom
from .links import braid_closure, colored_sum, evaluate, framing_normalize, parse_diagram, validate
from .qcoords import check_bialgebra, counit_antipode_check, normal_form, parse_nc, poly_to_json, render
from .ribbon import parse_braid_word
from .ring import GENERIC, CyclotomicRing, find_truncation_level, value_to_json


def _ring_from_args(args):
    return CyclotomicRing(args.m) if getattr(args, "m", None) else GENERIC


def _emit_value(ring, value):
    print(json.dumps({"ring": ring.describe(), "value": value_to_json(value)}, sort_keys=True))


def _parse_colors(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",") if c != ""]
    except ValueError:
        raise QinvError(f"bad color list {text!r}") from None


def cmd_axioms(args) -> int:
    results = run_axiom_suite(args.max_color)
    failures = 0
    for r in results:
        if r.ok:
            print(f"PASS {r.name}")
        else:
            failures += 1
            print(f"FAIL {r.name}: {r.witness}")
    return 0 if failures == 0 else 1


def cmd_braid(args, parser) -> int:
    colors = _parse_colors(args.colors)
    word = parse_braid_word(args.word)
    k = len(colors)
    if k == 0:
        parser.error("need at least one color")
    for idx, _ in word:
        if idx > k - 1:
            parser.error(f"generator s{idx} needs at least {idx + 1} strands, got {k} colors")
    ring = _ring_from_args(args)
    diagram = braid_closure(word, colors)
    trace = validate(diagram)
    value = evaluate(diagram, ring)
    if args.normalize_framing:
        value = framing_normalize(value, trace.writhe_of_component, trace.color_of_component, ring)
    _emit_value(ring, value)
    return 0


def cmd_link(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        diagram = parse_diagram(fh.read())
    if args.sum_colorings:
        if args.m is None:
            raise QinvError("--sum-colorings requires --m")
        value = colored_sum(diagram, args.m, args.sum_colorings)
        _emit_value(CyclotomicRing(args.m), value)
        return 0
    ring = _ring_from_args(args)
    trace = validate(diagram)
    value = evaluate(diagram, ring)
    if args.normalize_framing:
        value = framing_normalize(value, trace.writhe_of_component, trace.color_of_component, ring)
    _emit_value(ring, value)
    return 0


def cmd_fusion(args) -> int:
    R = fusion_ring(args.m)
    bad = check_ring_axioms(R)
    if bad:
        raise QinvError(f"fusion table failed {bad[0]} at {bad[1]}")
    F = frobenius_data(R)
    if args.json:
        obj = {
            "ell": R.ell,
            "rank": R.rank,
            "N": [[list(R.table[a][b]) for b in range(R.rank)] for a in range(R.rank)],
            "theta": [list(row) for row in F.gram],
        }
        print(json.dumps(obj, sort_keys=True))
        return 0
    print(f"ell = {R.ell}  rank = {R.rank}")
    if args.table:
        for a in range(R.rank):
            for b in range(a, R.rank):
                terms = [f"V_{c}" if n == 1 else f"{n} V_{c}" for c, n in enumerate(R.table[a][b]) if n]
                print(f"V_{a} x V_{b} = {' + '.join(terms) if terms else '0'}")
        print("theta rows:")
        for row in F.gram:
            print("  " + " ".join(str(x) for x in row))
    return 0


def cmd_surface(args) -> int:
    R = fusion_ring(args.m)
    F = frobenius_data(R)
    w = surface_invariant(args.genus, F)
    print(int(w) if w.denominator == 1 else w)
    return 0


def cmd_hopf(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        B = FiniteBialgebra.from_json(json.load(fh))
    if args.check == "all":
        results = check_all(B)
    elif args.check == "antipode":
        results = {"antipode": check_antipode(B)}
    else:
        results = {args.check: check_axiom(B, args.check)}
    failures = 0
    for name in sorted(results):
        witness = results[name]
        if witness is None:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}: witness index {witness}")
    return 0 if failures == 0 else 1


def cmd_qnormal(args) -> int:
    poly = parse_nc(args.expr)
    nf = normal_form(poly)
    if args.json:
        print(json.dumps({"normal_form": render(nf), "terms": poly_to_json(nf)}, sort_keys=True))
    else:
        print(render(nf))
    if args.check_bialgebra:
        bad = check_bialgebra()
        print("PASS coproduct respects the relations" if bad is None else f"FAIL relation {bad[0]}")
        bad2 = counit_antipode_check()
        print("PASS counit/antipode" if bad2 is None else f"FAIL {bad2}")
        if bad or bad2:
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qinv", description="Exact quantum link invariants")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="run the category-axiom suite")
    p.add_argument("--max-color", type=int, default=2, choices=range(0, 5))

    p = sub.add_parser("braid", help="evaluate the closure of a braid word")
    p.add_argument("--word", required=True)
    p.add_argument("--colors", required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--normalize-framing", action="store_true")

    p = sub.add_parser("link", help="evaluate a sliced diagram file")
    p.add_argument("--file", required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--sum-colorings", choices=("plain", "qdim"))
    p.add_argument("--normalize-framing", action="store_true")

    p = sub.add_parser("fusion", help="fusion ring at a root of unity")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--table", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("surface", help="genus-g surface invariant")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("hopf", help="check bialgebra axioms from a JSON file")
    p.add_argument("--file", required=True)
    p.add_argument("--check", default="all", choices=("all", "antipode") + AXIOMS)

    p = sub.add_parser("qnormal", help="normal form in the quantum coordinate algebra")
    p.add_argument("--expr", required=True)
    p.add_argument("--check-bialgebra", action="store_true")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "axioms":
            return cmd_axioms(args)
        if args.command == "braid":
            return cmd_braid(args, parser)
        if args.command == "link":
            return cmd_link(args)
        if args.command == "fusion":
            return cmd_fusion(args)
        if args.command == "surface":
            return cmd_surface(args)
        if args.command == "hopf":
            return cmd_hopf(args)
        if args.command == "qnormal":
            return cmd_qnormal(args)
        parser.error(f"unknown command {args.command!r}")
    except QinvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
