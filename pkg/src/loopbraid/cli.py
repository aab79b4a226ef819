"""Command line front end.

    loopbraid eval -n 3 "s1 s2 s1"
    loopbraid equal -n 3 "s1 s2 s1" "s2 s1 s2"
    loopbraid relations -n 4
    loopbraid check -n 3 "s1 t2 r1'"
    loopbraid selftest

Exit status: 0 on success (including "not-equal"), 1 when a relation or
golden check fails, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .aggmorph import format_morphism, morphism_from_json, morphism_to_json, parse_morphism
from .golden import run_golden
from .liftedartin import BraidParseError, dahm, equal_in_group, evaluate, parse_braid_word, verify_relations
from .membership import artin_conditions, conjugate_parts, conserves_flux, goldsmith_form, report_lines
from .aggmorph import word_to_json


class UsageError(Exception):
    pass


def _word(text, n):
    try:
        return parse_braid_word(text, n)
    except BraidParseError as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}") from None


def cmd_eval(args, out):
    f = evaluate(_word(args.word, args.n))
    if args.json:
        out.write(json.dumps(morphism_to_json(f.forward)) + "\n")
    else:
        out.write(format_morphism(f.forward) + "\n")
    return 0


def cmd_equal(args, out):
    same = equal_in_group(_word(args.word1, args.n), _word(args.word2, args.n))
    if args.json:
        out.write(json.dumps({"equal": same}) + "\n")
    else:
        out.write(("equal" if same else "not-equal") + "\n")
    return 0


def cmd_relations(args, out):
    results = verify_relations(args.n)
    ok = all(r.passed for r in results)
    if args.json:
        payload = [
            {
                "relation": r.relation,
                "indices": list(r.indices),
                "lhs": str(r.lhs),
                "rhs": str(r.rhs),
                "passed": r.passed,
                "mismatched": list(r.mismatched),
            }
            for r in results
        ]
        out.write(json.dumps({"n": args.n, "passed": ok, "results": payload}) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
            if not r.passed:
                out.write("  lhs image:\n    " + r.lhs_image.replace("\n", "\n    ") + "\n")
                out.write("  rhs image:\n    " + r.rhs_image.replace("\n", "\n    ") + "\n")
        out.write(f"{sum(r.passed for r in results)}/{len(results)} relation instances hold\n")
    return 0 if ok else 1


def cmd_check(args, out):
    f = evaluate(_word(args.word, args.n))
    if args.json:
        endo = dahm(_word(args.word, args.n))
        form = goldsmith_form(endo)
        conj, prod = artin_conditions(endo)
        parts = conjugate_parts(endo)
        payload = {
            "generators": [
                None if p is None else {"target": p[0], "sign": p[1], "conjugator": word_to_json(p[2])}
                for p in parts
            ],
            "goldsmith": form is not None,
            "artin": {"conjugating": conj, "product_fixed": prod},
            "flux_conserved": conserves_flux(f),
        }
        out.write(json.dumps(payload) + "\n")
    else:
        out.write("\n".join(report_lines(f)) + "\n")
    return 0


def cmd_selftest(args, out):
    results = run_golden()
    if args.json:
        out.write(json.dumps([{"name": r.name, "passed": r.passed, "failures": r.failures} for r in results]) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    return 0 if all(r.passed for r in results) else 1


def cmd_parse(args, out):
    # re-reads printed automorphisms from stdin; used by round-trip tests
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    try:
        f = morphism_from_json(text) if args.json else parse_morphism(text, args.n)
    except (ValueError, KeyError, IndexError) as exc:
        raise UsageError(f"cannot parse automorphism: {exc}") from None
    out.write((json.dumps(morphism_to_json(f)) if args.json else format_morphism(f)) + "\n")
    return 0


def _rank(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("rank must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="loopbraid", description="Lifted Artin representation of extended loop braid groups.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="{eval,equal,relations,check,selftest}")

    p = sub.add_parser("eval", parents=[common], help="print the automorphism of a braid word")
    p.add_argument("-n", type=_rank, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("equal", parents=[common], help="decide whether two words are equal")
    p.add_argument("-n", type=_rank, required=True)
    p.add_argument("word1")
    p.add_argument("word2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("relations", parents=[common], help="verify every presentation relation")
    p.add_argument("-n", type=_rank, required=True)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("check", parents=[common], help="conjugating-form, Artin and flux report")
    p.add_argument("-n", type=_rank, required=True)
    p.add_argument("word")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("selftest", parents=[common], help="run the rank-3 reference computations")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("parse", parents=[common])
    p.add_argument("-n", type=_rank, default=None)
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_parse)
    # keep the round-trip helper out of --help
    sub._choices_actions = [a for a in sub._choices_actions if a.dest != "parse"]
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if args.command == "relations" and args.n < 2:
        print("loopbraid: relations need -n >= 2", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except (UsageError, IndexError) as exc:
        print(f"loopbraid: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
