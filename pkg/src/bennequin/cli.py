"""Command-line interface: ``bennequin {braid,front,torus,verify,corpus}``.

Exit codes: 0 success, 1 verification or corpus violation, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from . import braid as br
from . import front as fr
from . import suites
from .bounds import BoundReport, sharp_bound_from_braid, sharp_bound_from_front, torus_knot_invariants
from .corpus import CorpusError, load_corpus, verify_corpus, violations

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _emit(payload: dict, as_json: bool, lines: list[str], out) -> None:
    if as_json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _bound_lines(report: BoundReport | None) -> list[str]:
    if report is None:
        return []
    lines = ["bounds:"]
    for b in report.bounds:
        rel = ">=" if b.direction == "lower" else "<="
        chain = " > ".join(step.rule for step in b.derivation)
        lines.append(f"  {b.target} {rel} {b.value}    [{chain}]")
    return lines


def _read_input(args) -> str:
    if args.file is not None:
        if args.word is not None:
            raise UsageError("give the input either as an argument or with --file, not both")
        try:
            return Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    if args.word is None:
        raise UsageError("missing input: pass it as an argument or with --file")
    return args.word


def cmd_braid(args, out) -> int:
    b = br.parse_braid(_read_input(args), args.strands)
    x_plus, x_minus = br.crossing_counts(b)
    components = br.component_count(b)
    invariants = {
        "strands": b.strands,
        "x_plus": x_plus,
        "x_minus": x_minus,
        "writhe": x_plus - x_minus,
        "components": components,
        "is_knot": components == 1,
        "self_linking": br.self_linking(b),
    }
    report = sharp_bound_from_braid(b) if components == 1 else None
    payload = {
        "tool_version": __version__,
        "subject": {"kind": "braid", "strands": b.strands, "word": br.render_braid(b)},
        "invariants": invariants,
        "bounds": report.to_dict()["bounds"] if report else [],
    }
    lines = [f"braid: [{br.render_braid(b)}] on {b.strands} strands"]
    lines += [f"{k}: {v}" for k, v in invariants.items()]
    if report is None:
        lines.append("closure is a link; knot bounds not applicable")
    _emit(payload, args.json, lines + _bound_lines(report), out)
    return EXIT_OK


def cmd_front(args, out) -> int:
    front = fr.parse_front(_read_input(args))
    of = fr.orient(front)
    if args.reverse:
        of = fr.reverse_orientation(of)
    report = sharp_bound_from_front(of)
    invariants = {
        "components": front.component_count(),
        "writhe": fr.writhe(of),
        "right_cusps": front.count(fr.RIGHT_CUSP),
        "tb": fr.thurston_bennequin(of),
        "rot": fr.rotation_number(of),
        "pushoff_sl_positive": fr.transverse_pushoff_sl(of, 1),
        "pushoff_sl_negative": fr.transverse_pushoff_sl(of, -1),
    }
    payload = {
        "tool_version": __version__,
        "subject": report.subject,
        "invariants": invariants,
        "bounds": report.to_dict()["bounds"],
    }
    lines = [f"front: [{fr.render_front(front)}] ({report.subject['orientation']} orientation)"]
    lines += [f"{k}: {v}" for k, v in invariants.items()]
    _emit(payload, args.json, lines + _bound_lines(report), out)
    return EXIT_OK


def cmd_torus(args, out) -> int:
    try:
        t = torus_knot_invariants(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = sharp_bound_from_braid(br.torus_braid(args.p, args.q))
    invariants = {k: v for k, v in t.to_dict().items() if k not in ("p", "q")}
    payload = {
        "tool_version": __version__,
        "subject": {"kind": "torus", "p": args.p, "q": args.q, "braid": report.subject},
        "invariants": invariants,
        "bounds": report.to_dict()["bounds"],
    }
    lines = [f"torus knot T({args.p},{args.q})"]
    lines += [f"{k}: {v}" for k, v in invariants.items()]
    lines.append(f"braid: [{report.subject['word']}] on {args.p} strands")
    _emit(payload, args.json, lines + _bound_lines(report), out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.suite not in suites.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(suites.SUITES)}")
    if args.suite == "torus-equality":
        params = {"max": args.max}
        result = suites.torus_equality(args.max)
    else:
        params = {"samples": args.samples, "seed": args.seed}
        if args.samples is None:
            params["samples"] = 1000 if args.suite == "markov" else 500
        result = suites.SUITES[args.suite](params["samples"], args.seed)
    payload = {"tool_version": __version__, "subject": {"suite": args.suite, **params}, "result": result.to_dict()}
    verdict = "pass" if result.passed else "FAIL"
    lines = [f"{args.suite}: {verdict}  samples={result.samples} checks={result.checks} failures={len(result.failures)}"]
    lines += [f"  {f}" for f in result.failures[:20]]
    _emit(payload, args.json, lines, out)
    return EXIT_OK if result.passed else EXIT_VIOLATION


def cmd_corpus(args, out) -> int:
    path = args.file if args.file is not None else args.word
    if path is None:
        raise UsageError("missing corpus path")
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    findings = verify_corpus(load_corpus(path))
    bad = violations(findings)
    payload = {
        "tool_version": __version__,
        "subject": {"corpus": str(path)},
        "summary": {"findings": len(findings), "violations": len(bad)},
        "findings": [f.to_dict() for f in findings],
    }
    lines = [f"{len(findings)} findings, {len(bad)} violations"]
    for f in findings:
        lines.append(f"  {f.verdict:10} {f.id}: {f.inequality}: {f.relation}  {f.observed}")
    _emit(payload, args.json, lines, out)
    return EXIT_VIOLATION if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="bennequin",
        description="Classical invariants of braids and fronts, and the s#, s and g4 bounds they imply.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("braid", parents=[common], help="invariants and bounds of a braid closure")
    p.add_argument("word", nargs="?", help='signed generator indices, e.g. "1 -2 1"')
    p.add_argument("--strands", type=int, help="strand count (default: max|k| + 1)")
    p.add_argument("--file", help="read the word from a file")
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("front", parents=[common], help="tb, rot and bounds of a Legendrian front")
    p.add_argument("word", nargs="?", help='slice events, e.g. "L1 X1 R1"')
    p.add_argument("--file", help="read the front from a file")
    p.add_argument("--reverse", action="store_true", help="use the reversed orientation")
    p.set_defaults(func=cmd_front)

    p = sub.add_parser("torus", parents=[common], help="closed-form invariants of T(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=", ".join(suites.SUITES))
    p.add_argument("--max", type=int, default=13, help="largest q for torus-equality (default 13)")
    p.add_argument("--samples", type=int, help="sample count for randomized suites")
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED, help="SplitMix64 seed (default 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="check a CSV corpus of asserted invariants")
    p.add_argument("word", nargs="?", metavar="PATH", help="corpus CSV file")
    p.add_argument("--file", help="corpus CSV file")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, CorpusError, br.ParseError, br.NotAKnotError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
