"""``rootspec`` command line: thin adapters over the library."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import checks, complementarity as comp, correlations as corr, io, search, transforms as tf

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FUNCTION_CORRELATIONS = ("cross", "nega", "root")
SEQUENCE_KINDS = {"seq-aperiodic": "aperiodic", "seq-periodic": "periodic", "seq-nega": "nega"}
TRANSFORM_KINDS = ("walsh", "gwalsh", "nega", "root")


class UsageError(Exception):
    pass


def _emit(obj, out: Optional[str]) -> None:
    text = io.dump_json(obj, out)
    if out is None:
        print(text)


def _spec_for(args, n: int, required: bool) -> Optional[tf.RootSpec]:
    if args.spec is None:
        if required:
            raise UsageError("--spec is required for kind=root")
        return None
    spec = io.spec_from_json(io.load_json(args.spec), where=args.spec)
    if spec.n != n:
        raise io.FormatError(f"{args.spec}: field 'n' is {spec.n} but the input has n={n}")
    return spec


def _load_functions(paths: Sequence[str]):
    out = []
    for p in paths:
        raw = io.load_json(p)
        if isinstance(raw, list) or (isinstance(raw, dict) and "functions" in raw):
            out.extend(io.functions_from_json(raw, where=p))
        else:
            out.append(io.function_from_json(raw, where=p))
    return out


def _spectrum(args, F) -> tf.Spectrum:
    if args.kind == "walsh":
        if F.k != 1:
            raise io.FormatError(f"{args.input}: field 'k' must be 1 for kind=walsh")
        return tf.root_hadamard(F, tf.RootSpec.trivial(F.n), args.mode, kind="walsh")
    if args.kind == "gwalsh":
        return tf.root_hadamard(F, tf.RootSpec.trivial(F.n), args.mode, kind="generalized")
    if args.kind == "nega":
        return tf.root_hadamard(F, tf.RootSpec.nega(F.n), args.mode, kind="nega")
    return tf.root_hadamard(F, _spec_for(args, F.n, True), args.mode, kind="root")


# ---------------------------------------------------------------------------
# subcommands

def cmd_transform(args) -> int:
    F = io.function_from_json(io.load_json(args.input), where=args.input)
    _emit(_spectrum(args, F).to_json(), args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    F = io.function_from_json(io.load_json(args.input), where=args.input)
    cls = tf.classify_spectrum(_spectrum(args, F), tol=args.tol)
    _emit({"input": args.input, "transform": args.kind, **cls.to_json()}, args.output)
    return EXIT_OK


def cmd_correlate(args) -> int:
    if args.kind in SEQUENCE_KINDS:
        a = io.sequence_from_json(io.load_json(args.inputs[0]), where=args.inputs[0])
        b = io.sequence_from_json(io.load_json(args.inputs[1]), where=args.inputs[1]) if len(args.inputs) > 1 else None
        if b is not None and len(a) != len(b):
            raise io.FormatError(f"{args.inputs[1]}: field 'entries' has length {len(b)}, expected {len(a)}")
        prof = corr.sequence_profile(a, b, SEQUENCE_KINDS[args.kind])
        _emit({"kind": args.kind, "entries": prof.tolist()}, args.output)
        return EXIT_OK
    Fs = _load_functions(args.inputs[:2])
    F = Fs[0]
    G = Fs[1] if len(Fs) > 1 else None
    if G is not None and (G.n, G.k) != (F.n, F.k):
        raise io.FormatError(f"{args.inputs[1]}: fields 'n'/'k' ({G.n}, {G.k}) differ from ({F.n}, {F.k})")
    if args.kind == "cross":
        spec = tf.RootSpec.trivial(F.n)
    elif args.kind == "nega":
        spec = tf.RootSpec.nega(F.n)
    else:
        spec = _spec_for(args, F.n, True)
    prof = corr.root_correlation_profile(F, G, spec, shift=args.shift, mode=args.mode)
    _emit(prof.to_json(), args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.engine == "golay":
        if args.length is None:
            raise UsageError("search golay needs --length")
        pairs = search.search_golay_pairs(args.length, args.kind)
        _emit({"length": args.length, "kind": args.kind, "count": len(pairs),
               "pairs": [[list(a), list(b)] for a, b in pairs]}, args.output)
        return EXIT_OK
    if args.space is None:
        raise UsageError(f"search {args.engine} needs --space")
    space = io.space_from_json(io.load_json(args.space), where=args.space)
    spec = _spec_for(args, space.n, True)
    if args.engine == "root-bent":
        hits = search.search_root_bent(space, spec, jobs=args.jobs)
    else:
        if args.target is None:
            raise UsageError("search profile needs --target")
        target = io.target_from_json(io.load_json(args.target), where=args.target)
        hits = search.search_profile_match(space, spec, target, jobs=args.jobs)
    _emit({"engine": args.engine, "count": len(hits),
           "hits": [io.function_to_json(F) for F in hits]}, args.output)
    return EXIT_OK


def _sequences(paths):
    seqs = []
    for p in paths:
        raw = io.load_json(p)
        if isinstance(raw, dict) and "sequences" in raw:
            seqs.extend(io.sequence_from_json(s, where=f"{p}.sequences[{i}]")
                        for i, s in enumerate(raw["sequences"]))
        else:
            seqs.append(io.sequence_from_json(raw, where=p))
    if len({len(s) for s in seqs}) > 1:
        raise io.FormatError("field 'entries': sequences have different lengths")
    return seqs


def cmd_verify(args) -> int:
    check = args.check
    if check in ("golay", "p-set", "n-set"):
        kind = {"golay": "aperiodic", "p-set": "periodic", "n-set": "nega"}[check]
        verdict = comp.is_complementary_set(_sequences(args.inputs), kind)
        result, holds = verdict.to_json(), verdict.holds
    elif check == "iff-pn":
        seqs = _sequences(args.inputs)
        if len(seqs) != 2:
            raise UsageError("iff-pn takes exactly two sequences")
        report = comp.complementary_iff_P_and_N(*seqs)
        result, holds = report.to_json(), report.agree
    else:
        if check == "la-cross":
            if len(args.inputs) != 2:
                raise UsageError("la-cross takes exactly two function tuples")
            S1, S2 = _load_functions(args.inputs[:1]), _load_functions(args.inputs[1:])
            if len(S1) != len(S2):
                raise io.FormatError(f"{args.inputs[1]}: field 'functions' has {len(S2)} entries, expected {len(S1)}")
            Fs = S1 + S2
        else:
            Fs = _load_functions(args.inputs)
        if len({(F.n, F.k) for F in Fs}) != 1:
            raise io.FormatError("fields 'n'/'k' differ between the input functions")
        spec = _spec_for(args, Fs[0].n, True)
        if check == "la-set":
            verdict = comp.is_la_complementary_set(Fs, spec)
            result, holds = verdict.to_json(), verdict.holds
        elif check == "la-cross":
            verdict = comp.is_la_crosscomplementary(S1, S2, spec)
            result, holds = verdict.to_json(), verdict.holds
        else:
            report = comp.verify_component_complementarity(Fs, spec)
            result, holds = report.to_json(), report.agree
    _emit({"check": check, "holds": holds, "result": result}, args.output)
    return EXIT_OK if holds else EXIT_FAIL


def _table_override(path: str) -> tuple:
    raw = io.load_json(path)
    rows = raw.get("anf") if isinstance(raw, dict) else raw
    if not isinstance(rows, list) or not all(isinstance(r, str) for r in rows):
        raise io.FormatError(f"{path}: field 'anf' must be a list of ANF strings")
    return tuple(rows)


def cmd_verify_paper(args) -> int:
    ctx = checks.Context()
    if args.f_table:
        ctx.f_table = _table_override(args.f_table)
    if args.g_table:
        ctx.g_table = _table_override(args.g_table)
    try:
        results = checks.run_checks(args.only, ctx)
    except KeyError as exc:
        raise UsageError(f"--only: {exc.args[0]}") from None
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.key:<28} {r.seconds:7.2f}s  {r.detail}", file=sys.stderr)
    if args.output:
        io.dump_json([r.to_json() for r in results], args.output)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser

def _jobs_default() -> int:
    try:
        return search.default_jobs()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rootspec", description="Root-Hadamard transforms and correlations")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, spec=True):
        if spec:
            sp.add_argument("--spec", help="root spec JSON (required for kind=root)")
        sp.add_argument("-o", "--output", help="write JSON here instead of stdout")

    for name, fn, helptext in (("transform", cmd_transform, "spectrum of a function"),
                               ("classify", cmd_classify, "bent / plateaued / landscape class")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--kind", choices=TRANSFORM_KINDS, default="root")
        sp.add_argument("--mode", choices=("exact", "float"), default="exact")
        sp.add_argument("--tol", type=float, default=1e-9, help="float-mode tolerance")
        sp.add_argument("input")
        common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("correlate", help="correlation profile of functions or sequences")
    sp.add_argument("--kind", choices=FUNCTION_CORRELATIONS + tuple(SEQUENCE_KINDS), default="root")
    sp.add_argument("--shift", choices=corr.SHIFTS, default="first",
                    help="which argument carries the shift (function kinds)")
    sp.add_argument("--mode", choices=("exact", "float"), default="exact")
    sp.add_argument("inputs", nargs="+", metavar="input")
    common(sp)
    sp.set_defaults(func=cmd_correlate)

    sp = sub.add_parser("search", help="exhaustive search")
    sp.add_argument("engine", choices=("root-bent", "profile", "golay"))
    sp.add_argument("--space")
    sp.add_argument("--target")
    sp.add_argument("--jobs", type=int, default=None, help="worker processes (default $ROOTSPEC_JOBS or 1)")
    sp.add_argument("--length", type=int, help="sequence length for golay")
    sp.add_argument("--kind", choices=("aperiodic", "periodic", "nega"), default="aperiodic")
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="complementarity verdicts")
    sp.add_argument("--check", required=True,
                    choices=("la-set", "la-cross", "golay", "p-set", "n-set", "iff-pn",
                             "components", "thm-components"))
    sp.add_argument("inputs", nargs="+", metavar="input")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("verify-paper", help="run the full verification battery")
    sp.add_argument("--only", action="append", choices=list(checks.CHECKS), help="run only this check (repeatable)")
    sp.add_argument("--f-table", help="JSON list of ANF strings replacing the first table")
    sp.add_argument("--g-table", help="JSON list of ANF strings replacing the second table")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "jobs", 0) is None:
            args.jobs = _jobs_default()
        return args.func(args)
    except UsageError as exc:
        print(f"rootspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"rootspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
