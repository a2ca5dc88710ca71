"""Command line entry point: ``relkit analyze|equiv|synth|random``."""

from __future__ import annotations

import argparse
import os
import random
import sys

from .decompose import decompose
from .equiv import PROFILES, compare, random_relation, synthesize
from .errors import ParseError, RelkitError, UnsplitEigenvalues
from .field import FIELDS, RATIONAL, format_poly, format_scalar, parse_scalar
from .jsonio import dumps, load_json, pencil_from_json, relation_from_json, relation_to_json, weyr_from_json
from .pencil import kernel_rep, range_rep
from .report import build_report, format_text

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_UNSPLIT = 2
EXIT_NOT_EQUIVALENT = 3


def _default_field() -> str:
    f = os.environ.get("RELKIT_FIELD", RATIONAL)
    return f if f in FIELDS else RATIONAL


def _parse_eigs(text: str | None) -> list:
    if not text:
        return []
    return [parse_scalar(s.strip()) for s in text.split(",") if s.strip()]


def load_relation(path: str, rep: str | None = None):
    """``(relation, source description)`` from a relation, pencil or bundle file."""
    d = load_json(path)
    if isinstance(d, dict) and "relation" in d and "n" not in d:
        d = d["relation"]
    if isinstance(d, dict) and "E" in d and "F" in d:
        if rep not in ("kernel", "range"):
            raise ParseError("pencil input needs --rep kernel or --rep range")
        P = pencil_from_json(d)
        A = kernel_rep(P) if rep == "kernel" else range_rep(P)
        return A, {"kind": "pencil", "rep": rep, "shape": list(P.shape)}
    try:
        return relation_from_json(d), {"kind": "relation"}
    except RelkitError as ex:
        raise ParseError(str(ex)) from None


def _emit(text: str):
    sys.stdout.write(text)


def cmd_analyze(args) -> int:
    A, source = load_relation(args.path, args.rep)
    extra = _parse_eigs(args.eigs)
    try:
        D = decompose(A, args.field, extra)
    except UnsplitEigenvalues as ex:
        factors = [format_poly(f) for f in ex.factors]
        if args.json:
            _emit(dumps({"error": "unsplit_eigenvalues", "field": args.field, "unsplit_factors": factors}))
        else:
            print(f"decomposition blocked: eigenvalues outside the {args.field} field", file=sys.stderr)
            for f in factors:
                print(f"  unsplit factor: {f}", file=sys.stderr)
            print("hint: use --field gaussian or supply roots with --eigs", file=sys.stderr)
        return EXIT_UNSPLIT
    for lam in D.spectral.rejected_eigs:
        print(f"warning: rejected --eigs value {format_scalar(lam)} (not a verified proper eigenvalue)", file=sys.stderr)
    if args.json:
        _emit(dumps(build_report(D, source)))
    else:
        _emit(format_text(D))
    return EXIT_OK


def cmd_equiv(args) -> int:
    A, _ = load_relation(args.path_a, args.rep)
    B, _ = load_relation(args.path_b, args.rep)
    try:
        res = compare(A, B, args.field, _parse_eigs(args.eigs))
    except UnsplitEigenvalues as ex:
        print("cannot compare: unsplit factors " + ", ".join(format_poly(f) for f in ex.factors), file=sys.stderr)
        return EXIT_UNSPLIT
    if args.json:
        _emit(dumps({
            "equivalent": res.equivalent,
            "weyr_a": res.weyr_a.to_json(),
            "weyr_b": res.weyr_b.to_json(),
            "difference": res.difference,
        }))
    else:
        print("strictly equivalent" if res.equivalent else f"not equivalent: first difference at {res.difference}")
    return EXIT_OK if res.equivalent else EXIT_NOT_EQUIVALENT


def cmd_synth(args) -> int:
    wc = weyr_from_json(load_json(args.path))
    _emit(dumps(relation_to_json(synthesize(wc, args.ambient))))
    return EXIT_OK


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    A, wc = random_relation(rng, args.max_dim, args.profile, args.field, pad=not args.no_pad)
    rel, truth = relation_to_json(A), wc.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(rel))
        if args.truth_out:
            with open(args.truth_out, "w", encoding="utf-8") as fh:
                fh.write(dumps(truth))
    else:
        _emit(dumps({"relation": rel, "weyr": truth, "seed": args.seed, "profile": args.profile}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="relkit", description="Jordan-like decomposition of linear relations")
    sub = p.add_subparsers(dest="command", required=True)

    def field_opts(q):
        q.add_argument("--field", choices=FIELDS, default=_default_field(),
                       help="scalar field (default: $RELKIT_FIELD or rational)")
        q.add_argument("--eigs", help="comma separated eigenvalues to try, e.g. 'i,-i'")
        q.add_argument("--rep", choices=("kernel", "range"), help="representation for pencil input")
        q.add_argument("--json", action="store_true", help="emit JSON")

    a = sub.add_parser("analyze", help="decompose a relation or pencil")
    a.add_argument("path")
    field_opts(a)
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("equiv", help="test strict equivalence of two relations")
    e.add_argument("path_a")
    e.add_argument("path_b")
    field_opts(e)
    e.set_defaults(func=cmd_equiv)

    s = sub.add_parser("synth", help="canonical relation for a Weyr characteristic")
    s.add_argument("path")
    s.add_argument("--ambient", type=int, help="ambient dimension (default: minimal)")
    s.set_defaults(func=cmd_synth)

    r = sub.add_parser("random", help="random relation with known Weyr characteristic")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--profile", choices=PROFILES, default="mixed")
    r.add_argument("--max-dim", type=int, default=10)
    r.add_argument("--field", choices=FIELDS, default=_default_field())
    r.add_argument("--no-pad", action="store_true", help="ambient space equals dom + ran")
    r.add_argument("--out", help="write the relation here instead of stdout")
    r.add_argument("--truth-out", help="with --out, write the characteristic here")
    r.set_defaults(func=cmd_random)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RelkitError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
