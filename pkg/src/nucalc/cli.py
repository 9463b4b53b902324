"""Command-line front end.

Exit codes: 0 success / Equivalent / not separated, 1 Inequivalent /
separated, 2 usage or typing error, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .errors import InternalError, NotFirstOrder, NuError, NuTypeError, ParseError
from .evaluation import DEFAULT_FUEL, evaluate
from .logrel import DEFAULT_MAX_PRIV
from .names import NameSet, fresh_atom
from .normal import VerdictKind, canonical_text, equivalent, normalize
from .parser import parse, parse_context
from .printer import name_labels, pretty
from .randsem import AmbientPredicate, distinguish, estimate
from .typecheck import typecheck

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _public(spec: str | None) -> dict:
    if not spec:
        return {}
    labels = [p.strip() for p in spec.split(",") if p.strip()]
    if len(set(labels)) != len(labels):
        raise UsageError("--public names must be distinct")
    return {lab: fresh_atom(lab) for lab in labels}


def _read(path: str, public, context=False):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e
    try:
        return (parse_context if context else parse)(text, public)
    except ParseError as e:
        raise UsageError(f"{path}:{e}") from e


def _predicates(specs):
    try:
        return [AmbientPredicate.parse(s) for s in specs or ()]
    except ValueError as e:
        raise UsageError(str(e)) from e


def _positive(text):
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def cmd_typecheck(args, out):
    public = _public(args.public)
    t = _read(args.file, public)
    out.write(f"{typecheck(t, public.values())}\n")
    return EXIT_OK


def cmd_eval(args, out):
    public = _public(args.public)
    t = _read(args.file, public)
    typecheck(t, public.values())
    r = evaluate(NameSet(public.values()), t, args.fuel)
    labels = name_labels(r.value, r.generated)
    out.write("generated: {" + ", ".join(labels[n] for n in r.generated) + "}\n")
    out.write(f"value: {pretty(r.value, labels)}\n")
    return EXIT_OK


def cmd_normalize(args, out):
    public = _public(args.public)
    t = _read(args.file, public)
    nf = normalize(t, NameSet(public.values()), fuel=args.fuel, max_priv=args.max_priv)
    out.write(canonical_text(nf) + "\n")
    return EXIT_OK


def cmd_equiv(args, out):
    public = _public(args.public)
    m1 = _read(args.left, public)
    m2 = _read(args.right, public)
    v = equivalent(m1, m2, NameSet(public.values()), fuel=args.fuel, max_priv=args.max_priv)
    out.write(f"{v.kind.value}\n")
    if v.reason:
        out.write(f"reason: {v.reason}\n")
    if v.kind is VerdictKind.NOT_FIRST_ORDER:
        raise NotFirstOrder(typecheck(m1, public.values()))
    return EXIT_OK if v.equivalent else EXIT_NEGATIVE


def cmd_sample(args, out):
    public = _public(args.public)
    t = _read(args.file, public)
    report = estimate(t, args.trials, args.seed, _predicates(args.predicate), fuel=args.fuel)
    out.write(report.to_json() + "\n")
    return EXIT_OK


def cmd_distinguish(args, out):
    public = _public(args.public)
    m1 = _read(args.left, public)
    m2 = _read(args.right, public)
    ctx = _read(args.context, public, context=True)
    d = distinguish(m1, m2, ctx, args.trials, args.seed, _predicates(args.predicate),
                    fuel=args.fuel)
    out.write(d.left.to_json() + "\n")
    out.write(d.right.to_json() + "\n")
    out.write(json.dumps({"separated": d.separated}) + "\n")
    return EXIT_NEGATIVE if d.separated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nucalc", description="ν-calculus workbench")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help, files=("file",)):
        sp = sub.add_parser(name, help=help)
        for f in files:
            sp.add_argument(f)
        sp.add_argument("--public", help="comma-separated free names, bound in order")
        sp.add_argument("--fuel", type=_positive, default=DEFAULT_FUEL)
        sp.set_defaults(func=fn)
        return sp

    verb("typecheck", cmd_typecheck, "print the type of a program")
    verb("eval", cmd_eval, "evaluate a program")
    for sp in (verb("normalize", cmd_normalize, "print the canonical privacy normal form"),
               verb("equiv", cmd_equiv, "decide observational equivalence",
                    files=("left", "right"))):
        sp.add_argument("--max-priv", type=_positive, default=DEFAULT_MAX_PRIV)
    for sp in (verb("sample", cmd_sample, "Monte Carlo estimate of P(program = true)"),
               verb("distinguish", cmd_distinguish, "run two programs in a context",
                    files=("left", "right"))):
        sp.add_argument("--trials", type=_positive, required=True)
        sp.add_argument("--seed", type=int, required=True)
        sp.add_argument("--predicate", action="append", metavar="LABEL:THRESHOLD",
                        help="ambient predicate r -> (r < THRESHOLD), e.g. step:0.5")
        if sp.prog.endswith("distinguish"):
            sp.add_argument("--context", required=True, help="context file, `@` marks the hole")
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, NuTypeError, NotFirstOrder) as e:
        err.write(f"nucalc: error: {e}\n")
        return EXIT_USAGE
    except InternalError as e:
        err.write(f"nucalc: internal error: {e}\n")
        return EXIT_INTERNAL
    except NuError as e:
        err.write(f"nucalc: error: {e}\n")
        return EXIT_USAGE


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
