"""Command-line entry point.

Exit codes: 0 success or relation holds, 1 relation absent / claim failed /
nothing found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import lab
from .algebra import FiniteModule
from .catalog import builtin, builtin_catalog, export_dot, load_path
from .errors import (
    AxiomViolation,
    ModOrderError,
    PatternNotClosed,
    SchemaError,
    ShapeError,
    UnknownClaimId,
    UnknownInstance,
)
from .orders import RELATIONS, decide, lattice_report

EXIT_OK, EXIT_ABSENT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def resolve_element(M: FiniteModule, token: str) -> int:
    """Exact display name first, then ``#k`` as a raw index."""
    try:
        return M.index(token)
    except KeyError:
        pass
    if token.startswith("#") and token[1:].isdigit():
        k = int(token[1:])
        if k < M.size:
            return k
    raise UsageError(f"unknown element {token!r}")


def _split(value: str) -> list[str] | None:
    if value == "all":
        return None
    return [v for v in value.split(",") if v]


def _dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, default=lab._json_default)


def _pair_names(M: FiniteModule, idx) -> str:
    return "(" + ", ".join(M.elements[int(i)] for i in idx) + ")"


# --- subcommands -----------------------------------------------------------


def cmd_validate(args, out) -> int:
    try:
        if args.instance:
            M = load_path(args.instance)
            label = args.instance
        else:
            M = builtin(args.builtin)
            label = args.builtin
    except OSError as exc:
        raise UsageError(f"cannot read {args.instance}: {exc.strerror}") from exc
    except AxiomViolation as exc:
        shown = exc.names if exc.names is not None else exc.elements
        print(f"invalid: {exc.law} fails at {tuple(shown)}", file=out)
        return EXIT_ABSENT
    except PatternNotClosed as exc:
        print(f"invalid: {exc}", file=out)
        return EXIT_ABSENT
    sc = M.scalars
    scalars = f"integers mod {sc.exponent}" if sc.is_integers else f"table ring of order {sc.size}"
    print("valid", file=out)
    print(f"instance: {label}", file=out)
    print(f"elements: {M.size}", file=out)
    print(f"scalars: {scalars}", file=out)
    return EXIT_OK


def cmd_order(args, out) -> int:
    M = builtin(args.builtin)
    m1, m2 = resolve_element(M, args.m1), resolve_element(M, args.m2)
    ctx = lab.context(args.builtin)
    cert = decide(ctx, args.rel, m1, m2)
    if cert is None:
        print("absent", file=out)
        return EXIT_ABSENT
    print("holds", file=out)
    if args.witness:
        print(_dumps(cert.render(ctx)), file=out)
    return EXIT_OK


def cmd_hasse(args, out) -> int:
    M = builtin(args.builtin)
    P = lab.context(args.builtin).poset(args.rel)
    ax = P.axioms
    if not ax.is_partial_order:
        if ax.reflexive is not None:
            print(f"not a partial order: reflexivity fails at {M.elements[ax.reflexive]}", file=out)
        elif ax.antisymmetric is not None:
            print(f"not a partial order: antisymmetry fails at {_pair_names(M, ax.antisymmetric)}", file=out)
        else:
            print(f"not a partial order: transitivity fails at {_pair_names(M, ax.transitive)}", file=out)
        return EXIT_ABSENT
    text = export_dot(P, title=f"{args.builtin} {args.rel}")
    if args.dot:
        try:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.dot}: {exc.strerror}") from exc
        print(f"wrote {args.dot}", file=out)
    else:
        out.write(text)
    print("maximal: " + ", ".join(M.elements[i] for i in P.maximal), file=out)
    rep = lattice_report(P)
    if rep.is_lattice:
        print("lattice: yes", file=out)
    elif rep.no_join:
        print(f"lattice: no (no join for {_pair_names(M, rep.no_join)})", file=out)
    else:
        print(f"lattice: no (no meet for {_pair_names(M, rep.no_meet)})", file=out)
    return EXIT_OK


def cmd_suite(args, out) -> int:
    checks = lab.run_suite(_split(args.catalog), _split(args.claims))
    for c in checks:
        print(f"{c.status:<13} {c.claim} {c.instance}", file=out)
    counts = lab.summarize(checks)
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=out)
    if counts["fails"]:
        print(f"FAILURES: {counts['fails']}", file=out)
        for c in checks:
            if c.status == "fails":
                print(f"  {c.claim} {c.instance} {_dumps(c.payload)}", file=out)
    if args.report:
        try:
            with open(args.report, "w", encoding="utf-8") as fh:
                fh.write(lab.report_json(checks))
        except OSError as exc:
            raise UsageError(f"cannot write {args.report}: {exc.strerror}") from exc
        print(f"report: {args.report}", file=out)
    return EXIT_ABSENT if counts["fails"] else EXIT_OK


def cmd_search(args, out) -> int:
    names = _split(args.catalog) if args.catalog is not None else None
    res = lab.search_counterexample(names, args.property)
    if not res.found:
        print("NotFound", file=out)
        return EXIT_ABSENT
    print(f"found {res.instance} {res.pair[0]} {res.pair[1]}", file=out)
    print("positive " + _dumps(res.positive), file=out)
    print("negative " + _dumps(res.negative), file=out)
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    for d in builtin_catalog():
        print(f"{d.name}\t{d.recipe}\t{d.note}", file=out)
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="modorder", description="Natural partial orders on finite modules.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check ring and module axioms")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--instance", metavar="PATH")
    src.add_argument("--builtin", metavar="NAME")
    v.set_defaults(fn=cmd_validate)

    o = sub.add_parser("order", help="decide one relation instance")
    o.add_argument("--builtin", metavar="NAME", required=True)
    o.add_argument("--rel", choices=RELATIONS, required=True)
    o.add_argument("--m1", required=True)
    o.add_argument("--m2", required=True)
    o.add_argument("--witness", action="store_true")
    o.set_defaults(fn=cmd_order)

    h = sub.add_parser("hasse", help="export the Hasse diagram as DOT")
    h.add_argument("--builtin", metavar="NAME", required=True)
    h.add_argument("--rel", choices=RELATIONS, default="mitsch")
    h.add_argument("--dot", metavar="PATH")
    h.set_defaults(fn=cmd_hasse)

    s = sub.add_parser("suite", help="run the claim registry")
    s.add_argument("--catalog", default="all")
    s.add_argument("--claims", default="all")
    s.add_argument("--report", metavar="PATH")
    s.set_defaults(fn=cmd_suite)

    q = sub.add_parser("search", help="find a counterexample for a property")
    q.add_argument("--property", choices=lab.PROPERTIES, required=True)
    q.add_argument("--catalog", default=None)
    q.set_defaults(fn=cmd_search)

    c = sub.add_parser("catalog", help="list built-in instances")
    c.set_defaults(fn=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.fn(args, out)
    except (UsageError, SchemaError, ShapeError, UnknownInstance, UnknownClaimId) as exc:
        kind = "schema error at " if isinstance(exc, SchemaError) else "error: "
        print(f"{kind}{exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ABSENT


if __name__ == "__main__":
    sys.exit(main())
