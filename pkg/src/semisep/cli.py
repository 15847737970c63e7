"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 bad input or usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import core
from .congruence import (
    Congruence,
    all_congruences,
    quotient,
    separate,
)
from .core import FiniteSemigroup, SemigroupError
from .deciders import classify
from .harness import CAPS, SCENARIOS, STATEMENT_LEVEL, run_scenario
from .presentations import (
    PresentationError,
    adian_embeddable,
    normal_form,
    orient,
    parse_presentation,
    parse_word,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_sgp(path: str) -> FiniteSemigroup:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return core.from_table(text)


def _presentation(arg: str):
    p = Path(arg)
    text = p.read_text(encoding="utf-8") if "|" not in arg and p.is_file() else arg
    return parse_presentation(text.strip())


def _elements(S, spec: str | None) -> list[int]:
    if not spec:
        return []
    return [S.index(x.strip()) for x in spec.split(",") if x.strip()]


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _write_semigroup(args, S: FiniteSemigroup) -> None:
    if args.out:
        Path(args.out).write_text(core.to_table(S), encoding="utf-8")


def _with_cap(args, fn, *a):
    if args.force:
        print("warning: size caps lifted by --force", file=sys.stderr)
    return fn(*a, force=args.force) if args.force else fn(*a)


# -- subcommands ---------------------------------------------------------------


def cmd_classify(args) -> int:
    S = _read_sgp(args.table)
    report = classify(S)
    _emit(args, report.to_dict(), report.render())
    return EXIT_OK


def cmd_adian(args) -> int:
    res = adian_embeddable(_presentation(args.presentation))

    def edges(g):
        return [list(e) for e in g.edges]

    payload = {"verdict": res.verdict, "left_edges": edges(res.left), "right_edges": edges(res.right)}

    def fmt(g):
        return ", ".join("{" + f"{x},{y}" + "}" for x, y in g.edges) or "none"

    text = f"{res.verdict}\nleft graph: {fmt(res.left)}\nright graph: {fmt(res.right)}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_nf(args) -> int:
    P = _presentation(args.presentation)
    RS = orient(P)
    word = parse_word(args.word, P.generators)
    nf = normal_form(RS, word)
    _emit(args, {"word": word, "normal_form": nf}, nf)
    return EXIT_OK


def cmd_product(args) -> int:
    S, T = _read_sgp(args.left), _read_sgp(args.right)
    P = _with_cap(args, core.direct_product, S, T)
    _write_semigroup(args, P)
    _emit(args, {"size": P.size, "table": [list(r) for r in P.table], "names": P.names}, core.to_table(P).rstrip("\n"))
    return EXIT_OK


def cmd_quotient(args) -> int:
    S = _read_sgp(args.table)
    if args.ideal:
        Q = core.rees_quotient(S, _elements(S, args.ideal))
    elif args.congruence:
        text = Path(args.congruence).read_text(encoding="utf-8") if Path(args.congruence).is_file() else args.congruence
        Q = quotient(S, Congruence.from_json(S, text))
    else:
        raise UsageError("quotient needs --ideal or --congruence")
    _write_semigroup(args, Q)
    _emit(args, {"size": Q.size, "table": [list(r) for r in Q.table], "names": Q.names}, core.to_table(Q).rstrip("\n"))
    return EXIT_OK


def cmd_congruences(args) -> int:
    S = _read_sgp(args.table)
    cap = S.size if args.force else 9
    congs = all_congruences(S, cap=cap)
    payload = {"count": len(congs), "congruences": [{"classes": [list(c) for c in r.classes]} for r in congs]}
    text = "\n".join([f"{len(congs)} congruences"] + [r.to_json() for r in congs])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_separate(args) -> int:
    S = _read_sgp(args.table)
    s = S.index(args.element)
    Y = _elements(S, args.from_)
    sep = separate(S, s, Y)
    payload = {"classes": [list(c) for c in sep.congruence.classes], "minimized": sep.minimized}
    text = sep.congruence.to_json() + ("" if sep.minimized else "\n(not minimized)")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_golubov(args) -> int:
    S = _read_sgp(args.table)
    a = S.index(args.a)
    if args.b is None:
        n = core.distinct_golubov_count(S, a)
        _emit(args, {"a": a, "distinct_sets": n}, f"{n} distinct sets [{S.name(a)}:s]")
        return EXIT_OK
    b = S.index(args.b)
    G = core.golubov_set(S, a, b)

    def nm(u):
        return "1" if u == core.ONE else S.name(u)

    pairs = G.sorted_pairs()
    payload = {"a": a, "b": b, "pairs": [[u, v] for u, v in pairs]}
    text = "\n".join([f"[{S.name(a)}:{S.name(b)}] has {len(pairs)} pairs"] + [f"({nm(u)}, {nm(v)})" for u, v in pairs])
    _emit(args, payload, text)
    return EXIT_OK


_BOUND_FLAGS = {"maxlen", "maxn", "bound", "max_size", "maxexp", "max_order"}


def cmd_verify(args) -> int:
    if args.force:
        raise UsageError("scenario bounds cannot be lifted with --force")
    given = {k: getattr(args, k) for k in _BOUND_FLAGS if getattr(args, k) is not None}
    if args.scenario == "all":
        names = list(SCENARIOS)
        if given:
            raise UsageError("bound flags apply to a single scenario, not 'all'")
    elif args.scenario in SCENARIOS:
        names = [args.scenario]
        unknown = set(given) - set(CAPS[args.scenario])
        if unknown:
            raise UsageError(f"{args.scenario} does not take {sorted(unknown)}")
        for k, v in given.items():
            if not 1 <= v <= CAPS[args.scenario][k]:
                raise UsageError(f"{args.scenario}: {k}={v} outside [1, {CAPS[args.scenario][k]}]")
    else:
        raise UsageError(f"unknown scenario {args.scenario!r}; choose from {', '.join(SCENARIOS)} or all")
    reports = [run_scenario(name, **given) for name in names]
    if args.format == "json":
        for r in reports:
            print(r.to_json())
    else:
        if args.scenario == "all":
            print("statement-level only (no finite scenario): " + "; ".join(STATEMENT_LEVEL))
        for r in reports:
            line = f"{r.scenario}: {r.status} ({r.checked} checked, {r.ms:.0f} ms)"
            if not r.passed:
                line += f" counterexample: {json.dumps(r.counterexample)}"
            print(line)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write a semigroup result as .sgp")
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS, help="lift size caps")

    parser = argparse.ArgumentParser(prog="semisep", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="preservation report for a finite semigroup")
    p.add_argument("table")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("adian", parents=[common], help="Adian's no-cycles criterion")
    p.add_argument("presentation", help="inline 'a b c | ab^2c=b' or a file")
    p.set_defaults(func=cmd_adian)

    p = sub.add_parser("nf", parents=[common], help="normal form under the oriented relations")
    p.add_argument("presentation")
    p.add_argument("word")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("product", parents=[common], help="direct product of two tables")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("quotient", parents=[common], help="quotient by an ideal or a congruence")
    p.add_argument("table")
    p.add_argument("--ideal", help="comma-separated elements of an ideal (Rees quotient)")
    p.add_argument("--congruence", help='JSON {"classes": [...]} inline or a file')
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("congruences", parents=[common], help="list every congruence")
    p.add_argument("table")
    p.set_defaults(func=cmd_congruences)

    p = sub.add_parser("separate", parents=[common], help="coarsest congruence separating an element from a set")
    p.add_argument("table")
    p.add_argument("--element", required=True)
    p.add_argument("--from", dest="from_", default="", help="comma-separated elements")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("golubov", parents=[common], help="the set [a:b], or the number of distinct [a:s]")
    p.add_argument("table")
    p.add_argument("--a", required=True)
    p.add_argument("--b")
    p.set_defaults(func=cmd_golubov)

    p = sub.add_parser("verify", parents=[common], help="run a verification scenario or 'all'")
    p.add_argument("scenario")
    p.add_argument("--maxlen", type=int)
    p.add_argument("--maxn", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--max-size", dest="max_size", type=int)
    p.add_argument("--maxexp", type=int)
    p.add_argument("--max-order", dest="max_order", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "text"), ("out", None), ("force", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (UsageError, SemigroupError, PresentationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
