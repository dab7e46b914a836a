"""Command-line front end.

Exit codes: 0 success / property holds, 1 property fails or nothing found,
2 usage or parse errors.  Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import axioms, fixtures, homomorphisms, ideals, model_finder, pathways
from .errors import BudgetExceeded, TGSError
from .ideals import IdealKind
from .textformat import parse_map, parse_subset, parse_tgs, serialize_tgs


class UsageError(Exception):
    pass


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_tgs(fh.read())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _cell(tgs, cell):
    a, x, b, y, c = cell
    S, G = tgs.states, tgs.mediators
    return f"({S[a]},{G[x]},{S[b]},{G[y]},{S[c]})"


def _set(X):
    return "{" + ",".join(X.names()) + "}"


def _kind(text):
    try:
        return IdealKind.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _state(tgs, name):
    if not tgs.has_state(name):
        raise UsageError(f"unknown state {name!r}")
    return tgs.state_index(name)


def _nonempty(tgs, text, flag):
    X = parse_subset(tgs, text)
    if not X:
        raise UsageError(f"{flag} must name at least one state")
    return X


def cmd_verify(args, out):
    tgs = _load(args.file)
    reports = axioms.check_all(tgs, cap=args.max_counterexamples)
    wanted = {"t1": {"T1"}, "t3": {"T3a", "T3b"}, "all": {"T1", "T3a", "T3b"}}[args.axiom]
    ok = True
    for r in reports:
        if r.axiom not in wanted:
            continue
        if r.holds:
            print(f"{r.axiom}: holds", file=out)
            continue
        ok = False
        print(f"{r.axiom}: FAILS ({r.violations} violations)", file=out)
        S, G = tgs.states, tgs.mediators
        for cx in r.counterexamples:
            names = [G[v] if i % 2 else S[v] for i, v in enumerate(cx.args)]
            print(f"  ({','.join(names)}): lhs={S[cx.lhs]} rhs={S[cx.rhs]}", file=out)
    print("result: " + ("pass" if ok else "fail"), file=out)
    return 0 if ok else 1


def cmd_ideals(args, out):
    tgs = _load(args.file)
    found = ideals.enumerate_ideals(tgs, args.kind)
    print(f"{len(found)} {args.kind.value} ideals", file=out)
    if args.enumerate:
        for X in found:
            print(_set(X), file=out)
    return 0


def cmd_closure(args, out):
    tgs = _load(args.file)
    seed = _nonempty(tgs, args.seed, "--seed")
    print(_set(ideals.generate_ideal(tgs, seed, args.kind)), file=out)
    return 0


def cmd_prime(args, out):
    tgs = _load(args.file)
    P = _nonempty(tgs, args.set, "--set")
    v = ideals.is_prime(tgs, P)
    if v:
        print("prime: yes", file=out)
    elif v.reason == "not proper":
        print("prime: no (not proper)", file=out)
    else:
        print(f"prime: no ({v.reason} at {_cell(tgs, v.witness)})", file=out)
    if not ideals.is_chemical_ideal(tgs, P):
        print("semiprime: n/a (not a chemical ideal)", file=out)
    else:
        s = ideals.is_semiprime(tgs, P)
        if s:
            print("semiprime: yes", file=out)
        else:
            print(f"semiprime: no (self-interactions of {tgs.states[s.witness]} "
                  "all lie inside)", file=out)
    return 0 if v else 1


def cmd_paths(args, out):
    tgs = _load(args.file)
    src, tgt = _state(tgs, args.src), _state(tgs, args.tgt)
    max_len = args.max_len if args.max_len is not None else tgs.n
    if max_len < 1:
        raise UsageError("--max-len must be >= 1")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(pathways.to_dot(tgs, src))
    p = pathways.find_pathway(tgs, src, tgt, max_len)
    if p is None:
        print(f"no pathway from {args.src} to {args.tgt} within {max_len} steps", file=out)
        return 1
    print(f"pathway of length {len(p)} from {args.src} to {args.tgt}", file=out)
    prev = p.source
    for k, step in enumerate(p.steps, 1):
        print(f"  {k}: [{_cell(tgs, step.arguments(prev))[1:-1]}] -> "
              f"{tgs.states[step.result]}", file=out)
        prev = step.result
    return 0


def cmd_hom(args, out):
    dom, cod = _load(args.domain), _load(args.codomain)
    try:
        with open(args.map, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {args.map}: {e.strerror}") from None
    f = parse_map(text, dom, cod)
    v = homomorphisms.is_homomorphism(f)
    if v:
        print("homomorphism: yes", file=out)
    else:
        a, x, b, y, c = v.witness
        lhs = cod.states[f(int(dom.table[v.witness]))]
        rhs = cod.states[int(cod.table[f(a), x, f(b), y, f(c)])]
        print(f"homomorphism: no (at {_cell(dom, v.witness)}: f(lhs)={lhs}, rhs={rhs})",
              file=out)
    print("surjective: " + ("yes" if f.is_surjective() else "no"), file=out)
    return 0 if v else 1


def cmd_search(args, out):
    spec_mode = "count" if args.count else "emit" if args.emit else "sample"
    spec = model_finder.SearchSpec(args.states, args.mediators, spec_mode,
                                   seed=args.seed, budget=args.budget)
    try:
        if spec_mode == "count":
            print(model_finder.count_models(spec.n, spec.m, spec.budget), file=out)
            return 0
        if spec_mode == "emit":
            os.makedirs(args.emit, exist_ok=True)
            k = 0
            for k, model in enumerate(model_finder.enumerate_models(spec.n, spec.m, spec.budget),
                                      1):
                path = os.path.join(args.emit, f"model_{k - 1:06d}.tgs")
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(serialize_tgs(model))
            print(f"{k} models written to {args.emit}", file=out)
            return 0
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    model = model_finder.sample_model(spec)
    if model is None:
        print(f"no model found within budget {spec.budget}", file=sys.stderr)
        return 1
    out.write(serialize_tgs(model))
    return 0


def cmd_fixture(args, out):
    try:
        tgs = fixtures.get_fixture(args.name)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    text = serialize_tgs(tgs)
    if args.output in (None, "-"):
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="tgs", description="Finite ternary Gamma-semiring workbench")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check the nesting axioms")
    s.add_argument("file")
    s.add_argument("--axiom", choices=["t1", "t3", "all"], default="all")
    s.add_argument("--max-counterexamples", type=int, default=5, metavar="K")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("ideals", help="count or list ideals of a kind")
    s.add_argument("file")
    s.add_argument("--kind", type=_kind, required=True)
    s.add_argument("--enumerate", action="store_true")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("closure", help="least ideal of a kind containing a seed")
    s.add_argument("file")
    s.add_argument("--seed", required=True)
    s.add_argument("--kind", type=_kind, required=True)
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("prime", help="test primeness and semiprimeness")
    s.add_argument("file")
    s.add_argument("--set", required=True)
    s.set_defaults(func=cmd_prime)

    s = sub.add_parser("paths", help="shortest reaction pathway")
    s.add_argument("file")
    s.add_argument("--from", dest="src", required=True)
    s.add_argument("--to", dest="tgt", required=True)
    s.add_argument("--max-len", type=int)
    s.add_argument("--dot", metavar="OUT")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("hom", help="check a state map")
    s.add_argument("map")
    s.add_argument("domain")
    s.add_argument("codomain")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("search", help="find models by backtracking")
    s.add_argument("--states", type=int, required=True)
    s.add_argument("--mediators", type=int, required=True)
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--emit", metavar="DIR")
    mode.add_argument("--sample", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=model_finder.DEFAULT_BUDGET)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("fixture", help="export a reference system")
    s.add_argument("name", help=", ".join(fixtures.FIXTURES))
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_fixture)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, TGSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main_entry():  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
