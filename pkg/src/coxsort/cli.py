"""Command-line front end.

Subcommands: group (element listing), orders (weak/Bruhat/sorting poset
export), subword (ball/sphere classification with homology cross-check),
fibers (subset-image fiber survey for a reduced word), totalpos (exact
parameter-identity trials), verify (the full twelve-check suite with a
JSON report).

Exit codes: 0 success, 1 failed verification or exceeded resource
budget, 2 bad usage or invalid input.  All output is UTF-8 with LF line
endings and deterministic ordering.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fibermap, hecke, homology, subword, totalpos
from .coxeter import CoxeterSystem, Element, parse_word, word_str
from .errors import BudgetExceededError, VoidComplexError
from .posets import Poset, bruhat_interval, sorting_order, weak_interval
from .verify import Context, RunConfig, named_system, report_json, run_verification

_FORMATS = ("json", "dot", "tsv")


def _read_matrix(path: str) -> list[list[int]]:
    with open(path, encoding="utf-8") as handle:
        tokens = handle.read().split()
    if not tokens:
        raise ValueError(f"matrix file {path} is empty")
    n = int(tokens[0])
    if len(tokens) != 1 + n * n:
        raise ValueError(f"matrix file {path} should hold n then n*n integers")
    values = [int(t) for t in tokens[1:]]
    return [values[i * n:(i + 1) * n] for i in range(n)]


def _resolve_system(args) -> CoxeterSystem:
    if getattr(args, "matrix", None):
        return CoxeterSystem(_read_matrix(args.matrix), size_cap=args.cap)
    if getattr(args, "type", None):
        return named_system(args.type, size_cap=args.cap)
    raise ValueError("one of --type or --matrix is required")


def _print(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump_json(obj) -> None:
    _print(json.dumps(obj, indent=2, sort_keys=True))


def _dot_graph(name: str, poset: Poset) -> str:
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for item in poset.ground:
        lines.append(f'  "{_label(item)}";')
    covers = sorted(poset.covers(),
                    key=lambda p: (_sort_key(p[0]), _sort_key(p[1])))
    for low, high in covers:
        lines.append(f'  "{_label(low)}" -> "{_label(high)}";')
    lines.append("}")
    return "\n".join(lines)


def _label(item) -> str:
    if isinstance(item, Element):
        return word_str(item.word)
    if isinstance(item, frozenset):
        return "{" + ",".join(str(x) for x in sorted(item)) + "}"
    return str(item)


def _sort_key(item):
    if isinstance(item, Element):
        return (item.length, item.word)
    return str(item)


def _poset_obj(name: str, poset: Poset) -> dict:
    return {
        "label": name,
        "ground": [_label(x) for x in poset.ground],
        "leq": [[bool(v) for v in row] for row in poset.leq],
    }


def _emit_posets(named: list[tuple[str, Poset]], fmt: str) -> None:
    if fmt == "json":
        _dump_json({"posets": [_poset_obj(n, p) for n, p in named]})
    elif fmt == "dot":
        _print("\n\n".join(_dot_graph(n, p) for n, p in named))
    else:
        chunks = []
        for name, poset in named:
            lines = [f"# {name}"]
            covers = sorted(poset.covers(),
                            key=lambda p: (_sort_key(p[0]), _sort_key(p[1])))
            lines += [f"{_label(a)}\t{_label(b)}" for a, b in covers]
            chunks.append("\n".join(lines))
        _print("\n\n".join(chunks))


def cmd_group(args) -> int:
    system = _resolve_system(args)
    rows = [{
        "word": word_str(e.word),
        "length": e.length,
        "left_descents": list(e.left_descents()),
        "right_descents": list(e.right_descents()),
    } for e in system.elements()]
    if args.format == "json":
        _dump_json({"order": len(rows), "elements": rows})
    elif args.format == "tsv":
        lines = ["word\tlength\tleft_descents\tright_descents"]
        lines += ["{}\t{}\t{}\t{}".format(
            r["word"], r["length"],
            ",".join(map(str, r["left_descents"])) or "-",
            ",".join(map(str, r["right_descents"])) or "-") for r in rows]
        _print("\n".join(lines))
    else:
        raise ValueError("group listing supports json or tsv output")
    return 0


def cmd_orders(args) -> int:
    system = _resolve_system(args)
    if args.w is None:
        raise ValueError("orders needs --w")
    w = system.element(parse_word(args.w))
    named: list[tuple[str, Poset]] = []
    want = args.which
    if want in ("weak", "all"):
        named.append(("weak", weak_interval(w)))
    if want == "sorting":
        if args.Q is None:
            raise ValueError("orders sorting needs --Q")
        Q = system.check_word(parse_word(args.Q))
        named.append((f"sorting {word_str(Q)}", sorting_order(system, Q)))
    if want == "all":
        for Q in sorted(hecke.reduced_words(w)):
            named.append((f"sorting {word_str(Q)}", sorting_order(system, Q)))
    if want in ("bruhat", "all"):
        named.append(("bruhat", bruhat_interval(system.identity, w)))
    _emit_posets(named, args.format)
    return 0


def cmd_subword(args) -> int:
    system = _resolve_system(args)
    if args.Q is None or args.w is None:
        raise ValueError("subword needs --Q and --w")
    Q = system.check_word(parse_word(args.Q))
    w = system.element(parse_word(args.w))
    complex_ = subword.subword_complex(system, Q, w)
    kind = complex_.classify()
    K = complex_.as_simplicial_complex()
    top = len(Q) - w.length - 1
    betti = {}
    matches = True
    for coeff in (2, 0):
        profile = homology.reduced_betti(K, coeff)
        betti["GF(2)" if coeff == 2 else "Q"] = {str(d): b for d, b in profile.counts}
        expected = profile.matches_sphere(top) if kind == "sphere" else profile.is_trivial()
        matches = matches and expected
    obj = {
        "Q": word_str(Q),
        "w": word_str(w.word),
        "classification": kind,
        "dim": K.dim,
        "facets": sorted(sorted(f) for f in complex_.facets),
        "num_faces": K.num_faces(),
        "betti": betti,
        "betti_matches_classification": matches,
    }
    if args.format == "json":
        _dump_json(obj)
    elif args.format == "tsv":
        lines = [f"{k}\t{json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v}"
                 for k, v in obj.items()]
        _print("\n".join(lines))
    else:
        raise ValueError("subword supports json or tsv output")
    return 0 if matches else 1


def cmd_fibers(args) -> int:
    system = _resolve_system(args)
    if args.Q is None:
        raise ValueError("fibers needs --Q (a reduced word)")
    Q = system.check_word(parse_word(args.Q))
    w = system.element(Q)
    if w.length != len(Q):
        raise ValueError(f"the word {word_str(Q)} is not reduced")
    interval = bruhat_interval(system.identity, w)
    rows = []
    for u in interval.ground:
        entry = {
            "u": word_str(u.word),
            "fiber_up_size": len(fibermap.fiber_up(system, Q, u)),
            "open_fiber_size": (len(fibermap.fiber_open(system, Q, u))
                                if u != w else None),
            "complex": subword.subword_complex(system, Q, u).classify(),
        }
        if u.is_identity:
            entry["contractible"] = None
        else:
            report = fibermap.certify_fiber_contractible(system, Q, u)
            entry["contractible"] = report.contractible
            entry["method"] = report.method
        rows.append(entry)
    if args.format == "json":
        _dump_json({"Q": word_str(Q), "w": word_str(w.word), "fibers": rows})
    elif args.format == "tsv":
        lines = ["u\tcomplex\tfiber_up\topen_fiber\tcontractible"]
        for r in rows:
            lines.append("{}\t{}\t{}\t{}\t{}".format(
                r["u"], r["complex"], r["fiber_up_size"],
                "-" if r["open_fiber_size"] is None else r["open_fiber_size"],
                "-" if r["contractible"] is None else r["contractible"]))
        _print("\n".join(lines))
    else:
        raise ValueError("fibers supports json or tsv output")
    return 0


def cmd_totalpos(args) -> int:
    import random

    rng = random.Random(args.seed)

    def rational(lo: int = -9) -> Fraction:
        return Fraction(rng.randint(lo, 9), rng.randint(1, 9))

    additive = braid = nonneg = 0
    for _ in range(args.trials):
        n = rng.randint(2, 4)
        if totalpos.verify_additive_identity(n, rng.randint(1, n - 1),
                                             rational(), rational()):
            additive += 1
    for _ in range(args.trials):
        n = rng.randint(3, 4)
        t1, t2, t3 = rational(), rational(), rational()
        while t1 + t3 == 0:
            t3 = rational()
        if totalpos.verify_braid_identity(n, rng.randint(1, n - 2), t1, t2, t3):
            braid += 1
    tn_trials = max(1, args.trials // 2)
    for _ in range(tn_trials):
        M = totalpos.RationalMatrix.identity(4)
        for _ in range(rng.randint(1, 8)):
            M = M @ totalpos.chevalley(4, rng.randint(1, 3), rational(lo=0))
        if totalpos.is_totally_nonnegative(M):
            nonneg += 1
    obj = {
        "seed": args.seed,
        "additive": {"passed": additive, "trials": args.trials},
        "exchange": {"passed": braid, "trials": args.trials},
        "nonnegative_products": {"passed": nonneg, "trials": tn_trials},
    }
    ok = additive == args.trials and braid == args.trials and nonneg == tn_trials
    if args.format == "tsv":
        _print("\n".join(f"{k}\t{v['passed']}/{v['trials']}"
                         for k, v in obj.items() if isinstance(v, dict)))
    else:
        _dump_json(obj)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    groups = list(args.type or [])
    ctx_systems = {}
    for path in args.matrix or []:
        label = f"matrix:{path}"
        ctx_systems[label] = CoxeterSystem(_read_matrix(path), size_cap=args.cap)
        groups.append(label)
    config = RunConfig(groups=tuple(groups) or None,
                       field=args.field, seed=args.seed, size_cap=args.cap)
    ctx = Context(config)
    for label, system in ctx_systems.items():
        ctx.register(label, system)
    report = run_verification(config, ctx)
    sys.stdout.write(report_json(report))
    return 0 if all(r["passed"] for r in report["theorem_results"]) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxsort",
        description="exact sorting orders, subword complexes, and fiber "
                    "homotopy checks for finite Coxeter groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_default: str):
        p.add_argument("--type", help="named group: A<n>, B<n>, D<n>, I2:<m>, H3")
        p.add_argument("--matrix", help="Coxeter matrix file: first line n, then n rows")
        p.add_argument("--format", choices=_FORMATS, default=fmt_default)
        p.add_argument("--cap", type=int, default=50_000,
                       help="group enumeration cap (default 50000)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("group", help="list the elements of a finite group")
    add_common(p, "tsv")
    p.set_defaults(fn=cmd_group)

    p = sub.add_parser("orders", help="export weak/Bruhat/sorting posets for --w")
    p.add_argument("which", choices=("weak", "bruhat", "sorting", "all"))
    add_common(p, "dot")
    p.add_argument("--w", help="target element as a comma-separated word")
    p.add_argument("--Q", help="reduced word for sorting order")
    p.set_defaults(fn=cmd_orders)

    p = sub.add_parser("subword", help="classify the subword complex of (Q, w)")
    add_common(p, "json")
    p.add_argument("--w", help="target element word")
    p.add_argument("--Q", help="ambient word")
    p.set_defaults(fn=cmd_subword)

    p = sub.add_parser("fibers", help="survey subset-image fibers over a reduced word")
    add_common(p, "tsv")
    p.add_argument("--Q", help="reduced word")
    p.set_defaults(fn=cmd_fibers)

    p = sub.add_parser("totalpos", help="run exact total-positivity trials")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(fn=cmd_totalpos)

    p = sub.add_parser("verify", help="run the twelve-check verification suite")
    p.add_argument("--type", action="append",
                   help="sweep group (repeatable); default: the standard list")
    p.add_argument("--matrix", action="append",
                   help="extra sweep group from a Coxeter matrix file (repeatable)")
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--field", type=int, choices=(2, 0), default=2)
    p.add_argument("--cap", type=int, default=50_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, VoidComplexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
