"""Command-line front end.

Exit codes: 0 ok, 2 parse/usage error, 3 d d != 0, 4 rank condition
violated, 5 enumeration cap exceeded, 6 chain is not a (co)cycle.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import forests, harmonic
from .complex import Chain, ChainComplex, validate
from .cycletrees import enumerate_cycletrees, enumerate_dual_cycletrees
from .errors import CapExceededError, ConditionError, NotACycleError
from .graphs import count_cycletrees_complete, cycle_length_profile, laplacian_length_limit
from .io import ParseError, load_complex

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_CONDITION, EXIT_CAP, EXIT_NOT_CYCLE = 0, 2, 3, 4, 5, 6


def _s(x) -> str:
    return str(Fraction(x))


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _labels(X: ChainComplex, dim: int, idx) -> str:
    return "{" + ", ".join(X.cells[dim][k] for k in idx) + "}"


def _fmt_chain(X: ChainComplex, v: Chain) -> str:
    terms = [f"{_s(a)}*{X.cells[v.dim][k]}" for k, a in enumerate(v) if a]
    return " + ".join(terms).replace("+ -", "- ") or "0"


def _load(path) -> ChainComplex:
    X = load_complex(path)
    rep = validate(X)
    if not rep.ok:
        raise _Invalid(str(rep))
    return X


class _Invalid(Exception):
    pass


def default_cap() -> int:
    return int(os.environ.get("HH_CAP", forests.DEFAULT_CAP))


def _parse_chain(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"cannot parse chain {text!r}: expected integers") from exc


def cmd_validate(args):
    X = load_complex(args.path)
    rep = validate(X)
    print(rep)
    return EXIT_OK if rep.ok else EXIT_INVALID


def _dot(X: ChainComplex, lam: Chain) -> str:
    lines = ["digraph harmonic {"]
    for v in X.cells[0]:
        lines.append(f'  "{v}";')
    B = X.boundary(1)
    for e, label in enumerate(X.cells[1]):
        col = B.column(e)
        tail = [X.cells[0][r] for r, x in enumerate(col) if x < 0]
        head = [X.cells[0][r] for r, x in enumerate(col) if x > 0]
        u = tail[0] if tail else (head[0] if head else X.cells[0][0])
        v = head[0] if head else u
        lines.append(f'  "{u}" -> "{v}" [label="{label}: {_s(lam[e])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_harmonic(args):
    X = _load(args.path)
    cert = harmonic.build_certificate(X, args.dim, mode=args.mode, cap=args.cap)
    if args.dot:
        if args.dim != 1:
            print("DOT output is only available in dimension 1", file=sys.stderr)
            return EXIT_PARSE
        with open(args.dot, "w") as fh:
            fh.write(_dot(X, cert.lam))
    if args.json:
        _emit(cert.to_dict())
    else:
        i = args.dim
        print(f"dimension {i}, mode {args.mode}")
        print(f"lambda   = {_fmt_chain(X, cert.lam)}")
        print(f"lambda*  = {_fmt_chain(X, cert.lam_star)}")
        print(f"k_{i} = {cert.k}   k^{i} = {cert.k_dual}")
        print(f"|H~_{i - 1}| = {cert.h_below}   |H~^{i + 1}| = {cert.h_above}")
        print(f"lambda/{cert.h_below} = {'+' if cert.ratio_sign > 0 else '-'}lambda*/{cert.h_above}")
        print("identity residuals:")
        for name, r in sorted(cert.residuals.items()):
            print(f"  {name:<30} {_s(r):>8}  {'OK' if r == 0 else 'FAIL'}")
        print("certificate: " + ("PASS" if cert.ok else "FAIL"))
    return EXIT_OK if cert.ok else 1


def _tree_listing(args, dual: bool):
    X = _load(args.path)
    i = args.dim
    if dual:
        rows = forests.enumerate_dual_trees(X, i, args.cap)
        number, name = forests.dual_tree_number(X, i), f"k^{i}"
    else:
        rows = forests.enumerate_trees(X, i, args.cap)
        number, name = forests.tree_number(X, i), f"k_{i}"
    total = sum(t.weight ** 2 for t in rows)
    shown = [t for t in rows if t.weight or args.all]
    if args.json:
        _emit({"number": _s(number), "name": name, "sum_weight_squared": _s(total),
               "rows": [{"cells": [X.cells[i][k] for k in t.selection], "weight": _s(t.weight)}
                        for t in shown]})
    else:
        print(f"{name} = {number}")
        for t in shown:
            print(f"  {_labels(X, i, t.selection)}  weight {t.weight}")
        print(f"sum wt^2 = {total} ({'matches' if total == number else 'DOES NOT match'} {name})")
    return EXIT_OK if total == number else 1


def _cycletree_listing(args, dual: bool):
    X = _load(args.path)
    i = args.dim
    rows = (enumerate_dual_cycletrees if dual else enumerate_cycletrees)(X, i, args.cap)
    shown = [U for U in rows if U.content or args.all]
    if args.json:
        _emit({"dual": dual, "count_nonzero": _s(sum(1 for U in rows if U.content)),
               "rows": [{"cells": [X.cells[i][k] for k in U.selection],
                         "part": [_s(a) for a in U.cycle_part], "weight": _s(U.weight)}
                        for U in shown]})
    else:
        kind = "dual cycletrees" if dual else "cycletrees"
        print(f"{sum(1 for U in rows if U.content)} {kind} of nonzero weight "
              f"(of {len(rows)} subsets)")
        for U in shown:
            print(f"  {_labels(X, i, U.selection)}  weight {U.weight}  "
                  f"part {_fmt_chain(X, U.cycle_part)}")
    return EXIT_OK


def cmd_trees(args):
    return _tree_listing(args, dual=False)


def cmd_cycletrees(args):
    return _cycletree_listing(args, dual=False)


def cmd_dual(args):
    if args.kind == "trees":
        return _tree_listing(args, dual=True)
    return _cycletree_listing(args, dual=True)


def _number_cmd(args, dual: bool):
    X = _load(args.path)
    z = _parse_chain(args.chain)
    if len(z) != X.size(args.dim):
        raise ParseError(f"chain has {len(z)} coefficients, dimension {args.dim} has {X.size(args.dim)} cells")
    check = (harmonic.cutting_homology_check if dual else harmonic.winding_homology_check)(X, args.dim, z)
    name = "c" if dual else "w"
    group = f"H~^{args.dim}(X+e)" if dual else f"H~_{args.dim}(X+e)"
    order = check.homology.order
    order_s = "infinite" if check.homology.rank else str(order)
    if args.json:
        _emit({name: _s(check.number), "order": order_s, "ok": check.ok})
    else:
        print(f"{name} = {check.number}")
        print(f"|{group}| = {order_s}  ({'consistent' if check.ok else 'INCONSISTENT'})")
    return EXIT_OK if check.ok else 1


def cmd_winding(args):
    return _number_cmd(args, dual=False)


def cmd_cutting(args):
    return _number_cmd(args, dual=True)


def cmd_kn(args):
    print(count_cycletrees_complete(args.n))
    return EXIT_OK


def cmd_profile(args):
    X = _load(args.path)
    p = cycle_length_profile(X, args.cap)
    if args.json:
        _emit({"l": {str(j): _s(l) for j, l in p.counts.items()}, "n": _s(p.n), "m": _s(p.m),
               "k1": _s(p.k1), "lhs": _s(p.lhs), "rhs": _s(p.rhs), "ok": p.identity_holds})
    else:
        print(p)
    return EXIT_OK if p.identity_holds else 1


def cmd_spectrum(args):
    X = _load(args.path)
    est = laplacian_length_limit(X, args.t or (1e-2, 1e-3, 1e-4))
    if args.json:
        _emit({"estimate": repr(est.estimate), "error": repr(est.error),
               "imaginary_residual": repr(est.imaginary_residual)})
    else:
        print(f"estimate            {est.estimate:.10g}")
        print(f"extrapolation error {est.error:.3g}")
        print(f"imaginary residual  {est.imaginary_residual:.3g}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hodgetrees", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_path(name, func, help, dim=True, cap=True, js=True):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("path")
        if dim:
            sp.add_argument("--dim", type=int, default=1)
        if cap:
            sp.add_argument("--cap", type=int, default=None)
        if js:
            sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    sp = sub.add_parser("validate", help="check that consecutive boundaries compose to zero")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_validate)

    sp = with_path("harmonic", cmd_harmonic, "standard harmonic cycle/cocycle certificate")
    sp.add_argument("--mode", choices=("brute", "fast", "both"), default="both")
    sp.add_argument("--dot", metavar="FILE", help="write a DOT graph labelled by lambda (dim 1)")

    for name, func in (("trees", cmd_trees), ("cycletrees", cmd_cycletrees)):
        sp = with_path(name, func, f"list weighted {name}")
        sp.add_argument("--all", action="store_true", help="include zero-weight subsets")
    sp = with_path("dual", cmd_dual, "list weighted dual trees or dual cycletrees")
    sp.add_argument("--kind", choices=("trees", "cycletrees"), default="trees")
    sp.add_argument("--all", action="store_true", help="include zero-weight subsets")

    for name, func in (("winding", cmd_winding), ("cutting", cmd_cutting)):
        sp = with_path(name, func, f"{name} number of an integer (co)cycle", cap=False)
        sp.add_argument("--chain", required=True, help="comma or space separated coefficients")

    sp = sub.add_parser("kn", help="cycletree count of the complete graph K_n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_kn)

    with_path("profile", cmd_profile, "cycle-length profile of a graph", dim=False)
    sp = with_path("spectrum", cmd_spectrum, "t -> 0 limit of the twisted edge Laplacian",
                   dim=False, cap=False)
    sp.add_argument("--t", type=float, action="append", help="sample t (repeatable)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", None) is None and hasattr(args, "cap"):
        args.cap = default_cap()
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _Invalid as exc:
        print(f"invalid complex: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConditionError as exc:
        print(f"condition violated: {exc}", file=sys.stderr)
        return EXIT_CONDITION
    except CapExceededError as exc:
        print(f"enumeration cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotACycleError as exc:
        print(f"not a (co)cycle: {exc}", file=sys.stderr)
        return EXIT_NOT_CYCLE


if __name__ == "__main__":
    sys.exit(main())
