"""Command-line front end: ``properindex <subcommand> ...``.

Exit codes: 0 ok, 1 verification failure, 2 usage or input error, 3 cap refusal.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import generators as gen
from .acceptance import run_all
from .basic import color_by_contraction, color_traceable, color_tree
from .coloring import ColoringError, verify_3_proper
from .domination import (find_connected_s_dominating_set, greedy_connected_dominating_set,
                         min_connected_dominating_set, verify_dominating)
from .ears import EarError, color_ear_detailed, nonincreasing_ear_decomposition
from .formats import ParseError, parse_coloring, parse_graph, render_coloring, render_graph
from .graph import CapExceeded, GraphError
from .oracle import px3_exact, px3_lower_bound_refute
from .three_dom import (chain_dominating_set, color_three_dom, recognize_chain,
                        recognize_threshold, threshold_dominating_set)
from .three_way import INNER_MODES, ConstructionError, DominatingSetError, color_three_way

OK, VERIFY_FAILED, USAGE, CAP = 0, 1, 2, 3
STRATEGIES = ("3way", "3dom", "ear", "tree", "traceable", "contract", "exact")


class UsageError(Exception):
    pass


# -- io ---------------------------------------------------------------------------

def _read_text(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(args):
    fmt = "auto" if args.format is None else args.format
    return parse_graph(_read_text(args.inp), fmt)


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(args, obj, line):
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(line)


def _read_vertex_set(path):
    text = _read_text(path)
    try:
        return frozenset(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"dominating-set file {path!r} must list integers") from None


# -- generate ---------------------------------------------------------------------

def _generate(family, params, rng):
    need = {"path": 1, "cycle": 1, "complete": 1, "wheel": 1, "star": 1,
            "complete_bipartite": 2, "join_empty_clique": 2, "chain_tight": 2,
            "threshold": 1, "chain": 2, "random_tree": 1, "random_connected": 1,
            "random_regular": 2, "nontraceable": 1}
    if family == "shared_vertex_cliques":
        if len(params) < 2:
            raise UsageError("shared_vertex_cliques needs p followed by p clique sizes")
        return gen.shared_vertex_cliques(int(params[0]), [int(x) for x in params[1:]])
    if family not in need:
        raise UsageError(f"unknown family {family!r}")
    if len(params) != need[family]:
        raise UsageError(f"{family} takes {need[family]} integer parameter(s)")
    p = [int(x) for x in params]
    if family == "threshold":
        return gen.threshold(gen.random_threshold_spec(p[0], rng))
    if family == "chain":
        return gen.chain(gen.random_chain_spec(p[0], p[1], rng))
    if family == "random_tree":
        return gen.random_tree(p[0], rng)
    if family == "random_connected":
        return gen.random_connected(p[0], rng)
    if family == "random_regular":
        return gen.random_regular(p[0], p[1], rng)
    if family == "nontraceable":
        return gen.random_two_connected_nontraceable(p[0], rng)
    return gen.generate(family, *p)


def cmd_generate(args):
    g = _generate(args.family, args.params, random.Random(args.seed))
    _emit(args, render_graph(g, args.format or "el"))
    return OK


# -- color ------------------------------------------------------------------------

def _dominating_set(args, g, kind):
    if args.dominating_set != "auto":
        return _read_vertex_set(args.dominating_set)
    if kind == "3dom":
        spec = recognize_threshold(g)
        if spec is not None:
            return threshold_dominating_set(spec)
        spec = recognize_chain(g)
        if spec is not None and len(spec.side_u) >= 3 and spec.neighborhoods:
            return chain_dominating_set(spec)
        D = find_connected_s_dominating_set(g, 3)
        if D is None:
            raise DominatingSetError("no connected 3-dominating set exists")
        return D
    return greedy_connected_dominating_set(g)


def _color(args, g):
    s = args.strategy
    trace = None
    if s == "3way":
        trace = color_three_way(g, _dominating_set(args, g, "3way"), args.inner)
        return trace.coloring, trace
    if s == "3dom":
        return color_three_dom(g, _dominating_set(args, g, "3dom"), args.inner).coloring, None
    if s == "ear":
        return color_ear_detailed(g).coloring, None
    if s == "tree":
        return color_tree(g), None
    if s == "traceable":
        return color_traceable(g), None
    if s == "contract":
        from .three_way import inner_strategy
        H = _dominating_set(args, g, "3way")
        gH, _ = g.induced(H)
        return color_by_contraction(g, H, inner_strategy(gH, args.inner)), None
    r = px3_exact(g, cap_colors=args.max_colors, cap_edges=args.max_edges)
    return r.witness_coloring, None


def cmd_color(args):
    g = _load_graph(args)
    c, trace = _color(args, g)
    rep = verify_3_proper(c)
    _emit(args, render_coloring(c))
    if args.trace and trace is not None:
        with open(args.trace, "w") as fh:
            fh.write(trace.dumps() + "\n")
    verified = "true" if rep.ok else "false"
    _report(args, {"colors": c.num_colors, "verified": rep.ok,
                   "failing_triple": rep.failing_triple},
            f"colors={c.num_colors} verified={verified}")
    return OK if rep.ok else VERIFY_FAILED


# -- verify / exact -----------------------------------------------------------------

def cmd_verify(args):
    g = _load_graph(args)
    c = parse_coloring(g, _read_text(args.coloring))
    if not c.is_total:
        raise UsageError("coloring leaves some edges uncolored")
    rep = verify_3_proper(c)
    if rep.ok:
        _report(args, {"ok": True, "colors": c.num_colors}, "ok")
        return OK
    triple = ",".join(map(str, rep.failing_triple))
    _report(args, {"ok": False, "failing_triple": list(rep.failing_triple)},
            f"fail triple={triple}")
    return VERIFY_FAILED


def cmd_exact(args):
    g = _load_graph(args)
    if args.refute is not None:
        r = px3_lower_bound_refute(g, args.refute, budget=args.budget, seed=args.seed,
                                   cap_edges=args.max_edges)
        mode = "exhaustive" if r.exhaustive else "sampled"
        _report(args, {"t": r.t, "exhaustive": r.exhaustive, "proved_ge": r.proved_ge,
                       "sampled_failures": r.sampled_failures, "checked": r.checked},
                f"t={r.t} mode={mode} proved_gt_t={str(r.proved_ge).lower()} "
                f"failures={r.sampled_failures}/{r.checked}")
        return OK
    r = px3_exact(g, cap_colors=args.max_colors, cap_edges=args.max_edges)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(render_coloring(r.witness_coloring))
    _report(args, {"px3": r.value, "refuted_palette": r.refuted_palette, "checked": r.checked},
            f"px3={r.value}")
    return OK


# -- dominate / eardecomp / recognize ---------------------------------------------------

def cmd_dominate(args):
    g = _load_graph(args)
    if args.kind == "3dom":
        D = find_connected_s_dominating_set(g, 3)
        if D is None:
            _report(args, {"D": None}, "none")
            return VERIFY_FAILED
    elif args.minimum:
        D = min_connected_dominating_set(g)
    else:
        D = greedy_connected_dominating_set(g)
    cert = verify_dominating(g, D, 3)
    good = cert.connected_s_dominating if args.kind == "3dom" else cert.connected_s_way
    _report(args, {"D": sorted(D), "size": len(D), "connected": cert.connected,
                   "three_way": cert.s_way, "three_dominating": cert.s_dominating},
            "D=" + " ".join(map(str, sorted(D))) + f" size={len(D)} certified={str(good).lower()}")
    return OK if good else VERIFY_FAILED


def cmd_eardecomp(args):
    g = _load_graph(args)
    dec = nonincreasing_ear_decomposition(g)
    if args.json:
        print(json.dumps(dec.to_json(), sort_keys=True))
        return OK
    print("cycle " + " ".join(map(str, dec.cycle)))
    for i, ear in enumerate(dec.ears, 1):
        print(f"ear {i} length={ear.length} path=" + " ".join(map(str, ear.path)))
    print(f"t={dec.t}")
    return OK


def cmd_recognize(args):
    g = _load_graph(args)
    if args.family == "threshold":
        spec = recognize_threshold(g)
        obj = None if spec is None else {"weights": list(spec.weights), "threshold": spec.threshold}
    else:
        spec = recognize_chain(g)
        obj = None if spec is None else {"side_u": list(spec.side_u), "side_v": list(spec.side_v),
                                         "neighborhoods": [sorted(s) for s in spec.neighborhoods]}
    if spec is None:
        _report(args, {"family": args.family, "member": False}, f"not a {args.family} graph")
        return VERIFY_FAILED
    _report(args, {"family": args.family, "member": True, "spec": obj},
            f"{args.family} " + json.dumps(obj, sort_keys=True))
    return OK


def cmd_suite(args):
    results = run_all(scale=args.scale)
    if args.json:
        rows = [{"criterion": r.number, "name": r.name, "passed": r.passed,
                 "detail": r.detail, "seconds": round(r.seconds, 2)} for r in results]
        print(json.dumps(rows, indent=1))
    else:
        for r in results:
            print(r.line())
    return OK if all(r.passed for r in results) else VERIFY_FAILED


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="inp", default=None, help="input graph file (default stdin)")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=("g6", "el", "json"), default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-colors", type=int, default=8)
    common.add_argument("--max-edges", type=int, default=20)
    common.add_argument("--budget", type=int, default=100)
    common.add_argument("--json", action="store_true")

    p = argparse.ArgumentParser(prog="properindex", description="3-proper edge colorings of graphs")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("generate", parents=[common], help="write a named or random graph")
    s.add_argument("--family", required=True)
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("color", parents=[common], help="color a graph and verify the result")
    s.add_argument("--strategy", choices=STRATEGIES, default="3way")
    s.add_argument("--dominating-set", default="auto", help="'auto' or a file of vertex ids")
    s.add_argument("--inner", choices=INNER_MODES, default="spanning_tree_delta")
    s.add_argument("--trace", default=None, help="write the 3way construction trace as JSON")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("verify", parents=[common], help="check that a coloring is 3-proper")
    s.add_argument("--coloring", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("exact", parents=[common], help="exact px3 by enumeration")
    s.add_argument("--refute", type=int, default=None, metavar="T",
                   help="instead test whether every T-coloring fails")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("dominate", parents=[common], help="find a connected dominating set")
    s.add_argument("--kind", choices=("3way", "3dom"), default="3way")
    s.add_argument("--connected", action="store_true",
                   help="require G[D] connected (always enforced; accepted for clarity)")
    s.add_argument("--minimum", action="store_true", help="exact minimum (3way only)")
    s.set_defaults(func=cmd_dominate)

    s = sub.add_parser("eardecomp", parents=[common], help="nonincreasing ear decomposition")
    s.set_defaults(func=cmd_eardecomp)

    s = sub.add_parser("recognize", parents=[common], help="threshold / chain recognition")
    s.add_argument("--family", choices=("threshold", "chain"), required=True)
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    s.add_argument("--scale", type=float, default=1.0, help="shrink random sweeps (e.g. 0.2)")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return CAP
    except (UsageError, ParseError, GraphError, gen.FamilyError, DominatingSetError,
            EarError, ColoringError, ConstructionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


run = main

if __name__ == "__main__":
    sys.exit(main())
