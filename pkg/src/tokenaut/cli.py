"""Command-line entry point.

Subcommands: build (token-graph edge list plus rank mapping), aut
(automorphism group of an edge-list file), generators (explicit
generator families with their predicted order), factor (prime factor
decomposition), verify (theorem-level pipelines).

Exit codes are stable: 0 success, 2 usage or parse error, 3 scale-guard
refusal, 4 verification failure. Graphs are named by a small constructor
grammar; see GRAMMAR.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import product as iter_product
from math import comb
from typing import Sequence

from . import __version__
from . import subsets
from .constructions import (predicted_order, predicted_order_cube,
                            bipartite_generators, product_subgroup_generators,
                            singleton_swap_families)
from .errors import ScaleGuardExceeded
from .factorization import prime_factor_decomposition
from .graphs import (BipartiteSpec, Graph, cartesian_product,
                     complete_bipartite, complete_graph, cycle_graph,
                     format_edge_list, hypercube, parse_edge_list,
                     path_graph, star_graph)
from .perms import permutation_to_str, schreier_sims
from .search import automorphism_group
from .tokens import token_graph
from .verify import (ScaleGuard, VerificationReport, verify_bipartite,
                     verify_cube, verify_product)

GRAMMAR = ("kmn:M,N | kn:N | kN | path:N | cycle:N | star:N | cube:R | "
           "prod:<spec>+<spec>+... | file:PATH")


class UsageError(Exception):
    pass


def parse_graph_spec(text: str) -> Graph:
    """Build a graph from the constructor grammar; kN is shorthand for
    the complete graph kn:N so product lists read naturally (k2+path:3)."""
    text = text.strip()
    bare = re.fullmatch(r"[kK](\d+)", text)
    if bare:
        return complete_graph(_positive(bare.group(1), text))
    head, sep, rest = text.partition(":")
    if not sep:
        raise UsageError(f"cannot parse graph spec {text!r}; grammar: {GRAMMAR}")
    head = head.strip().lower()
    rest = rest.strip()
    try:
        if head == "kmn":
            parts = rest.split(",")
            if len(parts) != 2:
                raise UsageError(f"kmn needs two sizes, got {rest!r}")
            return complete_bipartite(_positive(parts[0], text), _positive(parts[1], text))
        if head == "kn":
            return complete_graph(_positive(rest, text))
        if head == "path":
            return path_graph(_positive(rest, text))
        if head == "cycle":
            return cycle_graph(_positive(rest, text))
        if head == "star":
            return star_graph(_positive(rest, text))
        if head == "cube":
            return hypercube(_positive(rest, text))
        if head == "prod":
            return cartesian_product(parse_factor_specs(rest))
        if head == "file":
            return _read_graph(rest)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown graph spec {text!r}; grammar: {GRAMMAR}")


def parse_factor_specs(text: str) -> list[Graph]:
    parts = [p for p in text.split("+") if p.strip()]
    if not parts:
        raise UsageError(f"empty factor list {text!r}; grammar: {GRAMMAR}")
    return [parse_graph_spec(p) for p in parts]


def _positive(s: str, context: str) -> int:
    try:
        value = int(s)
    except ValueError:
        raise UsageError(f"expected an integer in {context!r}, got {s!r}") from None
    if value < 1:
        raise UsageError(f"expected a positive integer in {context!r}, got {value}")
    return value


def _read_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        g = parse_edge_list(text)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    return Graph(g.n, g.adj, label=os.path.basename(path))


def _write_atomic(path: str, text: str) -> None:
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _write_report(path: str, payload: dict) -> None:
    payload = dict(payload)
    payload["tool"] = "tokenaut"
    payload["version"] = __version__
    _write_atomic(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _guard(args) -> ScaleGuard:
    return ScaleGuard(max_vertices=args.max_vertices, max_nodes=args.max_nodes)


# --- build ------------------------------------------------------------

def cmd_build(args) -> int:
    g = parse_graph_spec(args.graph)
    guard = _guard(args)
    if not 1 <= args.k <= g.n - 1:
        raise UsageError(f"k={args.k} out of range 1..{g.n - 1} for {_name(g)}")
    guard.require_vertices(comb(g.n, args.k), f"{args.k}-token graph of {_name(g)}")
    tg = token_graph(g, args.k)
    _write_atomic(args.out, format_edge_list(tg.graph))
    mapping = [f"{r}: {{{','.join(str(v) for v in sub)}}}"
               for r, sub in enumerate(tg.configs)]
    _write_atomic(args.out + ".map", "\n".join(mapping) + "\n")
    print(f"wrote {_name(tg.graph)}: {tg.graph.n} vertices, "
          f"{tg.graph.edge_count()} edges -> {args.out} (+ .map)")
    return 0


# --- aut --------------------------------------------------------------

def cmd_aut(args) -> int:
    g = _read_graph(args.inp)
    guard = _guard(args)
    guard.require_vertices(g.n, _name(g))
    started = time.perf_counter()
    result = automorphism_group(g, max_nodes=guard.max_nodes)
    wall = time.perf_counter() - started
    payload = result.group.to_report()
    payload.update({
        "instance": _name(g),
        "node_count": result.node_count,
        "wall_time": wall,
    })
    if args.report:
        _write_report(args.report, payload)
    print(f"{_name(g)}: order {payload['order']} "
          f"({len(result.group.generators)} generators, "
          f"{result.node_count} nodes, {wall:.3f}s)")
    return 0


# --- generators -------------------------------------------------------

def cmd_generators(args) -> int:
    modes = [args.m is not None or args.n is not None or args.k is not None,
             args.r is not None, args.factors is not None]
    if sum(modes) != 1:
        raise UsageError("choose exactly one of --m/--n/--k, --r, --factors")
    if modes[0]:
        if args.m is None or args.n is None or args.k is None:
            raise UsageError("bipartite generators need all of --m --n --k")
        m, n, k = _single(args.m, "--m"), _single(args.n, "--n"), _single(args.k, "--k")
        _guard(args).require_vertices(comb(m + n, k), f"{k}-token graph of K{m},{n}")
        gens = bipartite_generators(m, n, k)
        pred = predicted_order(m, n, k)
        families = []
        if m == 2 and n > 2:
            families = [fam.to_sorted_lists()
                        for fam in singleton_swap_families(BipartiteSpec(m, n), k)]
        payload = {
            "instance": f"bipartite(m={m},n={n},k={k})",
            "predicted_order": str(pred.order),
            "structure_tag": pred.structure_tag,
            "swap_families": families,
        }
    else:
        if modes[1]:
            r = _single(args.r, "--r")
            factors = [complete_graph(2) for _ in range(r)]
            pred = predicted_order_cube(r)
            instance = f"cube(r={r})"
            predicted = pred.order
            tag = pred.structure_tag
        else:
            factors = parse_factor_specs(args.factors)
            instance = f"product({'+'.join(_name(f) for f in factors)})"
            predicted = None
            tag = "Z2POW_SEMIDIRECT"
        base = cartesian_product(factors)
        _guard(args).require_vertices(comb(base.n, 2), instance)
        if predicted is None:
            predicted = ((1 << (len(factors) - 1))
                         * automorphism_group(base).group.order())
        gens = product_subgroup_generators(factors)
        payload = {
            "instance": instance,
            "predicted_order": str(predicted),
            "structure_tag": tag,
            "swap_families": [[ax] for ax in range(len(factors) - 1)],
        }
    payload["generated_order"] = str(schreier_sims(gens, degree=gens[0].degree).order())
    payload["generators"] = [permutation_to_str(p) for p in gens]
    if args.report:
        _write_report(args.report, payload)
    print(f"{payload['instance']}: {len(gens)} generators, "
          f"generated order {payload['generated_order']}, "
          f"predicted {payload['predicted_order']} [{payload['structure_tag']}]")
    return 0


def _single(text: str, flag: str) -> int:
    if "," in text:
        raise UsageError(f"{flag} takes a single value here")
    return _positive(text, flag)


# --- factor -----------------------------------------------------------

def cmd_factor(args) -> int:
    g = _read_graph(args.inp)
    guard = _guard(args)
    guard.require_vertices(g.n, _name(g))
    try:
        fac = prime_factor_decomposition(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    prefix = args.out if args.out else os.path.splitext(args.inp)[0]
    print(f"{_name(g)}: {len(fac.factors)} prime factor(s)")
    for i, f in enumerate(fac.factors):
        path = f"{prefix}.factor{i}.el"
        _write_atomic(path, format_edge_list(f))
        print(f"factor {i}: {f.n} vertices, {f.edge_count()} edges -> {path}")
    return 0


# --- verify -----------------------------------------------------------

def _int_list(text: str, flag: str) -> list[int]:
    return [_positive(p, flag) for p in text.split(",") if p.strip()]


def _verify_instances(args) -> list[tuple[str, object]]:
    """(description, thunk-args) pairs for the requested fan-out."""
    guard = _guard(args)
    instances = []
    if args.mode == "bipartite":
        if args.m is None or args.n is None or args.k is None:
            raise UsageError("verify bipartite needs --m --n --k")
        for m, n, k in iter_product(_int_list(args.m, "--m"),
                                    _int_list(args.n, "--n"),
                                    _int_list(args.k, "--k")):
            instances.append((f"bipartite(m={m},n={n},k={k})",
                              lambda m=m, n=n, k=k: verify_bipartite(m, n, k, guard)))
    elif args.mode == "cube":
        if args.r is None:
            raise UsageError("verify cube needs --r")
        for r in _int_list(args.r, "--r"):
            instances.append((f"cube(r={r})", lambda r=r: verify_cube(r, guard)))
    else:
        if not args.factors:
            raise UsageError("verify product needs --factors")
        for spec in args.factors:
            factors = parse_factor_specs(spec)
            instances.append((f"product({spec})",
                              lambda factors=factors: verify_product(factors, guard)))
    return instances


def _report_path(base: str, index: int, total: int) -> str:
    if total == 1:
        return base
    stem, ext = os.path.splitext(base)
    return f"{stem}.{index}{ext}"


def cmd_verify(args) -> int:
    instances = _verify_instances(args)
    outcomes: list = [None] * len(instances)

    def run(idx: int) -> None:
        desc, thunk = instances[idx]
        try:
            outcomes[idx] = (desc, thunk())
        except (ScaleGuardExceeded, ValueError) as exc:
            outcomes[idx] = (desc, exc)

    if args.jobs > 1 and len(instances) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            list(pool.map(run, range(len(instances))))
    else:
        for i in range(len(instances)):
            run(i)

    worst = 0
    for idx, (desc, outcome) in enumerate(outcomes):
        if isinstance(outcome, ScaleGuardExceeded):
            print(f"{desc}: REFUSED ({outcome})")
            worst = max(worst, 3)
            continue
        if isinstance(outcome, Exception):
            print(f"{desc}: ERROR ({outcome})", file=sys.stderr)
            worst = max(worst, 2)
            continue
        report = outcome
        if args.report:
            _write_report(_report_path(args.report, idx, len(instances)),
                          report.to_dict())
        verdict = "PASS" if report.passed else "FAIL"
        extra = ""
        if report.conjecture_flag is not None:
            extra = f" full-group-equality observed={report.conjecture_flag}"
        print(f"{desc}: computed={report.computed_order} "
              f"predicted={report.predicted_order} "
              f"subgroup_certified={report.subgroup_certified} "
              f"{verdict}{extra}")
        if not report.passed:
            worst = max(worst, 4)
    return worst


# --- parser -----------------------------------------------------------

def _name(g: Graph) -> str:
    return g.label or f"graph[n={g.n}]"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokenaut",
        description="Token-graph automorphism toolkit: build token graphs, "
                    "compute and verify their automorphism groups.")
    parser.add_argument("--version", action="version",
                        version=f"tokenaut {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-vertices", type=int, default=300,
                       help="scale guard: largest admissible vertex count")
        p.add_argument("--max-nodes", type=int, default=10_000_000,
                       help="scale guard: search-tree node budget")

    p = sub.add_parser("build", help="write a token graph as an edge list")
    p.add_argument("--graph", required=True, help=f"graph spec: {GRAMMAR}")
    p.add_argument("--k", type=int, required=True, help="token count")
    p.add_argument("--out", required=True, help="output edge-list path")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("aut", help="compute the automorphism group of an edge list")
    p.add_argument("--in", dest="inp", required=True, help="edge-list path")
    p.add_argument("--report", help="write a JSON report here")
    common(p)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("generators",
                       help="emit explicit generators and the predicted order")
    p.add_argument("--m", help="bipartite small side")
    p.add_argument("--n", help="bipartite large side")
    p.add_argument("--k", help="token count")
    p.add_argument("--r", help="cube dimension")
    p.add_argument("--factors", help="product factors, e.g. k2+path:3")
    p.add_argument("--report", help="write a JSON report here")
    common(p)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("factor", help="prime factor decomposition of an edge list")
    p.add_argument("--in", dest="inp", required=True, help="edge-list path")
    p.add_argument("--out", help="output prefix for factor edge lists")
    common(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", help="run a verification pipeline")
    p.add_argument("mode", choices=("bipartite", "cube", "product"))
    p.add_argument("--m", help="comma list of bipartite small sides")
    p.add_argument("--n", help="comma list of bipartite large sides")
    p.add_argument("--k", help="comma list of token counts")
    p.add_argument("--r", help="comma list of cube dimensions")
    p.add_argument("--factors", action="append",
                   help="product factors, e.g. k2+path:3 (repeatable)")
    p.add_argument("--report", help="JSON report path (indexed when fanned out)")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads for fanned-out instances")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScaleGuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
