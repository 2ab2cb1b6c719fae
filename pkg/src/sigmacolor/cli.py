"""Command-line interface.

JSON goes to standard output, short human-readable tables to standard error.
Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from math import comb, floor
from pathlib import Path

from . import formats
from .arrangeability import (
    ARRANGEABILITY_CAP,
    arrangeability_exact,
    arrangeability_of_ordering,
    heuristic_ordering,
)
from .coloring import (
    is_sigma_valid,
    pair_systems,
    sigma_chromatic_with_witness,
    sigma_color_greedy,
    sigma_color_product,
    sigma_color_via_star,
)
from .errors import InstanceTooLarge, ParseError, SigmaColorError, ValidationError
from .families import (
    gen_random_instance,
    gen_star_example,
    gen_subdivided_biclique,
    gen_subdivided_clique,
)
from .flow import max_density
from .graph import CHROMATIC_CAP, CLIQUE_CAP, Graph, clique_number_exact
from .hypergraph import extract_rank2_subhypergraph, extract_subdivided_clique, is_rank2_full_on, is_subdivided_clique
from .sigma import build_sigma_graph, rho
from .star import (
    STAR_CAP,
    greedy_star_coloring,
    is_star_coloring,
    orientation_from_star_coloring,
    star_chromatic_exact,
    verify_in_orientation,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

STRATEGIES = ("greedy", "star-pipeline", "product", "exact")
FAMILIES = ("subdivided-clique", "subdivided-biclique", "star-example", "random")


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _emit(record: dict, args) -> None:
    text = json.dumps(record, indent=2, default=_json_default) + "\n"
    out = args.out if args.command not in ("build-sigma-graph", "gen") else None
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _table(rows: list[tuple[str, object]]) -> None:
    width = max((len(k) for k, _ in rows), default=0)
    for key, value in rows:
        print(f"{key:<{width}}  {value}", file=sys.stderr)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    return formats.parse_graph(_read(path))


def _load_instance(args):
    g = _load_graph(args.graph)
    s = formats.parse_sigma(_read(args.sigma), g, default_depth=args.depth)
    return g, s


def _star_input(g: Graph, cap: int | None):
    """A star coloring to feed the pipeline: exact within the cap, greedy beyond it."""
    limit = cap if cap is not None else STAR_CAP
    if g.n <= limit:
        k, c = star_chromatic_exact(g, cap=limit)
        return c, f"star_chromatic_exact (k={k})"
    c = greedy_star_coloring(g, heuristic_ordering(g))
    return c, f"greedy star coloring along the degeneracy ordering (k={c.palette_size})"


def cmd_build_sigma_graph(args) -> int:
    g, s = _load_instance(args)
    gs = build_sigma_graph(g, s, also_proper=args.also_proper)
    text = formats.format_graph(gs)
    record = {"rho": rho(s), "depth": s.depth, "vertices": gs.n, "edges": gs.m}
    if args.out:
        Path(args.out).write_text(text)
        record["written"] = args.out
    else:
        record["graph"] = text
    _emit(record, args)
    _table([("rho", rho(s)), ("depth", s.depth), ("|E(G_sigma)|", gs.m)])
    return EXIT_OK


def cmd_color(args) -> int:
    g, s = _load_instance(args)
    start = time.perf_counter()
    extra = {}
    if args.strategy == "greedy":
        c = sigma_color_greedy(g, s, also_proper=args.also_proper)
        top = floor(max_density(build_sigma_graph(g, s, also_proper=args.also_proper))[0] * 2) + 1
        bound = f"floor(mad)+1 = {top}"
    elif args.strategy == "star-pipeline":
        c1, source = _star_input(g, args.cap)
        c = sigma_color_via_star(g, s, c1)
        k = c1.palette_size
        bound = f"k^2*rho = {k * k * rho(s)} with k from {source}"
    elif args.strategy == "product":
        c = sigma_color_product(g, s)
        k = max((sigma_color_greedy(g, sub).palette_size for sub in pair_systems(s, g)), default=1)
        bound = f"k^C(rho,2) = {k ** comb(rho(s), 2)} with k = {k}"
    else:
        chi, c = sigma_chromatic_with_witness(
            g, s, cap=args.cap if args.cap is not None else CHROMATIC_CAP, also_proper=args.also_proper
        )
        bound = f"chi(Sigma) = {chi}"
    elapsed = time.perf_counter() - start
    if args.also_proper:
        valid = is_sigma_valid(g, s, c) and all(c[u] != c[v] for u, v in g.edges)
        extra["also_proper"] = True
    else:
        valid = is_sigma_valid(g, s, c)
    record = formats.coloring_record(c, valid, bound, wall_time=round(elapsed, 6), strategy=args.strategy, **extra)
    _emit(record, args)
    _table([("strategy", args.strategy), ("palette", c.palette_size), ("valid", valid), ("bound", bound)])
    return EXIT_OK if valid else EXIT_FAILED


def cmd_star_color(args) -> int:
    g = _load_graph(args.graph)
    start = time.perf_counter()
    if args.exact:
        k, c = star_chromatic_exact(g, cap=args.cap if args.cap is not None else STAR_CAP)
        bound = f"chi_s(G) = {k}"
    else:
        order = formats.parse_ordering(_read(args.ordering)) if args.ordering else heuristic_ordering(g)
        if len(order) != g.n:
            raise ValidationError("ordering does not match the graph")
        lists = formats.parse_lists(_read(args.lists), g.n) if args.lists else None
        palette = args.palette if lists is None else None
        c = greedy_star_coloring(g, order, lists=lists, palette=palette)
        k = arrangeability_of_ordering(g, order).k
        bound = f"(k+2)^2 = {(k + 2) ** 2} with k = {k} for the ordering"
    elapsed = time.perf_counter() - start
    valid = is_star_coloring(g, c)
    oriented = verify_in_orientation(g, orientation_from_star_coloring(g, c)) if valid else False
    record = formats.coloring_record(c, valid, bound, wall_time=round(elapsed, 6), in_orientation=oriented)
    _emit(record, args)
    _table([("palette", c.palette_size), ("star coloring", valid), ("bound", bound)])
    return EXIT_OK if valid else EXIT_FAILED


def cmd_arrangeability(args) -> int:
    g = _load_graph(args.graph)
    if args.ordering:
        order = formats.parse_ordering(_read(args.ordering))
        if len(order) != g.n:
            raise ValidationError("ordering does not match the graph")
        cert = arrangeability_of_ordering(g, order)
        mode = "ordering"
    else:
        cert = arrangeability_exact(g, cap=args.cap if args.cap is not None else ARRANGEABILITY_CAP)
        mode = "exact"
    record = {"k": cert.k, "ordering": list(cert.ordering.perm), "worst_vertex": cert.worst_vertex, "mode": mode}
    _emit(record, args)
    _table([("arrangeability", cert.k), ("mode", mode), ("worst vertex", cert.worst_vertex)])
    return EXIT_OK


def cmd_mad(args) -> int:
    if args.sigma:
        g, s = _load_instance(args)
        target = build_sigma_graph(g, s, also_proper=args.also_proper)
        extra = {"rho": rho(s)}
    else:
        target = _load_graph(args.graph)
        extra = {}
    density, dense = max_density(target)
    mad = 2 * density
    record = {"mad": mad, "floor_mad_plus_one": floor(mad) + 1, "densest_subgraph": dense, **extra}
    _emit(record, args)
    _table([("mad", mad), ("floor(mad)+1", floor(mad) + 1)])
    return EXIT_OK


def cmd_clique(args) -> int:
    cap = args.cap if args.cap is not None else CLIQUE_CAP
    if args.sigma:
        g, s = _load_instance(args)
        target = build_sigma_graph(g, s)
    else:
        target = _load_graph(args.graph)
    size, members = clique_number_exact(target, cap=cap)
    _emit({"omega": size, "clique": members}, args)
    _table([("omega", size), ("clique", " ".join(map(str, sorted(members))))])
    return EXIT_OK


def cmd_extract_rank2(args) -> int:
    h = formats.parse_hypergraph(_read(args.hypergraph))
    y = extract_rank2_subhypergraph(h, args.n, seed=args.seed)
    ok = is_rank2_full_on(h, y) and len(y) >= args.n
    _emit({"vertices": y, "size": len(y), "n": args.n, "verified": ok}, args)
    _table([("|Y|", len(y)), ("verified", ok)])
    return EXIT_OK if ok else EXIT_FAILED


def cmd_extract_subdivision(args) -> int:
    g, s = _load_instance(args)
    if args.clique:
        clique = [int(x) for x in args.clique.replace(",", " ").split()]
    else:
        clique = sorted(clique_number_exact(build_sigma_graph(g, s), cap=args.cap or CLIQUE_CAP)[1])
    branch, subdividers = extract_subdivided_clique(g, s, clique, args.n)
    ok = is_subdivided_clique(g, branch, subdividers)
    record = {
        "branch": branch,
        "subdividers": [[u, v, w] for (u, v), w in sorted(subdividers.items())],
        "verified": ok,
    }
    _emit(record, args)
    _table([("branch", " ".join(map(str, branch))), ("verified", ok)])
    return EXIT_OK if ok else EXIT_FAILED


def cmd_gen(args) -> int:
    if args.family == "subdivided-clique":
        inst = gen_subdivided_clique(args.n)
    elif args.family == "subdivided-biclique":
        inst = gen_subdivided_biclique(args.n)
    elif args.family == "star-example":
        inst = gen_star_example(args.n)
    else:
        inst = gen_random_instance(args.n, args.edge_prob, args.rho_cap, seed=args.seed, depth=args.depth)
    graph_text = formats.format_graph(inst.graph)
    sigma_text = formats.format_sigma(inst.sigma) if inst.sigma is not None else None
    record = {"stats": inst.stats}
    if args.out:
        Path(f"{args.out}.graph").write_text(graph_text)
        record["graph_file"] = f"{args.out}.graph"
        if sigma_text is not None:
            Path(f"{args.out}.sigma").write_text(sigma_text)
            record["sigma_file"] = f"{args.out}.sigma"
    else:
        record["graph"] = graph_text
        if sigma_text is not None:
            record["sigma"] = sigma_text
    _emit(record, args)
    _table([(k, v) for k, v in inst.stats.items()])
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed, count=args.count)
    _emit(report, args)
    by_check: dict[str, list[int]] = {}
    for c in report["checks"]:
        tally = by_check.setdefault(c["check"], [0, 0])
        tally[0] += 1
        tally[1] += not c["pass"]
    _table([(name, f"{n} checked, {bad} failed") for name, (n, bad) in by_check.items()])
    return EXIT_FAILED if report["failures"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    common.add_argument("--depth", type=int, default=1, help="depth assumed when a sigma file has no header")
    common.add_argument("--palette", type=int, help="uniform palette size for list-based commands")
    common.add_argument("--cap", type=int, help="size cap for the exact oracle used by the command")
    common.add_argument("--also-proper", action="store_true", help="also require a proper coloring of G")
    common.add_argument("--out", help="file (or file prefix for gen) receiving the main artifact")

    parser = argparse.ArgumentParser(prog="sigmacolor", description="Sigma-coloring toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("build-sigma-graph", cmd_build_sigma_graph, "write G_sigma in the graph format")
    p.add_argument("graph")
    p.add_argument("sigma")

    p = add("color", cmd_color, "sigma-color an instance")
    p.add_argument("graph")
    p.add_argument("sigma")
    p.add_argument("--strategy", choices=STRATEGIES, default="greedy")

    p = add("star-color", cmd_star_color, "star-color a graph")
    p.add_argument("graph")
    p.add_argument("--ordering", help="ordering file (default: degeneracy ordering)")
    p.add_argument("--lists", help="list-assignment file")
    p.add_argument("--exact", action="store_true", help="compute the star chromatic number instead")

    p = add("arrangeability", cmd_arrangeability, "arrangeability of a graph or of a given ordering")
    p.add_argument("graph")
    p.add_argument("--ordering", help="evaluate this ordering instead of searching")

    p = add("mad", cmd_mad, "maximum average degree of G_sigma (or of G without a sigma file)")
    p.add_argument("graph")
    p.add_argument("sigma", nargs="?")

    p = add("clique", cmd_clique, "largest sigma-clique (or clique of G without a sigma file)")
    p.add_argument("graph")
    p.add_argument("sigma", nargs="?")

    p = add("extract-rank2", cmd_extract_rank2, "rank-2 full subset of a full hypergraph")
    p.add_argument("hypergraph")
    p.add_argument("--n", type=int, required=True)

    p = add("extract-subdivision", cmd_extract_subdivision, "1-subdivided clique from a sigma-clique")
    p.add_argument("graph")
    p.add_argument("sigma")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--clique", help="sigma-clique vertices (default: a maximum one)")

    p = add("gen", cmd_gen, "generate a fixture family or a random instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--edge-prob", type=float, default=0.3)
    p.add_argument("--rho-cap", type=int, default=3)

    p = add("verify", cmd_verify, "run an inequality suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--count", type=int, default=20)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        code = EXIT_CAP
        err = exc
    except (ValueError, SigmaColorError) as exc:
        code = EXIT_USAGE if isinstance(exc, ValueError) else EXIT_FAILED
        err = exc
    sys.stdout.write(json.dumps({"error": type(err).__name__, "message": str(err)}) + "\n")
    print(f"error: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
