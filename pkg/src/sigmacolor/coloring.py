"""Σ-colorings: constructive pipelines, validity, and exact oracles."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Callable

from .errors import InstanceTooLarge, WrongDepth
from .graph import (
    CHROMATIC_CAP,
    Coloring,
    Graph,
    chromatic_number_exact,
    degeneracy_ordering,
    greedy_coloring,
)
from .sigma import NeighborhoodSystem, build_sigma_graph, rho
from .star import orientation_from_star_coloring

CHOOSABILITY_VERTEX_CAP = 8
CHOOSABILITY_LIST_CAP = 4

PairColorer = Callable[[Graph, NeighborhoodSystem], Coloring]


def is_sigma_valid(g: Graph, s: NeighborhoodSystem, c: Coloring) -> bool:
    """Every Σ(w) is rainbow under ``c``."""
    if len(c) != g.n:
        raise ValueError("coloring must cover every vertex")
    return all(len({c[u] for u in members}) == len(members) for members in s.sigma)


def _degeneracy_greedy(h: Graph) -> Coloring:
    return greedy_coloring(h, degeneracy_ordering(h)[0].perm)


def sigma_color_greedy(g: Graph, s: NeighborhoodSystem, also_proper: bool = False) -> Coloring:
    """First-fit on G_Σ along its degeneracy ordering: at most degeneracy + 1 colors."""
    return _degeneracy_greedy(build_sigma_graph(g, s, also_proper=also_proper))


def in_arc_graph(g: Graph, s: NeighborhoodSystem, c1: Coloring) -> Graph:
    """G₂: u ~ v iff some w has u, v ∈ Σ(w) and both edges uw, vw point into w."""
    heads = orientation_from_star_coloring(g, c1).heads()
    edges = []
    for w, members in enumerate(s.sigma):
        into = [u for u in sorted(members) if heads[(u, w) if u < w else (w, u)] == w]
        edges.extend(combinations(into, 2))
    return Graph(g.n, edges)


def sigma_color_via_star(g: Graph, s: NeighborhoodSystem, c1: Coloring) -> Coloring:
    """Σ-coloring from a star coloring ``c1`` with at most k²ρ colors, k = |c1|.

    The pair (c1(v), c2(v)), where c2 properly colors G₂ with at most
    k(ρ-1)+1 colors, is packed as c1(v)·kρ + c2(v).
    """
    if s.depth != 1:
        raise WrongDepth(f"the star pipeline needs a depth-1 system, got depth {s.depth}")
    g2 = in_arc_graph(g, s, c1)
    r = rho(s)
    if r == 0:
        return Coloring([0] * g.n)
    first = c1.normalized()
    k = first.palette_size
    second = _degeneracy_greedy(g2)
    assert max(second, default=0) <= k * (r - 1)
    stride = k * r
    return Coloring(first[v] * stride + second[v] for v in range(g.n))


def pair_systems(s: NeighborhoodSystem, g: Graph) -> list[NeighborhoodSystem]:
    """Split Σ into C(ρ, 2) systems of at most one pair per vertex.

    The pairs of Σ(v), in lexicographic order, go to slots 0, 1, ...; the
    remaining slots of v stay empty.
    """
    slots: list[dict[int, tuple[int, int]]] = [{} for _ in range(comb(rho(s), 2))]
    for v, members in enumerate(s.sigma):
        for j, pair in enumerate(combinations(sorted(members), 2)):
            slots[j][v] = pair
    return [NeighborhoodSystem(g, slot, depth=s.depth) for slot in slots]


def sigma_color_product(
    g: Graph, s: NeighborhoodSystem, pair_colorer: PairColorer = sigma_color_greedy
) -> Coloring:
    """Product of ``pair_colorer`` over the pair systems of Σ.

    Uses at most k^C(ρ,2) colors when every pair coloring uses at most k.
    """
    parts = [pair_colorer(g, sub) for sub in pair_systems(s, g)]
    values = [0] * g.n
    scale = 1
    for part in parts:
        base = max(part, default=0) + 1
        for v in range(g.n):
            values[v] += part[v] * scale
        scale *= base
    return Coloring(values)


def sigma_chromatic_exact(g: Graph, s: NeighborhoodSystem, cap: int = CHROMATIC_CAP) -> int:
    return chromatic_number_exact(build_sigma_graph(g, s), cap=cap)[0]


def sigma_chromatic_with_witness(
    g: Graph, s: NeighborhoodSystem, cap: int = CHROMATIC_CAP, also_proper: bool = False
) -> tuple[int, Coloring]:
    return chromatic_number_exact(build_sigma_graph(g, s, also_proper=also_proper), cap=cap)


def _list_colorable(g: Graph, order: list[int], lists: dict[int, tuple[int, ...]]) -> bool:
    """Backtracking list coloring of the vertices in ``order``."""
    color: dict[int, int] = {}

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {color[u] for u in g.adj[v] if u in color}
        for c in lists[v]:
            if c not in taken:
                color[v] = c
                if go(i + 1):
                    return True
                del color[v]
        return False

    return go(0)


def _core(g: Graph, k: int) -> list[int]:
    """Vertices of the k-core; the rest can always be list-colored last."""
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] < k:
                alive.discard(v)
                for u in g.adj[v]:
                    if u in alive:
                        deg[u] -= 1
                changed = True
    return sorted(alive)


def choosability_check(
    g_sigma: Graph,
    k: int,
    vertex_cap: int = CHOOSABILITY_VERTEX_CAP,
    list_cap: int = CHOOSABILITY_LIST_CAP,
) -> bool:
    """Is the graph k-choosable?

    Enumerates list assignments up to renaming of colors: lists are chosen
    vertex by vertex from the colors seen so far plus the next fresh ones.
    Three reductions keep this tolerable:

    * vertices outside the k-core are dropped, they can always be colored last;
    * a prefix of lists that already admits no coloring is a counterexample;
    * assignments in which some vertex keeps a color shared with none of its
      neighbours are skipped.  A vertex-minimal uncolorable induced subgraph
      has no such color, and its lists extend to the whole core without one
      by copying lists outward along BFS trees, so a counterexample exists
      iff one exists among the remaining assignments.
    """
    if g_sigma.n > vertex_cap:
        raise InstanceTooLarge("choosability_check", g_sigma.n, vertex_cap)
    if k > list_cap:
        raise InstanceTooLarge("choosability_check", k, list_cap, unit="colors per list")
    if k <= 0:
        return g_sigma.n == 0
    core = _core(g_sigma, k)
    if not core:
        return True
    sub, _ = g_sigma.induced_subgraph(core)
    order = _bfs_order(sub)
    index = {v: i for i, v in enumerate(order)}
    # closing[i]: vertices whose closed neighbourhood is fully listed at step i
    closing: list[list[int]] = [[] for _ in order]
    for v in order:
        last = max([index[v]] + [index[u] for u in sub.adj[v]])
        closing[last].append(v)
    lists: dict[int, tuple[int, ...]] = {}

    def private_free(i: int) -> bool:
        for x in closing[i]:
            shared = set()
            for u in sub.adj[x]:
                shared.update(lists[u])
            if not shared.issuperset(lists[x]):
                return False
        return True

    def assign(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for fresh in range(k + 1):
            if k - fresh > used:
                continue
            new = tuple(range(used, used + fresh))
            for old in combinations(range(used), k - fresh):
                lists[v] = old + new
                if not private_free(i):
                    continue
                if not _list_colorable(sub, order[: i + 1], lists):
                    return False
                if not assign(i + 1, used + fresh):
                    return False
        del lists[v]
        return True

    return assign(0, 0)


def _bfs_order(g: Graph) -> list[int]:
    seen, order = set(), []
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order
