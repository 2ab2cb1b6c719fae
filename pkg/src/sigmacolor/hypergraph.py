"""Σ-cliques, full hypergraphs and the two extraction procedures.

A Σ-clique seen through its witnesses is a full hypergraph: every pair of
vertices lies in some hyperedge.  ``extract_rank2_subhypergraph`` finds a
large vertex set on which the chosen covering hyperedges meet in exactly the
pair, and ``extract_subdivided_clique`` turns a large Σ-clique of a ρ = 2
system into a 1-subdivided clique of the host graph.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import ceil, comb
from typing import Iterable, Mapping

from .errors import (
    CliqueTooSmall,
    NotASigmaClique,
    SamplingBudgetExhausted,
    TooFewVertices,
    ValidationError,
    WrongDepth,
    WrongRho,
)
from .graph import CLIQUE_CAP, Graph, clique_number_exact
from .sigma import NeighborhoodSystem, build_sigma_graph, rho, sigma_witnesses

RETRY_FACTOR = 64


class FullHypergraph:
    """Hypergraph in which every pair of vertices lies in a hyperedge.

    ``pair_witness[(u, v)]`` (u < v) is the index of the lowest-indexed
    hyperedge containing both, unless a choice is supplied.
    """

    __slots__ = ("vertices", "hyperedges", "pair_witness")

    def __init__(
        self,
        vertices: Iterable[int],
        hyperedges: Iterable[Iterable[int]],
        pair_witness: Mapping[tuple[int, int], int] | None = None,
    ):
        self.vertices = frozenset(vertices)
        self.hyperedges = tuple(frozenset(e) for e in hyperedges)
        for i, e in enumerate(self.hyperedges):
            if not e <= self.vertices:
                raise ValidationError(f"hyperedge {i} uses vertices outside the vertex set")
        chosen: dict[tuple[int, int], int] = {}
        for i, e in enumerate(self.hyperedges):
            for pair in combinations(sorted(e), 2):
                chosen.setdefault(pair, i)
        if pair_witness is not None:
            for pair, i in pair_witness.items():
                u, v = sorted(pair)
                if not {u, v} <= self.hyperedges[i]:
                    raise ValidationError(f"hyperedge {i} does not contain pair {pair}")
                chosen[(u, v)] = i
        for pair in combinations(sorted(self.vertices), 2):
            if pair not in chosen:
                raise ValidationError(f"pair {pair} is not covered by any hyperedge")
        self.pair_witness = chosen

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def rank(self) -> int:
        return max((len(e) for e in self.hyperedges), default=0)

    def witness_edge(self, u: int, v: int) -> frozenset[int]:
        return self.hyperedges[self.pair_witness[(u, v) if u < v else (v, u)]]

    def __repr__(self):
        return f"FullHypergraph(n={self.n}, m={len(self.hyperedges)}, rank={self.rank})"


def omega_sigma(g: Graph, s: NeighborhoodSystem, cap: int = CLIQUE_CAP) -> tuple[int, frozenset[int]]:
    """Largest Σ-clique, i.e. the clique number of G_Σ."""
    return clique_number_exact(build_sigma_graph(g, s), cap=cap)


def is_sigma_clique(s: NeighborhoodSystem, c: Iterable[int]) -> bool:
    covered = sigma_witnesses(s)
    return all(pair in covered for pair in combinations(sorted(set(c)), 2))


def sigma_clique_to_hypergraph(g: Graph, s: NeighborhoodSystem, c: Iterable[int]) -> FullHypergraph:
    """Hyperedges Σ(w) ∩ C for every witness w meeting C in at least two vertices.

    Hyperedges are listed by increasing witness id, so the default pair
    witness is the lowest-id witness.
    """
    c = frozenset(c)
    if not is_sigma_clique(s, c):
        raise NotASigmaClique("some pair of the set has no common witness")
    edges = [s[w] & c for w in range(g.n) if len(s[w] & c) >= 2]
    return FullHypergraph(c, edges)


def is_rank2_full_on(h: FullHypergraph, y: Iterable[int]) -> bool:
    """Every pair of ``y`` lies in a hyperedge meeting ``y`` in exactly that pair."""
    y = frozenset(y)
    if not y <= h.vertices:
        raise ValidationError("set is not contained in the hypergraph")
    for u, v in combinations(sorted(y), 2):
        if not any(u in e and v in e and len(e & y) == 2 for e in h.hyperedges):
            return False
    return True


def bad_pairs(h: FullHypergraph, x: frozenset[int]) -> list[tuple[int, int]]:
    """Pairs u, v of ``x`` whose chosen hyperedge meets ``x`` in more than two vertices."""
    return [
        (u, v) for u, v in combinations(sorted(x), 2) if len(h.witness_edge(u, v) & x) > 2
    ]


def expected_bad_pairs_bound(n_vertices: int, rank: int, n: int) -> Fraction:
    """C(N, 2) · (r-2) · C(N-3, 2n-3) / C(N, 2n): bound on E[#bad pairs] for a random 2n-set."""
    big = n_vertices
    if rank <= 2:
        return Fraction(0)
    p = Fraction((rank - 2) * comb(big - 3, 2 * n - 3), comb(big, 2 * n))
    return comb(big, 2) * p


def retry_cap(n_vertices: int, rank: int, n: int) -> int:
    """64 times the Markov estimate 1 / (1 - E/n) of the expected rounds."""
    expected = expected_bad_pairs_bound(n_vertices, rank, n)
    if expected >= n:
        return RETRY_FACTOR
    return RETRY_FACTOR * ceil(1 / (1 - expected / n))


def extract_rank2_subhypergraph(h: FullHypergraph, n: int, seed: int = 0) -> frozenset[int]:
    """Vertex set Y, |Y| ≥ n, on which every chosen hyperedge e_{u,v} meets Y in {u, v}.

    Needs at least 4rn² + 2 vertices.  Each round draws a uniform 2n-subset X;
    once fewer than n pairs are bad, one endpoint of each bad pair is deleted.
    """
    r = max(h.rank, 2)
    if n < 1:
        raise ValueError("n must be positive")
    if h.n < 4 * r * n * n + 2:
        raise TooFewVertices(f"need at least {4 * r * n * n + 2} vertices, have {h.n}")
    rng = random.Random(seed)
    pool = sorted(h.vertices)
    budget = retry_cap(h.n, r, n)
    for _ in range(budget):
        x = frozenset(rng.sample(pool, 2 * n))
        bad = bad_pairs(h, x)
        if len(bad) >= n:
            continue
        y = set(x)
        for u, v in bad:
            if u in y and v in y:
                y.discard(v)
        return frozenset(y)
    raise SamplingBudgetExhausted(f"no good sample in {budget} rounds")


def caro_wei_independent_set(g: Graph, vertices: Iterable[int]) -> list[int]:
    """Greedy independent set in the subgraph induced by ``vertices``.

    Repeatedly takes a minimum-degree vertex (lowest id on ties) and deletes
    its closed neighbourhood; the result has at least Σ 1/(d(v)+1) vertices.
    """
    alive = set(vertices)
    chosen = []
    while alive:
        v = min(alive, key=lambda x: (len(g.neighbors(x) & alive), x))
        chosen.append(v)
        alive -= g.neighbors(v) | {v}
    return chosen


def extract_subdivided_clique(
    g: Graph, s: NeighborhoodSystem, c: Iterable[int], n: int
) -> tuple[list[int], dict[tuple[int, int], int]]:
    """A 1-subdivided K_n inside ``g`` from a Σ-clique of size at least 3n (ρ = 2).

    Branch vertices are joined whenever some w outside C has Σ(w) = {u, v};
    at most |C| pairs miss such a witness, so the complement graph on C has
    average degree at most 2 and the Caro-Wei greedy finds n pairwise joined
    vertices.  Returns the branch vertices and, for every pair, the
    subdividing vertex (lowest id).
    """
    if rho(s) != 2:
        raise WrongRho(f"extraction needs rho = 2, got {rho(s)}")
    if s.depth != 1:
        raise WrongDepth("extraction needs a depth-1 system")
    c = sorted(set(c))
    if not is_sigma_clique(s, c):
        raise NotASigmaClique("some pair of the set has no common witness")
    if len(c) < 3 * n:
        raise CliqueTooSmall(
            f"need a Σ-clique of size {3 * n}, got {len(c)}", {"clique_size": len(c)}
        )
    inside = set(c)
    outside_witness: dict[tuple[int, int], int] = {}
    for w in range(g.n):
        if w not in inside and len(s[w]) == 2 and s[w] <= inside:
            pair = tuple(sorted(s[w]))
            outside_witness.setdefault(pair, w)
    missing = [p for p in combinations(c, 2) if p not in outside_witness]
    complement = Graph(g.n, missing)
    independent = caro_wei_independent_set(complement, c)
    diagnostics = {
        "clique_size": len(c),
        "pairs_without_outside_witness": len(missing),
        "turan_threshold": comb(len(c), 2) - len(c),
        "independent_set_size": len(independent),
    }
    if len(independent) < n:
        raise CliqueTooSmall(f"found only {len(independent)} branch vertices", diagnostics)
    branch = sorted(independent[:n])
    subdividers = {pair: outside_witness[pair] for pair in combinations(branch, 2)}
    return branch, subdividers


def is_subdivided_clique(g: Graph, branch: list[int], subdividers: Mapping[tuple[int, int], int]) -> bool:
    """Check that ``branch`` plus ``subdividers`` form a 1-subdivision of K_n in ``g``."""
    branch_set = set(branch)
    used = list(subdividers.values())
    if len(set(used)) != len(used) or branch_set & set(used) or len(branch_set) != len(branch):
        return False
    for u, v in combinations(sorted(branch), 2):
        w = subdividers.get((u, v))
        if w is None or not (g.has_edge(u, w) and g.has_edge(v, w)):
            return False
    return len(subdividers) == comb(len(branch), 2)


def random_full_hypergraph(n_vertices: int, rank: int, seed=0) -> FullHypergraph:
    """Cover every pair by random hyperedges of size ``rank``.

    Pairs are visited in random order; an uncovered pair {u, v} gets a new
    hyperedge made of u, v and ``rank - 2`` further random vertices.
    """
    if rank < 2:
        raise ValueError("rank must be at least 2")
    rng = random.Random(seed)
    pairs = list(combinations(range(n_vertices), 2))
    rng.shuffle(pairs)
    covered: set[tuple[int, int]] = set()
    edges = []
    for u, v in pairs:
        if (u, v) in covered:
            continue
        others = [x for x in range(n_vertices) if x != u and x != v]
        e = sorted({u, v, *rng.sample(others, min(rank - 2, len(others)))})
        edges.append(e)
        covered.update(combinations(e, 2))
    return FullHypergraph(range(n_vertices), edges)
