"""Generators for the extremal constructions and random fuzzing instances.

Labelling convention: branch vertices first, then subdividing vertices in
lexicographic edge order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import NamedTuple, Sequence

from .errors import PathTooLong, ValidationError
from .graph import Graph, neighborhood_at_depth
from .sigma import NeighborhoodSystem, rho


class Instance(NamedTuple):
    graph: Graph
    sigma: NeighborhoodSystem | None
    stats: dict


def gen_subdivided_clique(n: int) -> Instance:
    """K_n* with Σ(v) = N(v) on the subdividing vertices."""
    if n < 2:
        raise ValueError("n must be at least 2")
    edges, sigma = [], {}
    for idx, (i, j) in enumerate(combinations(range(n), 2)):
        w = n + idx
        edges += [(i, w), (j, w)]
        sigma[w] = (i, j)
    g = Graph(n + comb(n, 2), edges)
    s = NeighborhoodSystem(g, sigma)
    stats = {
        "family": "subdivided_clique",
        "n": n,
        "vertices": g.n,
        "edges": g.m,
        "rho": 2,
        "depth": 1,
        "chi_sigma_lower": n,
        "chi_sigma_upper": n,
    }
    return Instance(g, s, stats)


def gen_subdivided_biclique(n: int) -> Instance:
    """H_n, the 1-subdivision of K_{n,n}.  No neighborhood system is attached."""
    if n < 1:
        raise ValueError("n must be at least 1")
    edges = []
    for i in range(n):
        for j in range(n):
            w = 2 * n + i * n + j
            edges += [(i, w), (n + j, w)]
    g = Graph(2 * n + n * n, edges)
    stats = {
        "family": "subdivided_biclique",
        "n": n,
        "vertices": g.n,
        "edges": g.m,
        "star_chromatic_upper": 3,
        "arrangeability_lower": Fraction(n - 1, 2),
    }
    return Instance(g, None, stats)


def gen_star_example(n: int) -> Instance:
    """S_n: a star whose leaves are v_1..v_n and v_{i,j}, with Σ(v_{i,j}) = {v_i, v_j}.

    Vertex 0 is the center, 1..n are v_i, the v_{i,j} follow in lexicographic
    order.  The system has depth 2.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    total = 1 + n + comb(n, 2)
    g = Graph.star(total - 1)
    sigma = {
        1 + n + idx: (1 + i, 1 + j) for idx, (i, j) in enumerate(combinations(range(n), 2))
    }
    s = NeighborhoodSystem(g, sigma, depth=2)
    stats = {
        "family": "star_example",
        "n": n,
        "vertices": g.n,
        "edges": g.m,
        "rho": 2,
        "depth": 2,
        "chi_sigma_lower": n,
    }
    return Instance(g, s, stats)


@dataclass(frozen=True)
class Embedding:
    """Where a pattern graph sits inside its subdivision.

    ``paths[i]`` runs from the image of the first endpoint of the i-th
    pattern edge (sorted order) to the image of the second.
    """

    pattern: Graph
    branch: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    paths: tuple[tuple[int, ...], ...] = field(repr=False)


def gen_subdivision(h: Graph, per_edge: Sequence[int]) -> tuple[Graph, Embedding]:
    """Subdivide the i-th edge of ``h`` (sorted order) ``per_edge[i]`` times."""
    pattern_edges = h.sorted_edges()
    if len(per_edge) != len(pattern_edges):
        raise ValidationError("need one subdivision count per pattern edge")
    if any(k < 0 for k in per_edge):
        raise ValidationError("subdivision counts must be non-negative")
    next_id = h.n
    edges, paths = [], []
    for (u, v), k in zip(pattern_edges, per_edge):
        inner = list(range(next_id, next_id + k))
        next_id += k
        path = (u, *inner, v)
        edges.extend(zip(path, path[1:]))
        paths.append(path)
    g = Graph(next_id, edges)
    return g, Embedding(h, tuple(range(h.n)), tuple(pattern_edges), tuple(paths))


def encode_depth_d_system(subdivided: Graph, embedding: Embedding, d: int) -> NeighborhoodSystem:
    """Put Σ(m) = {u_i, u_j} on the middle m of every subdivided pattern edge.

    The middle is internal vertex number ⌈k/2⌉ of a path with k internal
    vertices.  Paths may have at most 4d + 2 edges, which keeps the middle
    within distance 2d + 1 of both ends; the result has depth 2d + 1.
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    sigma = {}
    for path in embedding.paths:
        length = len(path) - 1
        if length > 4 * d + 2:
            raise PathTooLong(f"path of length {length} exceeds {4 * d + 2}")
        internal = length - 1
        if internal < 1:
            raise PathTooLong("every pattern edge must be subdivided at least once")
        middle = path[(internal + 1) // 2]
        sigma[middle] = (path[0], path[-1])
    return NeighborhoodSystem(subdivided, sigma, depth=2 * d + 1)


def gen_random_instance(
    n: int, edge_prob: float, rho_cap: int, seed: int, depth: int = 1
) -> Instance:
    """G(n, p) with each Σ(v) a random subset of N^depth(v) of at most ``rho_cap`` vertices.

    The size of Σ(v) is uniform on 0..min(rho_cap, |N^depth(v)|), then the
    subset is uniform among those of that size.
    """
    if not 0 <= edge_prob <= 1:
        raise ValueError("edge_prob must lie in [0, 1]")
    if rho_cap < 0:
        raise ValueError("rho_cap must be non-negative")
    rng = random.Random(seed)
    g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < edge_prob])
    sigma = {}
    for v in range(n):
        ball = sorted(neighborhood_at_depth(g, v, depth))
        size = rng.randint(0, min(rho_cap, len(ball)))
        sigma[v] = rng.sample(ball, size)
    s = NeighborhoodSystem(g, sigma, depth=depth)
    stats = {
        "family": "random",
        "n": n,
        "edge_prob": edge_prob,
        "rho_cap": rho_cap,
        "seed": seed,
        "vertices": g.n,
        "edges": g.m,
        "rho": rho(s),
        "depth": depth,
    }
    return Instance(g, s, stats)
