"""Neighborhood systems, the conflict graph G_Σ, mad(Σ) and realizers."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .errors import ValidationError
from .flow import maximum_average_degree
from .graph import Graph, neighborhood_at_depth


class NeighborhoodSystem:
    """Σ: a subset Σ(v) of the radius-``depth`` ball around every vertex.

    Construction validates Σ(v) ⊆ N^d(v) against ``graph``.  With
    ``clamp=True`` out-of-ball vertices are dropped instead of rejected and
    listed in ``dropped``.
    """

    __slots__ = ("n", "sigma", "depth", "dropped")

    def __init__(
        self,
        graph: Graph,
        sigma: Mapping[int, Iterable[int]] | Iterable[Iterable[int]],
        depth: int = 1,
        clamp: bool = False,
    ):
        if depth < 1:
            raise ValidationError("depth must be at least 1")
        if isinstance(sigma, Mapping):
            items = sigma
        else:
            items = dict(enumerate(sigma))
        sets = [frozenset()] * graph.n
        dropped: dict[int, frozenset[int]] = {}
        for v, members in items.items():
            if not 0 <= v < graph.n:
                raise ValidationError(f"vertex {v} out of range", vertex=v)
            members = frozenset(members)
            if not members:
                continue
            ball = neighborhood_at_depth(graph, v, depth)
            outside = members - ball
            if outside:
                if not clamp:
                    raise ValidationError(
                        f"Σ({v}) contains {sorted(outside)} outside N^{depth}({v})", vertex=v
                    )
                dropped[v] = outside
                members = members & ball
            sets[v] = members
        self.n = graph.n
        self.sigma = tuple(sets)
        self.depth = depth
        self.dropped = dropped

    @classmethod
    def empty(cls, graph: Graph, depth: int = 1) -> "NeighborhoodSystem":
        return cls(graph, {}, depth=depth)

    @classmethod
    def full(cls, graph: Graph) -> "NeighborhoodSystem":
        """Σ(v) = N(v) for every vertex."""
        return cls(graph, {v: graph.adj[v] for v in range(graph.n)})

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.sigma[v]

    def __len__(self):
        return self.n

    def restricted(self, graph: Graph, sigma) -> "NeighborhoodSystem":
        """A system on the same graph and depth with different sets."""
        return NeighborhoodSystem(graph, sigma, depth=self.depth)

    def __eq__(self, other):
        return (
            isinstance(other, NeighborhoodSystem)
            and self.sigma == other.sigma
            and self.depth == other.depth
        )

    def __hash__(self):
        return hash((self.sigma, self.depth))

    def __repr__(self):
        return f"NeighborhoodSystem(n={self.n}, depth={self.depth}, rho={rho(self)})"


def rho(s: NeighborhoodSystem) -> int:
    return max((len(x) for x in s.sigma), default=0)


def sigma_witnesses(s: NeighborhoodSystem) -> dict[tuple[int, int], tuple[int, ...]]:
    """Map each edge {u, v} of G_Σ (as u < v) to the sorted witnesses w with u, v ∈ Σ(w)."""
    index: dict[tuple[int, int], list[int]] = {}
    for w, members in enumerate(s.sigma):
        for u, v in combinations(sorted(members), 2):
            index.setdefault((u, v), []).append(w)
    return {pair: tuple(ws) for pair, ws in index.items()}


def build_sigma_graph(g: Graph, s: NeighborhoodSystem, also_proper: bool = False) -> Graph:
    """G_Σ: u ~ v iff some w has {u, v} ⊆ Σ(w).

    ``also_proper`` adds the edges of ``g`` so colorings must also be proper
    on ``g``.
    """
    if s.n != g.n:
        raise ValidationError("system and graph have different vertex counts")
    edges = set(sigma_witnesses(s))
    if also_proper:
        edges |= g.edges
    return Graph(g.n, edges)


def mad_sigma(g: Graph, s: NeighborhoodSystem) -> Fraction:
    """Exact maximum average degree of G_Σ."""
    return maximum_average_degree(build_sigma_graph(g, s))


class Realizer:
    """Connecting paths for the witness pairs of a neighborhood system.

    ``paths[(v, u)]`` for u ∈ Σ(v) is a vertex sequence from u to v.
    """

    __slots__ = ("paths", "depth")

    def __init__(self, g: Graph, paths: Mapping[tuple[int, int], Iterable[int]], depth: int):
        checked = {}
        for (v, u), path in paths.items():
            path = tuple(path)
            if not path or path[0] != u or path[-1] != v:
                raise ValidationError(f"path for pair ({v}, {u}) has wrong endpoints", vertex=v)
            if len(set(path)) != len(path):
                raise ValidationError(f"path for pair ({v}, {u}) repeats a vertex", vertex=v)
            if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
                raise ValidationError(f"path for pair ({v}, {u}) is not a path of G", vertex=v)
            if len(path) - 1 > 2 * depth:
                raise ValidationError(f"path for pair ({v}, {u}) longer than {2 * depth}", vertex=v)
            checked[(v, u)] = path
        self.paths = checked
        self.depth = depth

    def __len__(self):
        return len(self.paths)


def _shortest_path(g: Graph, source: int, target: int) -> tuple[int, ...]:
    parent = {source: None}
    queue = deque([source])
    while queue and target not in parent:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def default_realizer(g: Graph, s: NeighborhoodSystem) -> Realizer:
    """BFS shortest paths for every ordered pair (v, u) with u ∈ Σ(v)."""
    paths = {}
    for v in range(g.n):
        for u in sorted(s[v]):
            paths[(v, u)] = _shortest_path(g, u, v)
    return Realizer(g, paths, s.depth)


def realizer_complexity(r: Realizer) -> int:
    """Largest number of realizer paths through a single vertex."""
    load: dict[int, int] = {}
    for path in r.paths.values():
        for x in path:
            load[x] = load.get(x, 0) + 1
    return max(load.values(), default=0)
