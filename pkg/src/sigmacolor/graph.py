"""Simple undirected graphs, orderings, colorings and small exact oracles.

Vertices are the integers ``0 .. n-1``.  Everything here is immutable once
built, so instances can be shared freely.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import InstanceTooLarge, ValidationError

CHROMATIC_CAP = 24
CLIQUE_CAP = 64


class Graph:
    """Simple undirected graph on ``range(n)``.

    ``edges`` is a frozenset of ``(u, v)`` pairs with ``u < v``; ``adj[v]`` is
    the sorted tuple of neighbours of ``v``.
    """

    __slots__ = ("n", "edges", "adj", "_adjsets", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValidationError("vertex count must be non-negative")
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"self-loop at {u}", vertex=u)
            normalized.add((u, v) if u < v else (v, u))
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in normalized:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges = frozenset(normalized)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._adjsets = tuple(frozenset(s) for s in nbrs)
        self._masks = None

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks, built on first use."""
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in nb) for nb in self.adj)
        return self._masks

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return the induced subgraph relabelled to ``0..k-1`` and the label list."""
        labels = sorted(set(vertices))
        index = {v: i for i, v in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(labels), edges), labels

    def union(self, other: "Graph") -> "Graph":
        if other.n != self.n:
            raise ValidationError("graphs must share the vertex set")
        return Graph(self.n, self.edges | other.edges)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Ordering:
    """A permutation of the vertices together with its inverse."""

    __slots__ = ("perm", "position")

    def __init__(self, perm: Sequence[int]):
        perm = tuple(perm)
        position = [-1] * len(perm)
        for i, v in enumerate(perm):
            if not 0 <= v < len(perm) or position[v] != -1:
                raise ValidationError(f"not a permutation of range({len(perm)})")
            position[v] = i
        self.perm = perm
        self.position = tuple(position)

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(range(n))

    def __len__(self):
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def precedes(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]

    def __eq__(self, other):
        return isinstance(other, Ordering) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"Ordering({list(self.perm)})"


class Coloring:
    """Total map vertex -> non-negative integer color."""

    __slots__ = ("color",)

    def __init__(self, colors: Iterable[int]):
        colors = tuple(int(c) for c in colors)
        if any(c < 0 for c in colors):
            raise ValidationError("colors must be non-negative integers")
        self.color = colors

    @property
    def palette_size(self) -> int:
        return len(set(self.color))

    def __getitem__(self, v: int) -> int:
        return self.color[v]

    def __len__(self):
        return len(self.color)

    def __iter__(self):
        return iter(self.color)

    def normalized(self) -> "Coloring":
        """Relabel colors to ``0..palette_size-1`` preserving their order."""
        rank = {c: i for i, c in enumerate(sorted(set(self.color)))}
        return Coloring(rank[c] for c in self.color)

    def __eq__(self, other):
        return isinstance(other, Coloring) and self.color == other.color

    def __hash__(self):
        return hash(self.color)

    def __repr__(self):
        return f"Coloring({list(self.color)})"


def degeneracy_ordering(g: Graph) -> tuple[Ordering, int]:
    """Smallest-last ordering.

    A minimum-degree vertex (lowest id on ties) is removed repeatedly; the
    removal sequence is reversed so every vertex has at most ``degeneracy``
    neighbours before it.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    removal = []
    degeneracy = 0
    for _ in range(g.n):
        v = min((v for v in range(g.n) if alive[v]), key=lambda x: (deg[x], x))
        degeneracy = max(degeneracy, deg[v])
        alive[v] = False
        removal.append(v)
        for u in g.adj[v]:
            if alive[u]:
                deg[u] -= 1
    removal.reverse()
    return Ordering(removal), degeneracy


def back_degrees(g: Graph, order: Ordering) -> list[int]:
    """Number of neighbours of each vertex that precede it in ``order``."""
    pos = order.position
    return [sum(1 for u in g.adj[v] if pos[u] < pos[v]) for v in range(g.n)]


def greedy_coloring(g: Graph, order: Iterable[int]) -> Coloring:
    """First-fit coloring along ``order``."""
    color = [-1] * g.n
    for v in order:
        used = {color[u] for u in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return Coloring(color)


def neighborhood_at_depth(g: Graph, v: int, d: int) -> frozenset[int]:
    """Vertices at distance 1..d from ``v``."""
    if d < 1:
        raise ValueError("depth must be at least 1")
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if dist[x] == d:
            continue
        for y in g.adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    del dist[v]
    return frozenset(dist)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def is_proper(g: Graph, c: Coloring) -> bool:
    if len(c) != g.n:
        raise ValidationError("coloring must cover every vertex")
    return all(c[u] != c[v] for u, v in g.edges)


def clique_number_exact(g: Graph, cap: int = CLIQUE_CAP) -> tuple[int, frozenset[int]]:
    """Maximum clique by Bron-Kerbosch with Tomita pivoting on bitmasks."""
    if g.n > cap:
        raise InstanceTooLarge("clique_number_exact", g.n, cap)
    if g.n == 0:
        return 0, frozenset()
    masks = g.masks
    best = [0]
    witness = [0]

    def expand(r: int, size: int, p: int, x: int) -> None:
        if p == 0:
            if x == 0 and size > best[0]:
                best[0] = size
                witness[0] = r
            return
        if size + p.bit_count() <= best[0]:
            return
        px = p | x
        # pivot maximizing |P ∩ N(u)|, lowest id on ties
        pivot = max(_bits(px), key=lambda u: ((p & masks[u]).bit_count(), -u))
        candidates = p & ~masks[pivot]
        for v in _bits(candidates):
            bit = 1 << v
            expand(r | bit, size + 1, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit

    expand(0, 0, (1 << g.n) - 1, 0)
    return best[0], frozenset(_bits(witness[0]))


def chromatic_number_exact(g: Graph, cap: int = CHROMATIC_CAP) -> tuple[int, Coloring]:
    """Chromatic number with a witness, by DSATUR branch and bound.

    The search starts from the DSATUR greedy upper bound and stops as soon as
    it meets the clique lower bound.
    """
    if g.n > cap:
        raise InstanceTooLarge("chromatic_number_exact", g.n, cap)
    n = g.n
    if n == 0:
        return 0, Coloring(())
    best_coloring = dsatur_coloring(g)
    best_k = best_coloring.palette_size
    lower, clique = clique_number_exact(g, cap=max(cap, CLIQUE_CAP))
    if lower == best_k:
        return best_k, best_coloring

    colors = [-1] * n
    # forbid[v] is a bitmask of colors present on coloured neighbours of v;
    # counts[v][c] tracks multiplicity so assignments can be undone.
    counts = [[0] * best_k for _ in range(n)]
    forbid = [0] * n

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in g.adj[v]:
            counts[u][c] += 1
            forbid[u] |= 1 << c

    def unassign(v: int) -> None:
        c = colors[v]
        colors[v] = -1
        for u in g.adj[v]:
            counts[u][c] -= 1
            if counts[u][c] == 0:
                forbid[u] &= ~(1 << c)

    for i, v in enumerate(sorted(clique)):
        assign(v, i)

    state = {"k": best_k, "coloring": best_coloring}

    def select() -> int:
        chosen, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            k = (forbid[v].bit_count(), sum(1 for u in g.adj[v] if colors[u] < 0))
            if key is None or k > key:
                chosen, key = v, k
        return chosen

    def search(colored: int, used: int) -> bool:
        if colored == n:
            state["k"] = used
            state["coloring"] = Coloring(colors)
            return used == lower
        v = select()
        for c in range(used + 1):
            if max(used, c + 1) >= state["k"]:
                break
            if forbid[v] >> c & 1:
                continue
            assign(v, c)
            if search(colored + 1, max(used, c + 1)):
                return True
            unassign(v)
        return False

    search(len(clique), lower)
    return state["k"], state["coloring"]


def dsatur_coloring(g: Graph) -> Coloring:
    """Greedy DSATUR: highest saturation, then degree, then lowest id."""
    colors = [-1] * g.n
    for _ in range(g.n):
        v = max(
            (v for v in range(g.n) if colors[v] < 0),
            key=lambda x: (len({colors[u] for u in g.adj[x] if colors[u] >= 0}), g.degree(x), -x),
        )
        used = {colors[u] for u in g.adj[v]}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(colors)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
