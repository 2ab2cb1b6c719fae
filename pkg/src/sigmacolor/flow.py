"""Exact maximum subgraph density via Goldberg's min-cut construction."""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .graph import Graph


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int, rcap: int = 0) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rcap)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[u] + 1
                    queue.append(self.to[e])
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n

            def push(u: int, f: int) -> int:
                if u == t:
                    return f
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        got = push(v, min(f, self.cap[e]))
                        if got:
                            self.cap[e] -= got
                            self.cap[e ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                f = push(s, 1 << 62)
                if not f:
                    break
                total += f

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                if self.cap[e] > 0 and self.to[e] not in seen:
                    seen.add(self.to[e])
                    queue.append(self.to[e])
        return seen


def _denser_than(g: Graph, g_value: Fraction) -> frozenset[int] | None:
    """Vertex set of a subgraph with density strictly above ``g_value``, if any.

    Network: s->v with capacity m, v->t with capacity m + 2g - deg(v), and
    unit capacity both ways on every edge; all capacities scaled by the
    denominator of ``g`` to stay integral.  The min cut is below m*n exactly
    when some subgraph has |E(H)| - g|V(H)| > 0.
    """
    n, m = g.n, g.m
    a, b = g_value.numerator, g_value.denominator
    s, t = n, n + 1
    net = _Dinic(n + 2)
    for v in range(n):
        net.add_edge(s, v, m * b)
        net.add_edge(v, t, m * b + 2 * a - g.degree(v) * b)
    for u, v in g.sorted_edges():
        net.add_edge(u, v, b, b)
    if net.max_flow(s, t) >= m * n * b:
        return None
    return frozenset(net.source_side(s) - {s})


def max_density(g: Graph) -> tuple[Fraction, frozenset[int]]:
    """Maximum of |E(H)|/|V(H)| over subgraphs H, with a densest vertex set.

    Binary search on the density; two distinct attainable densities differ by
    at least 1/(n(n-1)), so once the bracket is narrower than that the last
    feasible cut is optimal.
    """
    n, m = g.n, g.m
    if m == 0:
        return Fraction(0), frozenset()
    best = frozenset(range(n))
    lo, hi = Fraction(0), Fraction(n - 1, 2)
    gap = Fraction(1, n * (n - 1))
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        found = _denser_than(g, mid)
        if found:
            lo, best = mid, found
        else:
            hi = mid
    return _density(g, best), best


def _density(g: Graph, vertices: frozenset[int]) -> Fraction:
    inside = sum(1 for u, v in g.edges if u in vertices and v in vertices)
    return Fraction(inside, len(vertices))


def maximum_average_degree(g: Graph) -> Fraction:
    return 2 * max_density(g)[0]
