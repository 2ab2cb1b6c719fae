"""Arrangeability of vertex orderings.

For an ordering ≺ the cost of a vertex v is the number of vertices w ≺ v
sharing a neighbour u with v where v ≺ u.  The arrangeability of the
ordering is the largest cost, and the arrangeability of the graph is the
smallest value over all orderings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceTooLarge
from .graph import Graph, Ordering, degeneracy_ordering

ARRANGEABILITY_CAP = 10


@dataclass(frozen=True)
class ArrangeabilityCertificate:
    ordering: Ordering
    k: int
    worst_vertex: int | None


def vertex_costs(g: Graph, o: Ordering) -> list[int]:
    pos = o.position
    costs = []
    for v in range(g.n):
        earlier = set()
        for u in g.adj[v]:
            if pos[u] > pos[v]:
                earlier.update(w for w in g.adj[u] if pos[w] < pos[v])
        costs.append(len(earlier))
    return costs


def arrangeability_of_ordering(g: Graph, o: Ordering) -> ArrangeabilityCertificate:
    if len(o) != g.n:
        raise ValueError("ordering does not match the graph")
    costs = vertex_costs(g, o)
    if not costs:
        return ArrangeabilityCertificate(o, 0, None)
    k = max(costs)
    worst = next(v for v in o.perm if costs[v] == k)
    return ArrangeabilityCertificate(o, k, worst)


def arrangeability_exact(g: Graph, cap: int = ARRANGEABILITY_CAP) -> ArrangeabilityCertificate:
    """Minimum arrangeability over all orderings.

    The cost of a vertex depends only on the *set* of vertices placed before
    it, so the search is a dynamic program over placed sets.  The returned
    witness is the lexicographically smallest optimal ordering.
    """
    n = g.n
    if n > cap:
        raise InstanceTooLarge("arrangeability_exact", n, cap)
    if n == 0:
        return ArrangeabilityCertificate(Ordering(()), 0, None)
    masks = g.masks
    full = (1 << n) - 1

    def cost(v: int, placed: int) -> int:
        later = masks[v] & ~placed & full
        reach = 0
        while later:
            low = later & -later
            reach |= masks[low.bit_length() - 1]
            later ^= low
        return (reach & placed).bit_count()

    # rest[S]: best achievable maximum cost for the vertices outside S
    rest = [0] * (1 << n)
    for placed in range(full - 1, -1, -1):
        best = n
        free = full & ~placed
        while free:
            low = free & -free
            v = low.bit_length() - 1
            value = max(cost(v, placed), rest[placed | low])
            if value < best:
                best = value
            free ^= low
        rest[placed] = best

    k = rest[0]
    perm, placed = [], 0
    for _ in range(n):
        for v in range(n):
            bit = 1 << v
            if not placed & bit and max(cost(v, placed), rest[placed | bit]) <= k:
                perm.append(v)
                placed |= bit
                break
    cert = arrangeability_of_ordering(g, Ordering(perm))
    assert cert.k == k
    return cert


def heuristic_ordering(g: Graph) -> Ordering:
    """Degeneracy ordering; cheap and without any optimality claim."""
    return degeneracy_ordering(g)[0]
