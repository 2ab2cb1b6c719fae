"""Star colorings, colored in-orientations and exact star/acyclic oracles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InstanceTooLarge, ListExhausted, NotAStarColoring, ValidationError
from .graph import Coloring, Graph, Ordering, chromatic_number_exact, is_proper

STAR_CAP = 12


@dataclass(frozen=True)
class InOrientation:
    """Orientation of every edge plus a base coloring.

    ``orientation[(u, v)]`` for an edge with u < v is the pair (tail, head).
    """

    orientation: Mapping[tuple[int, int], tuple[int, int]]
    coloring: Coloring

    def heads(self) -> dict[tuple[int, int], int]:
        return {e: arc[1] for e, arc in self.orientation.items()}

    def out_degrees(self, n: int) -> list[int]:
        out = [0] * n
        for tail, _ in self.orientation.values():
            out[tail] += 1
        return out


class ListAssignment:
    """A non-empty list of admissible colors for every vertex."""

    __slots__ = ("lists",)

    def __init__(self, lists: Mapping[int, Iterable[int]] | Iterable[Iterable[int]]):
        if isinstance(lists, Mapping):
            n = max(lists, default=-1) + 1
            raw = [lists.get(v, ()) for v in range(n)]
        else:
            raw = list(lists)
        checked = []
        for v, colors in enumerate(raw):
            colors = tuple(sorted(set(colors)))
            if not colors:
                raise ValidationError(f"vertex {v} has an empty list", vertex=v)
            checked.append(colors)
        self.lists = tuple(checked)

    @classmethod
    def uniform(cls, n: int, k: int) -> "ListAssignment":
        return cls([range(k)] * n)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.lists[v]

    def __len__(self):
        return len(self.lists)


def has_bicolored_p4(g: Graph, c: Coloring) -> bool:
    """True if some path a-b-c-d alternates two colors.

    Scans middle edges b-c: such a path exists iff b has a neighbour other
    than c colored like c and c has a neighbour other than b colored like b.
    Those two neighbours differ automatically when c(b) != c(c).
    """
    for b, cc in g.edges:
        if c[b] == c[cc]:
            continue
        if any(a != cc and c[a] == c[cc] for a in g.adj[b]) and any(
            d != b and c[d] == c[b] for d in g.adj[cc]
        ):
            return True
    return False


def is_star_coloring(g: Graph, c: Coloring) -> bool:
    return is_proper(g, c) and not has_bicolored_p4(g, c)


def verify_in_orientation(g: Graph, io: InOrientation) -> bool:
    c = io.coloring
    if set(io.orientation) != g.edges or not is_proper(g, c):
        return False
    for (u, v), (tail, head) in io.orientation.items():
        if {tail, head} != {u, v}:
            return False
    heads = io.heads()
    for w in range(g.n):
        nb = g.adj[w]
        for i, u in enumerate(nb):
            for v in nb[i + 1:]:
                if c[u] == c[v]:
                    if heads[_key(u, w)] != w or heads[_key(v, w)] != w:
                        return False
    return True


def forced_heads(g: Graph, c: Coloring) -> dict[tuple[int, int], set[int]]:
    """Heads each edge is forced to take by the 2-colored paths u-w-v through it."""
    forced: dict[tuple[int, int], set[int]] = {e: set() for e in g.edges}
    for w in range(g.n):
        seen: dict[int, int] = {}
        for u in g.adj[w]:
            if c[u] in seen:
                forced[_key(u, w)].add(w)
                forced[_key(seen[c[u]], w)].add(w)
            else:
                seen[c[u]] = u
    return forced


def in_orientation_exists(g: Graph, c: Coloring) -> bool:
    """Whether some orientation makes (c, orientation) a colored in-orientation.

    Every constraint fixes one edge's head, so an orientation exists iff the
    coloring is proper and no edge is forced both ways.
    """
    return is_proper(g, c) and all(len(h) <= 1 for h in forced_heads(g, c).values())


def orientation_from_star_coloring(g: Graph, c: Coloring) -> InOrientation:
    """Orient every edge toward the center of its bicolored star.

    An edge u-v lies in the star forest of colors {c(u), c(v)}.  The endpoint
    with two or more neighbours of the other color is the center; for an
    isolated edge the lower id is used.
    """
    if not is_star_coloring(g, c):
        raise NotAStarColoring("coloring is not a star coloring")
    orientation = {}
    for u, v in g.sorted_edges():
        du = sum(1 for x in g.adj[u] if c[x] == c[v])
        dv = sum(1 for x in g.adj[v] if c[x] == c[u])
        if du >= 2:
            center = u
        elif dv >= 2:
            center = v
        else:
            center = u
        orientation[(u, v)] = (v, u) if center == u else (u, v)
    return InOrientation(orientation, c)


def forward_sets(g: Graph, o: Ordering) -> list[set[int]]:
    """P(v): earlier neighbours of v, plus earlier u with a path u-w-v where u ≺ w."""
    pos = o.position
    result = []
    for v in range(g.n):
        p = {u for u in g.adj[v] if pos[u] < pos[v]}
        for w in g.adj[v]:
            for u in g.adj[w]:
                if u != v and pos[u] < pos[v] and pos[u] < pos[w]:
                    p.add(u)
        result.append(p)
    return result


def greedy_star_coloring(
    g: Graph,
    o: Ordering,
    lists: ListAssignment | None = None,
    palette: int | None = None,
) -> Coloring:
    """Color along ``o`` avoiding the colors already used on P(v).

    Colors come from ``lists`` (smallest admissible entry), or from
    ``range(palette)``, or, with neither, the smallest free integer.
    """
    if lists is not None and len(lists) != g.n:
        raise ValidationError("list assignment does not cover the graph")
    pred = forward_sets(g, o)
    color = [-1] * g.n
    for v in o.perm:
        used = {color[u] for u in pred[v]}
        if lists is not None:
            candidates = lists[v]
        elif palette is not None:
            candidates = range(palette)
        else:
            candidates = range(len(used) + 1)
        chosen = next((x for x in candidates if x not in used), None)
        if chosen is None:
            raise ListExhausted(v)
        color[v] = chosen
    return Coloring(color)


def _search_order(g: Graph) -> list[int]:
    """BFS order from the lowest id of each component, so partial checks bite early."""
    seen, order = set(), []
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        frontier = [root]
        while frontier:
            order.extend(frontier)
            nxt = []
            for x in frontier:
                for y in g.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
    return order


def _p4_violation(g: Graph, color: list[int], v: int) -> bool:
    """Some fully colored bicolored P4 passes through the just-colored ``v``."""
    cv = color[v]
    adj = g.adj
    for a in adj[v]:
        ca = color[a]
        if ca < 0:
            continue
        for b in adj[a]:
            if b == v or color[b] != cv:
                continue
            # v-a-b-x with x colored like a
            for x in adj[b]:
                if x != a and x != v and color[x] == ca:
                    return True
        for b in adj[v]:
            if b == a or color[b] != ca:
                continue
            # a-v-b-x with x colored like v
            for x in adj[b]:
                if x != v and x != a and color[x] == cv:
                    return True
    return False


def _exact_search(g: Graph, lower: int, violates) -> tuple[int, list[int]]:
    order = _search_order(g)
    n = g.n
    color = [-1] * n

    def extend(i: int, used: int, k: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for c in range(min(used + 1, k)):
            if any(color[u] == c for u in g.adj[v]):
                continue
            color[v] = c
            if not violates(g, color, v) and extend(i + 1, max(used, c + 1), k):
                return True
            color[v] = -1
        return False

    k = lower
    while not extend(0, 0, k):
        k += 1
    return k, color


def star_chromatic_exact(g: Graph, cap: int = STAR_CAP) -> tuple[int, Coloring]:
    if g.n > cap:
        raise InstanceTooLarge("star_chromatic_exact", g.n, cap)
    if g.n == 0:
        return 0, Coloring(())
    lower = chromatic_number_exact(g)[0]
    k, color = _exact_search(g, lower, _p4_violation)
    return k, Coloring(color)


def _cycle_violation(g: Graph, color: list[int], v: int) -> bool:
    """The colored subgraph on colors {c(v), c'} has a cycle through ``v``."""
    cv = color[v]
    by_color: dict[int, list[int]] = {}
    for u in g.adj[v]:
        if color[u] >= 0:
            by_color.setdefault(color[u], []).append(u)
    for other, starts in by_color.items():
        if len(starts) < 2:
            continue
        pair = (cv, other)
        # components of the bicolored colored subgraph with v removed
        comp: dict[int, int] = {}
        for s in starts:
            if s in comp:
                return True
            stack = [s]
            comp[s] = s
            while stack:
                x = stack.pop()
                for y in g.adj[x]:
                    if y != v and y not in comp and color[y] in pair:
                        comp[y] = s
                        stack.append(y)
    return False


def acyclic_chromatic_exact(g: Graph, cap: int = STAR_CAP) -> int:
    if g.n > cap:
        raise InstanceTooLarge("acyclic_chromatic_exact", g.n, cap)
    if g.n == 0:
        return 0
    lower = chromatic_number_exact(g)[0]
    return _exact_search(g, lower, _cycle_violation)[0]


def is_acyclic_coloring(g: Graph, c: Coloring) -> bool:
    """Proper, and every two color classes induce a forest."""
    if not is_proper(g, c):
        return False
    classes = sorted(set(c))
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            verts = [v for v in range(g.n) if c[v] in (a, b)]
            sub, _ = g.induced_subgraph(verts)
            if sub.m >= sub.n - _components(sub) + 1:
                return False
    return True


def _components(g: Graph) -> int:
    seen, count = set(), 0
    for r in range(g.n):
        if r in seen:
            continue
        count += 1
        stack = [r]
        seen.add(r)
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)
