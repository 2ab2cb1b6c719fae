"""Plain-text formats for graphs, systems, orderings, lists and hypergraphs.

All formats are UTF-8, line based, and treat ``#`` as the start of a comment.
"""

from __future__ import annotations

from typing import Iterator

from .errors import ParseError, ValidationError
from .graph import Coloring, Graph, Ordering
from .hypergraph import FullHypergraph
from .sigma import NeighborhoodSystem
from .star import ListAssignment


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _ints(line: str, number: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", number) from None


def parse_graph(text: str) -> Graph:
    """``n m`` header, then exactly m lines ``u v`` with 0 <= u < v < n."""
    lines = _lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    head = _ints(header, number)
    if len(head) != 2 or min(head) < 0:
        raise ParseError("header must be 'n m' with non-negative integers", number)
    n, m = head
    edges = set()
    for number, line in lines:
        pair = _ints(line, number)
        if len(pair) != 2:
            raise ParseError("edge line must hold two vertex ids", number)
        u, v = pair
        if u == v:
            raise ParseError(f"self-loop at {u}", number)
        if not 0 <= u < v < n:
            raise ParseError(f"edge must satisfy 0 <= u < v < {n}", number)
        if (u, v) in edges:
            raise ParseError(f"duplicate edge {u} {v}", number)
        edges.add((u, v))
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


def _entries(text: str, what: str):
    seen: set[int] = set()
    for number, line in _lines(text):
        if ":" not in line:
            yield number, None, line
            continue
        head, _, rest = line.partition(":")
        try:
            v = int(head)
        except ValueError:
            raise ParseError(f"bad vertex id {head!r}", number) from None
        if v in seen:
            raise ParseError(f"repeated {what} for vertex {v}", number)
        seen.add(v)
        yield number, v, _ints(rest, number)


def parse_sigma(text: str, g: Graph, clamp: bool = False, default_depth: int = 1) -> NeighborhoodSystem:
    """Optional ``depth d`` header, then ``v: u1 u2 ...`` lines; absent vertices get Σ(v) = ∅."""
    depth = default_depth
    sigma: dict[int, list[int]] = {}
    first = True
    for number, v, payload in _entries(text, "Σ line"):
        if v is None:
            words = payload.split()
            if first and len(words) == 2 and words[0] == "depth":
                try:
                    depth = int(words[1])
                except ValueError:
                    raise ParseError("depth must be an integer", number) from None
                first = False
                continue
            raise ParseError(f"expected 'v: ...', got {payload!r}", number)
        first = False
        if not 0 <= v < g.n:
            raise ParseError(f"vertex {v} out of range", number)
        sigma[v] = payload
    return NeighborhoodSystem(g, sigma, depth=depth, clamp=clamp)


def format_sigma(s: NeighborhoodSystem) -> str:
    out = [f"depth {s.depth}"]
    out += [f"{v}: " + " ".join(map(str, sorted(m))) for v, m in enumerate(s.sigma) if m]
    return "\n".join(out) + "\n"


def parse_ordering(text: str) -> Ordering:
    lines = list(_lines(text))
    if len(lines) != 1:
        raise ParseError("ordering must be a single line")
    number, line = lines[0]
    try:
        return Ordering(_ints(line, number))
    except ValidationError as exc:
        raise ParseError(str(exc), number) from None


def format_ordering(o: Ordering) -> str:
    return " ".join(map(str, o.perm)) + "\n"


def parse_lists(text: str, n: int) -> ListAssignment:
    lists: dict[int, list[int]] = {}
    for number, v, payload in _entries(text, "list"):
        if v is None:
            raise ParseError(f"expected 'v: c1 c2 ...', got {payload!r}", number)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range", number)
        if not payload or min(payload) < 0:
            raise ParseError("lists must hold non-negative colors", number)
        lists[v] = payload
    missing = [v for v in range(n) if v not in lists]
    if missing:
        raise ParseError(f"no list for vertices {missing}")
    return ListAssignment([lists[v] for v in range(n)])


def parse_hypergraph(text: str) -> FullHypergraph:
    """``n m`` header then m lines, each a hyperedge; fullness is checked."""
    lines = _lines(text)
    try:
        number, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' header") from None
    head = _ints(header, number)
    if len(head) != 2 or min(head) < 0:
        raise ParseError("header must be 'n m'", number)
    n, m = head
    edges = []
    for number, line in lines:
        e = _ints(line, number)
        if any(not 0 <= x < n for x in e):
            raise ParseError("hyperedge vertex out of range", number)
        edges.append(e)
    if len(edges) != m:
        raise ParseError(f"header announces {m} hyperedges, found {len(edges)}")
    try:
        return FullHypergraph(range(n), edges)
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def format_hypergraph(h: FullHypergraph) -> str:
    labels = sorted(h.vertices)
    index = {v: i for i, v in enumerate(labels)}
    out = [f"{len(labels)} {len(h.hyperedges)}"]
    out += [" ".join(str(index[v]) for v in sorted(e)) for e in h.hyperedges]
    return "\n".join(out) + "\n"


def coloring_record(c: Coloring, valid: bool, bound_used: str, **extra) -> dict:
    record = {
        "palette_size": c.palette_size,
        "colors": list(c.color),
        "valid": valid,
        "bound_used": bound_used,
    }
    record.update(extra)
    return record
