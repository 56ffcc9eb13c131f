"""Finite simple graphs used as commutation graphs of pc groups.

Vertices carry names and a fixed declaration order; every tie-break in the
package (normal forms, first embedding found, cone vertex choice) follows
that order.
"""

from __future__ import annotations

import re
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

__all__ = [
    "CommutationGraph",
    "GraphParseError",
    "parse_graph",
    "complement",
    "cycle_graph",
    "path_graph",
    "complete_graph",
    "empty_graph",
    "star_graph",
    "disjoint_union",
    "induced_subgraph",
    "find_induced",
    "graph_isomorphic",
    "is_chordal",
    "is_weakly_chordal",
    "is_thin_chordal",
    "connected_components",
]

_IDENT = r"[A-Za-z][A-Za-z0-9_]*"
_LETTER = _IDENT + r"(?:\^-1)?"
# extension-ball vertices are exported as "x@w" with w = letters joined by '.'
_NAME = rf"{_IDENT}(?:@{_LETTER}(?:\.{_LETTER})*)?"
NAME_RE = re.compile(rf"^{_NAME}$")
_EDGE_RE = re.compile(rf"^({_NAME})-({_NAME})$")


class GraphParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CommutationGraph:
    """An immutable simple graph with ordered, named vertices.

    ``edges`` is a frozenset of 2-element frozensets of vertex names.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vertices = tuple(vertices)
        index = {}
        for i, v in enumerate(vertices):
            if not isinstance(v, str) or not NAME_RE.match(v):
                raise ValueError(f"invalid vertex name {v!r}")
            if v in index:
                raise ValueError(f"duplicate vertex {v!r}")
            index[v] = i
        es = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            for x in (u, v):
                if x not in index:
                    raise ValueError(f"edge endpoint {x!r} is not a vertex")
            es.add(frozenset((u, v)))
        self.vertices = vertices
        self.edges = frozenset(es)
        self.index = index

    def __repr__(self):
        return f"CommutationGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def __eq__(self, other):
        if not isinstance(other, CommutationGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, name):
        return name in self.index

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets by vertex index."""
        nbrs = [set() for _ in self.vertices]
        for e in self.edges:
            u, v = (self.index[x] for x in e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def noncommuting(self) -> tuple[tuple[int, ...], ...]:
        """For each index i, the indices j != i not adjacent to i."""
        n = len(self.vertices)
        return tuple(
            tuple(j for j in range(n) if j != i and j not in self.adj[i])
            for i in range(n)
        )

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def neighbors(self, v: str) -> list[str]:
        i = self.index[v]
        return [self.vertices[j] for j in sorted(self.adj[i])]

    def degree(self, v: str) -> int:
        return len(self.adj[self.index[v]])

    def sorted_edges(self) -> list[tuple[str, str]]:
        """Edges as (u, v) pairs with u before v, ordered by declaration."""
        out = []
        for e in self.edges:
            u, v = sorted(e, key=self.index.__getitem__)
            out.append((u, v))
        out.sort(key=lambda p: (self.index[p[0]], self.index[p[1]]))
        return out

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self.vertices)]
        lines.append("edges: " + " ".join(f"{u}-{v}" for u, v in self.sorted_edges()))
        return "\n".join(lines).rstrip() + "\n"


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph(text: str) -> CommutationGraph:
    """Parse the two-line ``vertices:`` / ``edges:`` graph format.

    >>> g = parse_graph("vertices: a b\\nedges: a-b")
    >>> g.vertices, g.sorted_edges()
    (('a', 'b'), [('a', 'b')])
    """
    vertices = None
    edges = []
    seen_edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("vertices", "edges"):
            raise GraphParseError(lineno, f"expected 'vertices:' or 'edges:', got {raw!r}")
        tokens = rest.split()
        if key == "vertices":
            if vertices is not None:
                raise GraphParseError(lineno, "repeated 'vertices:' line")
            vertices = []
            for tok in tokens:
                if not NAME_RE.match(tok):
                    raise GraphParseError(lineno, f"malformed vertex name {tok!r}")
                if tok in vertices:
                    raise GraphParseError(lineno, f"duplicate vertex {tok!r}")
                vertices.append(tok)
        else:
            if vertices is None:
                raise GraphParseError(lineno, "'edges:' before 'vertices:'")
            for tok in tokens:
                m = _EDGE_RE.match(tok)
                if not m:
                    raise GraphParseError(lineno, f"malformed edge {tok!r}")
                u, v = m.groups()
                if u == v:
                    raise GraphParseError(lineno, f"self-loop {tok!r}")
                for x in (u, v):
                    if x not in vertices:
                        raise GraphParseError(lineno, f"unknown endpoint {x!r} in {tok!r}")
                key_e = frozenset((u, v))
                if key_e in seen_edges:
                    raise GraphParseError(lineno, f"duplicate edge {tok!r}")
                seen_edges.add(key_e)
                edges.append((u, v))
    if vertices is None:
        raise GraphParseError(1, "missing 'vertices:' line")
    return CommutationGraph(vertices, edges)


def complement(g: CommutationGraph) -> CommutationGraph:
    edges = [(u, v) for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)]
    return CommutationGraph(g.vertices, edges)


def cycle_graph(n: int, prefix: str = "v") -> CommutationGraph:
    if n < 3:
        raise ValueError(f"cycle_graph needs n >= 3, got {n}")
    names = [f"{prefix}{i}" for i in range(n)]
    return CommutationGraph(names, [(names[i], names[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, prefix: str = "v") -> CommutationGraph:
    """The path with ``n`` edges (so ``n + 1`` vertices)."""
    if n < 0:
        raise ValueError(f"path_graph needs n >= 0, got {n}")
    names = [f"{prefix}{i}" for i in range(n + 1)]
    return CommutationGraph(names, list(zip(names, names[1:])))


def complete_graph(n: int, prefix: str = "v") -> CommutationGraph:
    names = [f"{prefix}{i}" for i in range(n)]
    return CommutationGraph(names, combinations(names, 2))


def empty_graph(n: int, prefix: str = "v") -> CommutationGraph:
    return CommutationGraph([f"{prefix}{i}" for i in range(n)])


def star_graph(leaves: int, prefix: str = "v") -> CommutationGraph:
    names = [f"{prefix}{i}" for i in range(leaves + 1)]
    return CommutationGraph(names, [(names[0], x) for x in names[1:]])


def disjoint_union(g: CommutationGraph, h: CommutationGraph) -> CommutationGraph:
    clash = set(g.vertices) & set(h.vertices)
    if clash:
        raise ValueError(f"vertex names shared by both graphs: {sorted(clash)}")
    return CommutationGraph(g.vertices + h.vertices, list(g.edges) + list(h.edges))


def induced_subgraph(g: CommutationGraph, names: Iterable[str]) -> CommutationGraph:
    names = set(names)
    unknown = names - set(g.vertices)
    if unknown:
        raise KeyError(f"unknown vertices: {sorted(unknown)}")
    keep = [v for v in g.vertices if v in names]
    return CommutationGraph(keep, [e for e in g.edges if e <= names])


def connected_components(g: CommutationGraph) -> list[list[str]]:
    """Components as vertex lists, each in declaration order, ordered by first vertex."""
    seen = set()
    comps = []
    for start in range(len(g.vertices)):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in g.adj[i]:
                if j not in comp:
                    comp.add(j)
                    stack.append(j)
        seen |= comp
        comps.append([g.vertices[i] for i in sorted(comp)])
    return comps


def connected_order(adj) -> list[int]:
    """Vertex order where each vertex after the first of its component has an earlier neighbour.

    Components start from their highest-degree vertex (lowest index on
    ties) and grow by breadth-first search in index order.
    """
    n = len(adj)
    order: list[int] = []
    placed = set()
    while len(order) < n:
        start = max((v for v in range(n) if v not in placed), key=lambda v: (len(adj[v]), -v))
        queue = [start]
        placed.add(start)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in sorted(adj[v]):
                if u not in placed:
                    placed.add(u)
                    queue.append(u)
    return order


def induced_search(p_adj, h_adj, order=None) -> Optional[list[int]]:
    """Backtracking search for an induced embedding, on index adjacency sets.

    ``p_adj``/``h_adj`` are sequences of neighbour sets.  Pattern vertices
    are placed in ``order`` (index order by default) and host candidates
    tried in increasing index, so the result is the first embedding in that
    order.  A pattern vertex with an already placed neighbour only tries
    host neighbours of that neighbour's image.  Returns the host index for
    each pattern index, or None.
    """
    np_, nh = len(p_adj), len(h_adj)
    if np_ > nh:
        return None
    order = list(range(np_)) if order is None else list(order)
    p_deg = [len(a) for a in p_adj]
    h_deg = [len(a) for a in h_adj]
    h_sorted = [sorted(a) for a in h_adj]
    fits = [
        [h_deg[h] >= p_deg[p] and nh - 1 - h_deg[h] >= np_ - 1 - p_deg[p] for h in range(nh)]
        for p in range(np_)
    ]
    earlier = [order[:k] for k in range(np_)]
    anchor = []
    for k, p in enumerate(order):
        nbrs = [q for q in earlier[k] if q in p_adj[p]]
        anchor.append(nbrs[0] if nbrs else None)
    everything = list(range(nh))
    assign = [-1] * np_
    used = set()

    def extend(k):
        if k == np_:
            return True
        p = order[k]
        pa = p_adj[p]
        ok_p = fits[p]
        pool = everything if anchor[k] is None else h_sorted[assign[anchor[k]]]
        for h in pool:
            if h in used or not ok_p[h]:
                continue
            ha = h_adj[h]
            if any((assign[q] in ha) != (q in pa) for q in earlier[k]):
                continue
            assign[p] = h
            used.add(h)
            if extend(k + 1):
                return True
            used.discard(h)
        assign[p] = -1
        return False

    return list(assign) if extend(0) else None


def find_induced(pattern: CommutationGraph, host: CommutationGraph) -> Optional[dict[str, str]]:
    """First induced embedding of ``pattern`` into ``host``, or None.

    The returned dict maps pattern vertex names to host vertex names and
    preserves both edges and non-edges.
    """
    found = induced_search(pattern.adj, host.adj)
    if found is None:
        return None
    return {pattern.vertices[p]: host.vertices[h] for p, h in enumerate(found)}


def graph_isomorphic(g1: CommutationGraph, g2: CommutationGraph) -> Optional[dict[str, str]]:
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return None
    if sorted(len(a) for a in g1.adj) != sorted(len(a) for a in g2.adj):
        return None
    return find_induced(g1, g2)


def _has_induced_cycle(g: CommutationGraph, lo: int, complemented: bool = False) -> bool:
    host = complement(g) if complemented else g
    return any(find_induced(cycle_graph(n), host) is not None for n in range(lo, len(g) + 1))


def is_chordal(g: CommutationGraph) -> bool:
    """No induced cycle of length 4 or more."""
    return not _has_induced_cycle(g, 4)


def is_weakly_chordal(g: CommutationGraph) -> bool:
    """No induced C_n and no induced complement of C_n, for n >= 5."""
    # an induced complement of C_n in g is an induced C_n in the complement of g
    return not (_has_induced_cycle(g, 5) or _has_induced_cycle(g, 5, complemented=True))


def is_thin_chordal(g: CommutationGraph) -> bool:
    """No induced C_4 and no induced path with 3 edges."""
    return find_induced(cycle_graph(4), g) is None and find_induced(path_graph(3), g) is None
