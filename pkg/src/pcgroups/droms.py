"""Cone-vertex decomposition of thin-chordal graphs.

A graph with no induced C4 and no induced path on four vertices breaks down
completely: a disconnected graph splits into components (a free product of
groups) and a connected one has a vertex joined to all others (a direct
factor Z).  Recursing gives a tree whose shape is the group's structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import CommutationGraph, connected_components, induced_subgraph

__all__ = [
    "Leaf",
    "Cone",
    "FreeProduct",
    "Failure",
    "cone_vertex",
    "decompose_thin_chordal",
    "rebuild_graph",
    "tree_group_signature",
    "node_count",
]


@dataclass(frozen=True)
class Leaf:
    vertex: str

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset((self.vertex,))

    def sexp(self) -> str:
        return f"(leaf {self.vertex})"


@dataclass(frozen=True)
class Cone:
    apex: str
    child: "Tree"

    @property
    def vertices(self) -> frozenset[str]:
        return self.child.vertices | {self.apex}

    def sexp(self) -> str:
        return f"(cone {self.apex} {self.child.sexp()})"


@dataclass(frozen=True)
class FreeProduct:
    children: tuple

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset().union(*(c.vertices for c in self.children))

    def sexp(self) -> str:
        return "(free " + " ".join(c.sexp() for c in self.children) + ")"


Tree = Union[Leaf, Cone, FreeProduct]


@dataclass(frozen=True)
class Failure:
    """A connected induced subgraph met during the recursion with no cone vertex."""

    component: tuple

    def __bool__(self):
        return False

    def __str__(self):
        return "no cone vertex in component {" + ", ".join(self.component) + "}"


def cone_vertex(g: CommutationGraph) -> Optional[str]:
    n = len(g)
    for i, v in enumerate(g.vertices):
        if len(g.adj[i]) == n - 1:
            return v
    return None


def decompose_thin_chordal(g: CommutationGraph) -> Union[Tree, Failure]:
    if not len(g):
        raise ValueError("cannot decompose the empty graph")

    def go(h: CommutationGraph):
        if len(h) == 1:
            return Leaf(h.vertices[0])
        comps = connected_components(h)
        if len(comps) > 1:
            children = []
            for comp in comps:
                t = go(induced_subgraph(h, comp))
                if isinstance(t, Failure):
                    return t
                children.append(t)
            return FreeProduct(tuple(children))
        z = cone_vertex(h)
        if z is None:
            return Failure(h.vertices)
        child = go(induced_subgraph(h, [v for v in h.vertices if v != z]))
        if isinstance(child, Failure):
            return child
        return Cone(z, child)

    return go(g)


def rebuild_graph(t: Tree) -> CommutationGraph:
    """Disjoint unions for free products, joins with the apex for cones."""
    if isinstance(t, Leaf):
        return CommutationGraph([t.vertex])
    if isinstance(t, Cone):
        h = rebuild_graph(t.child)
        return CommutationGraph(
            (t.apex,) + h.vertices, list(h.edges) + [(t.apex, v) for v in h.vertices]
        )
    parts = [rebuild_graph(c) for c in t.children]
    return CommutationGraph(
        [v for p in parts for v in p.vertices], [e for p in parts for e in p.edges]
    )


def node_count(t: Tree) -> int:
    if isinstance(t, Leaf):
        return 1
    if isinstance(t, Cone):
        return 1 + node_count(t.child)
    return 1 + sum(node_count(c) for c in t.children)


def _term(t: Tree):
    # terms: "Z" or (op, sorted tuple of terms), with nested equal ops flattened
    if isinstance(t, Leaf):
        return "Z"
    if isinstance(t, Cone):
        parts = ["Z", _term(t.child)]
        op = "x"
    else:
        parts = [_term(c) for c in t.children]
        op = "*"
    flat = []
    for p in parts:
        if isinstance(p, tuple) and p[0] == op:
            flat.extend(p[1])
        else:
            flat.append(p)
    flat.sort(key=lambda p: (isinstance(p, tuple), _render(p, True)))
    return (op, tuple(flat))


def _render(term, nested: bool) -> str:
    if term == "Z":
        return "Z"
    op, parts = term
    sym = " × " if op == "x" else " ∗ "
    s = sym.join(_render(p, True) for p in parts)
    return f"({s})" if nested else s


def tree_group_signature(t: Tree) -> str:
    """Canonical product term for the group, e.g. ``Z ∗ (Z × Z)``."""
    return _render(_term(t), False)
