"""Finite balls in the extension graph.

The extension graph of ``g`` has a vertex for every conjugate ``w^-1 x w``
of a generator and an edge between two conjugates when they commute.  It
is infinite as soon as ``g`` is not complete, so we only ever build the
part coming from conjugators of bounded length.  A failed embedding search
in a ball is evidence at that radius, nothing more.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .graph import CommutationGraph, connected_order, induced_search
from .words import (
    Word,
    as_word,
    decode,
    encode,
    fold_codes,
    invert_codes,
    iter_normal_forms,
    trivial_codes,
)

__all__ = [
    "CapacityError",
    "ExtVertex",
    "ExtBall",
    "conj_vertex",
    "build_ball",
    "find_induced_in_ball",
    "embedding_to_homomorphism",
    "DEFAULT_VERTEX_CAP",
]

DEFAULT_VERTEX_CAP = 20_000


class CapacityError(RuntimeError):
    """The ball would exceed the configured vertex cap."""


@dataclass(frozen=True, eq=False)
class ExtVertex:
    base: str
    conjugator: Word
    canonical: Word

    def __eq__(self, other):
        if not isinstance(other, ExtVertex):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    @property
    def name(self) -> str:
        if not self.conjugator:
            return self.base
        return f"{self.base}@{self.conjugator.dotted()}"

    def __str__(self):
        return self.name


def _conjugate_codes(g, x_code: int, w_codes) -> tuple[int, ...]:
    return fold_codes(g, invert_codes(w_codes) + (x_code,) + tuple(w_codes))


def conj_vertex(g: CommutationGraph, x: str, w) -> ExtVertex:
    if x not in g.index:
        raise KeyError(f"unknown vertex {x!r}")
    w_codes = fold_codes(g, encode(g, w))
    canon = _conjugate_codes(g, 2 * g.index[x], w_codes)
    return ExtVertex(x, decode(g, w_codes), decode(g, canon))


@dataclass
class ExtBall:
    graph: CommutationGraph
    radius: int
    vertices: list[ExtVertex]
    edges: set[tuple[int, int]] = field(default_factory=set)

    def __post_init__(self):
        self.adj = [set() for _ in self.vertices]
        for i, j in self.edges:
            self.adj[i].add(j)
            self.adj[j].add(i)

    def __len__(self):
        return len(self.vertices)

    def to_graph(self) -> CommutationGraph:
        names = [v.name for v in self.vertices]
        return CommutationGraph(names, [(names[i], names[j]) for i, j in self.edges])

    def to_text(self) -> str:
        return self.to_graph().to_text()


def _default_workers() -> int:
    env = os.environ.get("PCG_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def build_ball(
    g: CommutationGraph,
    radius: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    workers: Optional[int] = None,
) -> ExtBall:
    """Conjugates of generators by normal-form conjugators of length <= radius.

    Vertices are ordered by base generator, then by the shortlex order of
    the first conjugator producing them; later conjugators giving the same
    conjugate are dropped.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    conjugators = []
    for w in iter_normal_forms(g, radius):
        conjugators.append(w)
        if len(conjugators) * len(g) > 50 * vertex_cap:
            raise CapacityError(
                f"conjugator enumeration at radius {radius} exceeds cap {vertex_cap}"
            )
    seen = set()
    verts = []
    codes = []
    for i, x in enumerate(g.vertices):
        for w in conjugators:
            canon = _conjugate_codes(g, 2 * i, w)
            if canon in seen:
                continue
            seen.add(canon)
            if len(verts) >= vertex_cap:
                raise CapacityError(f"ball of radius {radius} has more than {vertex_cap} vertices")
            verts.append(ExtVertex(x, decode(g, w), decode(g, canon)))
            codes.append(canon)

    inverses = [invert_codes(c) for c in codes]

    def row(i):
        u, ui = codes[i], inverses[i]
        return [
            (i, j)
            for j in range(i + 1, len(codes))
            if trivial_codes(g, ui + inverses[j] + u + codes[j])
        ]

    workers = workers or _default_workers()
    if workers > 1 and len(codes) > 64:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(row, range(len(codes))))
    else:
        rows = [row(i) for i in range(len(codes))]
    edges = {e for r in rows for e in r}
    return ExtBall(g, radius, verts, edges)


def find_induced_in_ball(pattern: CommutationGraph, ball: ExtBall) -> Optional[dict[str, ExtVertex]]:
    """First induced embedding of ``pattern`` into the ball, or None.

    None only says that no embedding exists inside this ball.  Pattern
    vertices are placed in :func:`connected_order`, so every vertex after
    the first of its component is drawn from a neighbourhood in the ball.
    """
    found = induced_search(pattern.adj, ball.adj, connected_order(pattern.adj))
    if found is None:
        return None
    return {pattern.vertices[p]: ball.vertices[h] for p, h in enumerate(found)}


def embedding_to_homomorphism(pattern: CommutationGraph, target: CommutationGraph, mapping):
    """The generator map sending each pattern vertex to its conjugate word."""
    from .centralizers import commutes
    from .morphisms import GeneratorMap

    if set(mapping) != set(pattern.vertices):
        raise ValueError("mapping must cover every pattern vertex")
    images = {}
    for x in pattern.vertices:
        v = mapping[x]
        images[x] = as_word(target, v.canonical if isinstance(v, ExtVertex) else v)
    vs = pattern.vertices
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            x, y = vs[a], vs[b]
            if images[x] == images[y]:
                raise ValueError(f"mapping is not injective at {x}, {y}")
            if pattern.has_edge(x, y) != commutes(target, images[x], images[y]):
                raise ValueError(f"mapping is not induced at the pair {x}, {y}")
    return GeneratorMap(pattern, target, images)
