"""Centralizers of canonical generators and parabolic subgroups.

For a canonical generator ``x`` the centralizer is the parabolic subgroup
generated by the star of ``x``.  Only generators and generator sets are
handled here, not arbitrary elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import CommutationGraph
from .words import as_word, alphabet, commutator, is_trivial

__all__ = [
    "ParabolicSubgroup",
    "star",
    "link",
    "generator_centralizer",
    "set_centralizer",
    "parabolic_center",
    "in_parabolic",
    "commutes",
]


@dataclass(frozen=True)
class ParabolicSubgroup:
    graph: CommutationGraph
    generators: frozenset[str]

    def __post_init__(self):
        unknown = set(self.generators) - set(self.graph.vertices)
        if unknown:
            raise KeyError(f"unknown vertices: {sorted(unknown)}")
        object.__setattr__(self, "generators", frozenset(self.generators))

    def ordered(self) -> list[str]:
        return [v for v in self.graph.vertices if v in self.generators]

    def __str__(self):
        return "<" + ", ".join(self.ordered()) + ">"


def _check_vertex(g: CommutationGraph, x: str) -> None:
    if x not in g.index:
        raise KeyError(f"unknown vertex {x!r}")


def link(g: CommutationGraph, x: str) -> set[str]:
    _check_vertex(g, x)
    return set(g.neighbors(x))


def star(g: CommutationGraph, x: str) -> set[str]:
    return link(g, x) | {x}


def generator_centralizer(g: CommutationGraph, x: str) -> ParabolicSubgroup:
    return ParabolicSubgroup(g, frozenset(star(g, x)))


def set_centralizer(g: CommutationGraph, xs: Iterable[str]) -> ParabolicSubgroup:
    xs = list(xs)
    if not xs:
        raise ValueError("set_centralizer needs a nonempty generator set")
    common = star(g, xs[0])
    for x in xs[1:]:
        common &= star(g, x)
    return ParabolicSubgroup(g, frozenset(common))


def parabolic_center(p: ParabolicSubgroup) -> set[str]:
    """Generators of ``p`` adjacent to every other generator of ``p``."""
    g, ys = p.graph, p.generators
    return {y for y in ys if all(z == y or g.has_edge(y, z) for z in ys)}


def in_parabolic(g: CommutationGraph, w, ys: Iterable[str]) -> bool:
    return alphabet(g, w) <= set(ys)


def commutes(g: CommutationGraph, u, v) -> bool:
    return is_trivial(g, commutator(as_word(g, u), as_word(g, v)))
