"""Computations in partially commutative groups (right-angled Artin groups).

A finite simple graph defines a group with one generator per vertex, where
two generators commute exactly when their vertices are adjacent.
"""

from .graph import (
    CommutationGraph,
    complement,
    cycle_graph,
    find_induced,
    graph_isomorphic,
    induced_subgraph,
    is_chordal,
    is_thin_chordal,
    is_weakly_chordal,
    parse_graph,
    path_graph,
)
from .words import Letter, Word, normal_form, parse_word, words_equal, is_trivial, alphabet
from .centralizers import commutes, generator_centralizer, set_centralizer, parabolic_center
from .extension import build_ball, conj_vertex, find_induced_in_ball
from .morphisms import GeneratorMap, apply, is_homomorphism, kernel_search, parse_map
from .droms import decompose_thin_chordal, tree_group_signature
from .reproduction import builtin, reproduce_egc, reproduce_wcc

__all__ = [
    "CommutationGraph", "complement", "cycle_graph", "find_induced", "graph_isomorphic",
    "induced_subgraph", "is_chordal", "is_thin_chordal", "is_weakly_chordal", "parse_graph",
    "path_graph", "Letter", "Word", "normal_form", "parse_word", "words_equal", "is_trivial",
    "alphabet", "commutes", "generator_centralizer", "set_centralizer", "parabolic_center",
    "build_ball", "conj_vertex", "find_induced_in_ball", "GeneratorMap", "apply",
    "is_homomorphism", "kernel_search", "parse_map", "decompose_thin_chordal",
    "tree_group_signature", "builtin", "reproduce_egc", "reproduce_wcc",
]

__version__ = "0.1.0"
