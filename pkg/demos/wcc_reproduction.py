"""Mapping the group of the pentagon into the group of a weakly chordal graph.

The complement of C5 is again a five-cycle.  Doubling three of its
generators gives a map into the group on the complement of the path P7,
which has no long induced cycles in it or its complement.
"""

from pcgroups import builtin, reproduce_wcc
from pcgroups.graph import complement, cycle_graph, graph_isomorphic, is_weakly_chordal, path_graph

c5bar, p7bar = builtin("c5bar"), builtin("p7bar")
print("complement of C5 is a 5-cycle:", graph_isomorphic(c5bar, cycle_graph(5)))
print("p7bar weakly chordal:", is_weakly_chordal(p7bar))
print("C5 weakly chordal:", is_weakly_chordal(cycle_graph(5)))
print("complement of p7bar is P7:", graph_isomorphic(complement(p7bar), path_graph(7)) is not None)
print()
print(reproduce_wcc(max_kernel_len=6).to_text())
