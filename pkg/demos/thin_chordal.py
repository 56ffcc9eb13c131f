"""Splitting a graph with no induced C4 or P4 into cones and free products.

Each connected piece has a vertex adjacent to everything else, giving a
direct factor Z; disconnected pieces give free products.  Graphs with an
induced C4 or P4 get stuck somewhere, and we report where.
"""

from pcgroups.droms import decompose_thin_chordal, rebuild_graph, tree_group_signature
from pcgroups.graph import cycle_graph, graph_isomorphic, parse_graph, path_graph

text = """
vertices: z a b c d
edges: z-a z-b z-c z-d a-b
"""
g = parse_graph(text)
t = decompose_thin_chordal(g)
print(t.sexp())
print("group:", tree_group_signature(t))
print("rebuilds the graph:", graph_isomorphic(rebuild_graph(t), g) is not None)

for name, h in (("C4", cycle_graph(4)), ("P4", path_graph(3))):
    print(f"{name}: {decompose_thin_chordal(h)}")
