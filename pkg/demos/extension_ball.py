"""Exploring a finite ball of the extension graph.

Conjugates ``w^-1 x w`` of generators form the vertices and commuting
conjugates are joined.  The whole graph is infinite, so we look at the
part reached by conjugators of length at most ``radius``.
"""

from pcgroups import build_ball, builtin, conj_vertex, find_induced_in_ball, parse_word
from pcgroups.graph import graph_isomorphic

g1, g2 = builtin("gamma1"), builtin("gamma2")

ball0 = build_ball(g2, 0)
print("radius 0 is the graph itself:", graph_isomorphic(ball0.to_graph(), g2) is not None)

for radius in (1, 2):
    ball = build_ball(g2, radius)
    n_edges = len(ball.edges)
    found = find_induced_in_ball(g1, ball)
    print(f"radius {radius}: {len(ball)} vertices, {n_edges} edges, gamma1 induced: {found is not None}")

# conjugating by something in the star of a vertex changes nothing
x = conj_vertex(g2, "d", parse_word(g2, "e a1"))
print(f"d conjugated by e a1 is {x.canonical}")
y = conj_vertex(g2, "c", parse_word(g2, "b"))
print(f"c conjugated by b is {y.canonical} (named {y.name})")

print()
print("first lines of the radius-1 ball:")
print("\n".join(build_ball(g2, 1).to_text().splitlines()[:6]))
