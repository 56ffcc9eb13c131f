"""Solving the word problem in the group of a five-vertex graph.

Two generators commute exactly when their vertices are adjacent.  Every
word has a unique normal form: the shortlex-least reduced word for the
same element.  Run with ``python3 demos/word_problem.py``.
"""

from pcgroups import builtin, normal_form, parse_word, words_equal
from pcgroups.words import alphabet, cancellation_pairing, commutator, outside_pairs

g = builtin("gamma1")
print("graph:")
print(g.to_text())

# d commutes with a, c and e, so it slides through them and cancels
w = parse_word(g, "d a c d^-1 e")
print(f"{w}  ->  {normal_form(g, w)}")

# a and b do not commute, so nothing cancels here
w = parse_word(g, "a b a^-1 b^-1")
print(f"{w}  ->  {normal_form(g, w)}")

u = parse_word(g, "a d e")
v = parse_word(g, "e a d")
print(f"{u} == {v}: {words_equal(g, u, v)}")

# generators that survive in the reduced word
print("alphabet of d a c d^-1 e:", sorted(alphabet(g, parse_word(g, "d a c d^-1 e"))))

# a trivial word and the letters that cancel each other in it
t = commutator(parse_word(g, "a"), parse_word(g, "d e"))
pairs = cancellation_pairing(g, t)
print(f"{t} is trivial; cancelling positions: {pairs}")
print("pairs of a-letters with nothing non-commuting in between:", outside_pairs(g, t, pairs, "a"))
