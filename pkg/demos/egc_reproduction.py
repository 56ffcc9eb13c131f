"""A map between two groups that is injective on the evidence we can gather.

``phi_egc`` sends ``a`` to ``a1 a2`` and fixes the other generators of the
five-vertex graph ``gamma1``, landing in the group of the chordal graph
``gamma2``.  We check that it respects every commutation relation, search
for kernel elements up to a length bound, and search a ball of the
extension graph of ``gamma2`` for an induced copy of ``gamma1``.
"""

from pcgroups import builtin, reproduce_egc
from pcgroups.morphisms import check_relators, parse_map

phi = builtin("phi_egc")
print(phi.to_text())
for r in check_relators(phi):
    print(" ", r)

print()
print(reproduce_egc(max_kernel_len=6, ball_radius=1).to_text())

# a generator map that does not respect the relations
g1, g2 = builtin("gamma1"), builtin("gamma2")
bad = parse_map(g1, g2, "a -> b\nb -> b\nc -> c\nd -> d\ne -> e\n")
print("sending a to b instead:")
for r in check_relators(bad):
    print(" ", r)
