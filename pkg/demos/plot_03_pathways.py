"""
Reaction pathways and trapping
==============================

A state ``y`` follows ``x`` when some application with ``x`` in one of the
three state slots produces ``y``.  We search pathways, compute reachable sets
and show that two-sided ideals trap everything that enters them.
"""

from tgs import (IdealKind, StateSubset, catalysis_toy, enumerate_ideals, find_pathway,
                 reachable, verify_trapping)
from tgs.pathways import successor_matrix, to_dot

t = catalysis_toy()
print(t.states, t.mediators)

# Boolean successor relation as an n x n matrix.
print(successor_matrix(t).astype(int))

p = find_pathway(t, 1, 2, max_len=4)
print("pathway S1 -> S2:", p.states, "length", len(p))
for step in p.steps:
    print("  slot", step.slot.name, "companions", step.companions, "via", step.mediators)

print("reachable from S1:", reachable(t, StateSubset.of(t, [1])))

for J in enumerate_ideals(t, IdealKind.TWO_SIDED):
    print("trapping", J, bool(verify_trapping(t, J)))

# The same relation as a graphviz document.
print(to_dot(t, 1))
