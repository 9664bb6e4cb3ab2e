"""Watch the neighborhood-completion closure do its work.

The sparse chain family (A3) closes onto the dense chain family (A2):
three missing chords come back, and nothing else changes.
"""
from domcycle import zoo
from domcycle.closure import closure, eligible_vertices
from domcycle.cycles import circumference
from domcycle.iso import are_isomorphic

g = zoo.make_family("A3", 4)
print(f"start: n={g.n} m={g.m}, eligible vertices: {eligible_vertices(g)}")

result = closure(g)
for v, added in result.trace:
    print(f"  completed {v}: +{added}")

cl = result.graph
print(f"closed: m={cl.m} (added {cl.m - g.m} edges)")
print("isomorphic to A2(s=4)?", are_isomorphic(cl, zoo.make_family("A2", 4)))
print("circumference before/after:", circumference(g), circumference(cl))

# a cycle is already locally connected nowhere: the closure is the identity
c6 = zoo.path(6).add_edges([(0, 5)])
assert closure(c6).graph.edges() == c6.edges()
assert not closure(c6).trace
print("C6 is closed already — empty trace, as expected")
