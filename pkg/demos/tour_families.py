"""
A tour of the counterexample families
=====================================

Every family here is 2-connected and has no dominating cycle: whatever
cycle you pick, some edge dangles entirely off it.
"""
from domcycle import zoo
from domcycle.cycles import dominating_cycle, is_two_connected, longest_cycle
from domcycle.enumeration import write_graph6

for fam in ("A", "Ap", "App", "A1", "A2", "A3", "A4", "A5"):
    s = zoo.FAMILY_MIN_S[fam]
    g = zoo.make_family(fam, s)
    cyc = longest_cycle(g)
    print(
        f"{fam}(s={s}): n={g.n} m={g.m}  graph6={write_graph6(g)}  "
        f"2-connected={is_two_connected(g)}  "
        f"longest cycle length {len(cyc)}  dominating cycle: {dominating_cycle(g)}"
    )

# the theta graph is the smallest member of the first family: two hubs,
# three paths of two interior vertices each
theta = zoo.theta_family(2)
print()
print("theta family at s=2, adjacency:")
for v in theta.vertices():
    print(f"  {v}: {theta.neighbors(v)}")

# the fixture graphs behave differently: they DO have long cycles, just
# never through every vertex
for i in (1, 2, 3, 4):
    f = zoo.sporadic(i)
    print(f"F{i}: n={f.n}, circumference={len(longest_cycle(f))} (one short of n)")
