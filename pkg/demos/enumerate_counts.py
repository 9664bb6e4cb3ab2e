"""Count small graphs three ways and print a few graph6 lines."""
from domcycle import zoo
from domcycle.enumeration import generate, write_graph6
from domcycle.iso import is_free

print("n  all  connected  2-connected")
for n in range(1, 8):
    row = [len(list(generate(n))), len(list(generate(n, connected=True)))]
    row.append(len(list(generate(n, two_connected=True))) if n >= 3 else 0)
    print(f"{n}  {row[0]:4d}  {row[1]:9d}  {row[2]:11d}")

# the same stream, filtered down to one hereditary class
pair = zoo.forbidden_pairs()["H1"]
survivors = [g for g in generate(6, two_connected=True, h_free=pair)]
print(f"\n2-connected {{claw, Z4}}-free graphs on 6 vertices: {len(survivors)}")
for g in survivors[:10]:
    print(" ", write_graph6(g))
assert all(is_free(g, pair) for g in survivors)
