"""Building cobweb posets
========================

A cobweb poset is fixed entirely by a sequence of level sizes: level s holds
F_s mutually incomparable vertices, and every vertex of a lower level sits
below every vertex of every higher level.  This script builds a few of them
and pokes at their structure.
"""

from cobweb import Vertex, build_poset, make_sequence

# Any of the built-in generators works; custom lists too.
for spec in ("fibonacci", "naturals", "constant:2", "custom:1,3,1,4,2"):
    seq = make_sequence(spec, 4)
    p = build_poset(seq, 4)
    print(f"{spec:20} levels {seq.values}  vertices {len(p.vertices):3}  "
          f"hasse edges {len(p.hasse_edges):3}")

print()

# Consecutive levels are completely joined: the edge count between levels
# p and p+1 is exactly F_p * F_{p+1}.
seq = make_sequence("fibonacci", 4)
p = build_poset(seq, 4)
for lvl in range(4):
    count = sum(1 for u, w in p.hasse_edges if u.s == lvl)
    print(f"levels {lvl} -> {lvl + 1}: {count} edges "
          f"(= {seq.value_at(lvl)} * {seq.value_at(lvl + 1)})")

print()

# The order relation only looks at levels: any lower vertex is below any
# higher one, and distinct vertices of one level are incomparable.
x, y = Vertex(1, 1), Vertex(3, 3)
print(f"{x} <= {y}:", p.leq(x, y))
print(f"{Vertex(1, 2)} <= {Vertex(2, 2)}:", p.leq(Vertex(1, 2), Vertex(2, 2)))

# Segments are two endpoints plus everything strictly between.
seg = p.segment(Vertex(1, 0), Vertex(1, 3))
print("segment [<1,0>, <1,3>]:", " ".join(str(v) for v in seg))

print()

# The Hasse diagram exports to DOT; pipe it into graphviz to draw it.
print(build_poset(make_sequence("custom:1,2,3", 2), 2).to_dot())
