"""Rank tables and the incidence coefficients
============================================

Every named incidence function takes the same value on all segments whose
endpoints share ranks, so it collapses to a small triangular table indexed
by rank pairs.  Convolution survives the collapse once each intermediate
rank is weighted by how many segment elements realize it:

    one at each endpoint, the full level size F_l strictly inside.

Weighting the endpoints by their level size too looks plausible but is
wrong, and a single enumeration refutes it.
"""

import random

from cobweb import (
    Vertex,
    build_poset,
    incidence_coefficient,
    make_sequence,
    project,
    standard_reduced,
)
from cobweb.verify import random_reduced_function

seq = make_sequence("constant:2", 5)
p = build_poset(seq, 5)

# Count, level by level, the elements of the segment [<1,0>, <1,4>].
x, y = Vertex(1, 0), Vertex(1, 4)
seg = p.segment(x, y)
print(f"segment [{x}, {y}] on constant:2 holds {len(seg)} elements")
print(" l   enumerated   coefficient   endpoint-weighted variant")
for l in range(0, 5):
    truth = sum(1 for z in seg if z.s == l)
    coeff = incidence_coefficient(seq, x.s, y.s, l)
    variant = seq.value_at(l)  # weights every rank in [k, n] by its level
    marker = "" if variant == truth else "   <- refuted"
    print(f" {l}   {truth:10}   {coeff:11}   {variant:25}{marker}")

print()

# With the correct weights, projecting a product equals multiplying the
# projections: the rank algebra is a faithful image of the full one.
rng = random.Random(42)
fr = random_reduced_function(seq, 5, rng)
gr = random_reduced_function(seq, 5, rng)
f, g = fr.lift(p), gr.lift(p)
print("project(f * g) == project(f) * project(g):",
      project(f.convolve(g)) == project(f).convolve(project(g)))

# All chain totals between two ranks, straight from the triangle.
chains = standard_reduced("C", seq, 5).invert()
saturated = standard_reduced("M", seq, 5).invert()
print()
print("chain totals by rank pair (constant:2):")
print(" k  n   strict  saturated")
for k, n in chains.triangle():
    if k < n:
        print(f" {k}  {n}   {chains.value(k, n):6}  {saturated.value(k, n):9}")
