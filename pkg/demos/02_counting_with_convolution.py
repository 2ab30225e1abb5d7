"""Counting chains with convolution
==================================

Convolution powers of the named incidence functions are counting machines:

    zeta^k  counts multichains (weakly increasing walks),
    eta^k   counts strict chains with k edges,
    chi^k   counts saturated chains (every step one level up),

and the inverses of C = delta - eta and M = delta - chi total them over all
lengths.  Every number below is double-checked against brute-force DFS over
the explicit poset.
"""

from cobweb import Vertex, build_poset, make_sequence, standard_full

seq = make_sequence("fibonacci", 5)
p = build_poset(seq, 5)
x, y = Vertex(1, 0), Vertex(1, 5)

zeta = standard_full("zeta", p)
eta = standard_full("eta", p)
chi = standard_full("chi", p)

print(f"poset: fibonacci levels {seq.values}, pair {x} .. {y}")
print()
print(" k   eta^k  DFS chains   chi^k  DFS saturated   zeta^k  DFS multichains")
for k in range(1, 6):
    ek = eta.power(k).value(x, y)
    ck = chi.power(k).value(x, y)
    zk = zeta.power(k).value(x, y)
    print(f" {k}   {ek:5}  {p.count_chains(x, y, k):10}   "
          f"{ck:5}  {p.count_maximal_chains(x, y, k):13}   "
          f"{zk:6}  {p.count_multichains(x, y, k):15}")

print()

# Totals over all lengths come from one inversion each.
all_chains = standard_full("C", p).invert().value(x, y)
all_saturated = standard_full("M", p).invert().value(x, y)
print("all strict chains  :", all_chains, "   DFS:", p.count_all_chains(x, y))
print("all saturated ones :", all_saturated, "   DFS:", p.count_all_maximal_chains(x, y))

# zeta * zeta is the segment cardinality.
print("segment cardinality:", zeta.convolve(zeta).value(x, y),
      "   enumerated:", len(p.segment(x, y)))
