"""The Mobius function, four ways
================================

The Mobius function can be produced by four independent routes:

  1. the deletion recursion mu(x,x) = 1, mu(x,y) = -sum over x <= z < y,
  2. inverting zeta in the incidence algebra,
  3. the rank product formula (-1)^gap * prod(F_i - 1) over interior levels,
  4. lifting the closed-form rank table to the poset.

They must agree on every comparable pair, for every sequence.
"""

from cobweb import (
    build_poset,
    make_sequence,
    mobius_closed_form,
    standard_full,
    standard_reduced,
)

for spec in ("fibonacci", "constant:2", "custom:1,3,1,4,2"):
    seq = make_sequence(spec, 4)
    p = build_poset(seq, 4)
    recursion = {pair: p.mobius(*pair) for pair in p.comparable_pairs()}
    inverted = standard_full("zeta", p).invert()
    formula = mobius_closed_form(p)
    lifted = standard_reduced("mobius", seq, 4).lift(p)
    agree = all(
        recursion[pair] == inverted.values[pair] == formula.values[pair] == lifted.values[pair]
        for pair in p.comparable_pairs()
    )
    print(f"{spec:20} four routes agree on {len(recursion):3} pairs: {agree}")

print()

# The rank triangle itself, for the constant:2 poset: the alternating
# product of (F_i - 1) = 1 makes every upper cell +-1.
table = standard_reduced("mobius", make_sequence("constant:2", 5), 5)
print("mobius rank triangle, constant:2, levels 0..5")
print(table.to_csv())
