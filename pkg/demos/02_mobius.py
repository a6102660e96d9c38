"""
Moebius function of the ideal lattice
=====================================

The generic poset recursion is compared with the closed form on the
ideal lattice, and then used to invert a cumulative sum.
"""

from invweight import ideal_lattice, mobius_invert, mobius_poset, mobius_zero_closed, parse_ring

R = parse_ring("Z2*Z2*Z4")
P = ideal_lattice(R)
mu = mobius_poset(P)

# Closed form from the zero ideal: nonzero only below the socle.
for e in R.ideal_reps():
    assert mu(R.zero_ideal, e) == mobius_zero_closed(R, e)
    print(e, mu(R.zero_ideal, e))

# Summing ideal sizes over all ideals below, then inverting, gives them back.
sizes = {e: R.ideal_size(e) for e in P.elements}
cumulative = {e: sum(sizes[f] for f in P.elements if P.le(f, e)) for e in P.elements}
recovered = mobius_invert(P, cumulative)
print("inversion recovers sizes:", recovered == sizes)
