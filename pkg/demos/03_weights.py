"""
Hamming and homogeneous weights
===============================

Both weights are constant on unit orbits.  The homogeneous weight has
the same average, 1, on every nonzero principal ideal.
"""

from invweight import hamming, homogeneity_constant, homogeneous, parse_ring, sym_right

R = parse_ring("Z8")
for w in (hamming(R), homogeneous(R)):
    table = [str(w(a)) for a in range(R.size)]
    print(f"{w.name:12s}", " ".join(table))
    print("  homogeneity constant:", homogeneity_constant(w))
    print("  full right symmetry:", sym_right(w).is_full())

# The Lee-like picture on Z4: w_hom = (0, 1, 2, 1).
Z4 = parse_ring("Z4")
print("Z4 homogeneous:", [str(homogeneous(Z4)(a)) for a in range(4)])
