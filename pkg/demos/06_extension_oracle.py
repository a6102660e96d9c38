"""
Searching for non-extendable isometries
=======================================

Brute force over every code of length at most 2.  Weights that pass the
criterion show no witnesses; for the small integer
weights tried here that fail it, a non-extendable isometry turns up
already at this size.
"""

import itertools

from invweight import (
    Weight,
    criterion_check,
    homogeneous,
    nonzero_ideals,
    parse_ring,
    verify_extension_theorem,
    weight_from_table,
)

Z4 = parse_ring("Z4")
report = verify_extension_theorem(Z4, homogeneous(Z4), 2)
print(f"Z4 homogeneous, n=2: {report.codes_examined} codes, "
      f"{report.isometries_found} isometries, {len(report.witnesses)} witnesses")

# Every weight with values in {0, 1, 2} on the nonzero ideals of Z2 x Z2.
# Length 1 misses one failing weight; length 2 finds its witness.
R = parse_ring("Z2*Z2")
E = nonzero_ideals(R)
grid = [Weight(R, dict(zip(E, vals))) for vals in itertools.product(range(3), repeat=len(E))]
for n in (1, 2):
    agree = sum(criterion_check(w).passed == verify_extension_theorem(R, w, n).passed for w in grid)
    print(f"Z2xZ2, n={n}: criterion and oracle agree on {agree} of {len(grid)} weights")

# The classic failure: 2 -> 0 on the code {0, 2} of Z4.
bad = weight_from_table(Z4, {(0,): 1, (1,): 0})
wit = verify_extension_theorem(Z4, bad, 1).witnesses[0]
print("witness:", wit.as_dict()["table"])
