"""
The extension criterion
=======================

A weight passes when every diagonal value of the triangular matrix is
nonzero.  A passing weight can be correlated into the Hamming weight.
"""

from invweight import criterion_check, hamming, homogeneous, parse_ring, solve_to_hamming, weight_from_table

Z4 = parse_ring("Z4")
weights = [hamming(Z4), homogeneous(Z4), weight_from_table(Z4, {(0,): 1, (1,): 0})]

for w in weights:
    report = criterion_check(w)
    values = ", ".join(f"{e.x}: {e.value}" for e in report.entries)
    print(f"{w.name or 'custom':12s} pass={report.passed}  {values}")
    h = solve_to_hamming(w)
    print("  w (*) h = hamming:", "no solution" if h is None else [str(h(a)) for a in range(4)])
