"""
Convolution, correlation and the eta basis
==========================================

Complex functions on a finite ring form an algebra under convolution.
Correlating an invariant weight with the eta functions gives a
triangular matrix indexed by ideals.
"""

from invweight import convolve, corr_right, delta, eta, homogeneous, nonzero_ideals, parse_ring

R = parse_ring("Z2*Z4")

# delta_r convolved with delta_s is delta_{rs}.
r, s = R.index((1, 1)), R.index((1, 2))
print("delta * delta is a delta:", convolve(delta(R, r), delta(R, s)) == delta(R, R.mul(r, s)))

# (w (*) eta_x)(y) vanishes unless Rx <= Ry.
w = homogeneous(R)
E = nonzero_ideals(R)
print("rows x, columns y")
for x in E:
    v = corr_right(w, eta(R, x))
    print(x, [str(v[R.rep(y)]) for y in E])
