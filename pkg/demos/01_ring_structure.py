"""
Rings, ideals and unit orbits
=============================

A product of chain rings such as Z2 x Z4 has a small, regular ideal
lattice.  Every ideal is principal and is labelled by an exponent vector.
"""

from invweight import parse_ring

R = parse_ring("Z2*Z4")
print(R.name, "has", R.size, "elements and", R.unit_count, "units")

# Ideals come sorted by total exponent; (0,0) is the whole ring.
for e in R.ideal_reps():
    print(e, "size", R.ideal_size(e), "orbit size", R.orbit_size(e),
          "generator", R.render(R.rep(e)))

# The annihilator flips exponents and the socle sits just above zero.
e = (0, 1)
print("annihilator of", e, "is", R.orth(e))
print("socle exponent", R.socle_rep())

# Elements behave like ordinary numbers.
a, b = R.element((1, 3)), R.element((1, 2))
print(R.render(a.index), "*", R.render(b.index), "=", R.render((a * b).index))
