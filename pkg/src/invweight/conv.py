"""The function algebra C[R, *] and its correlation actions.

Functions R -> Q(i) are dense tables indexed by element index (``FnR``).
Multiplicative convolution, the two correlations, the orbit basis
``epsilon`` of the invariant subalgebra S and the alternative basis
``eta`` all live here.

Elements of the quotient C_0[R] = C[R]/C delta_0 are represented by the
class member with value 0 at the zero element.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .mobius import mobius_zero_closed
from .scalar import Gaussian, as_scalar

__all__ = [
    "FnR",
    "canonical_s",
    "convolve",
    "corr_eta_closed",
    "corr_left",
    "corr_right",
    "delta",
    "delta_set",
    "epsilon",
    "eta",
    "eta_change_of_basis",
    "eta_terms",
    "from_s_coordinates",
    "is_s_element",
    "nonzero_ideals",
    "s_coordinates",
]


class FnR:
    """A function R -> Q(i) stored as a dense table."""

    __slots__ = ("ring", "table")

    def __init__(self, ring, values):
        table = tuple(as_scalar(v) for v in values)
        if len(table) != ring.size:
            raise ValueError(f"table has {len(table)} entries, ring {ring} has {ring.size} elements")
        self.ring = ring
        self.table = table

    @classmethod
    def zero(cls, ring):
        return cls(ring, [0] * ring.size)

    @classmethod
    def from_callable(cls, ring, fn):
        return cls(ring, [fn(i) for i in range(ring.size)])

    def __getitem__(self, a):
        return self.table[self.ring.index(a)]

    __call__ = __getitem__

    def __len__(self):
        return len(self.table)

    def __iter__(self):
        return iter(self.table)

    def __repr__(self):
        return f"FnR({self.ring}, [{', '.join(str(v) for v in self.table)}])"

    def __eq__(self, other):
        if not isinstance(other, FnR):
            return NotImplemented
        return self.ring == other.ring and self.table == other.table

    def __hash__(self):
        return hash((self.ring, self.table))

    def _same_ring(self, other):
        if not isinstance(other, FnR):
            return False
        if other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return True

    def __add__(self, other):
        if not self._same_ring(other):
            return NotImplemented
        return FnR(self.ring, [a + b for a, b in zip(self.table, other.table)])

    def __sub__(self, other):
        if not self._same_ring(other):
            return NotImplemented
        return FnR(self.ring, [a - b for a, b in zip(self.table, other.table)])

    def __neg__(self):
        return FnR(self.ring, [-a for a in self.table])

    def __mul__(self, scalar):
        if isinstance(scalar, FnR):
            return NotImplemented
        s = as_scalar(scalar)
        return FnR(self.ring, [s * a for a in self.table])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = as_scalar(scalar)
        return FnR(self.ring, [a / s for a in self.table])

    def is_zero(self):
        return not any(self.table)

    def support(self):
        return [i for i, v in enumerate(self.table) if v]


def as_fnr(f):
    if isinstance(f, FnR):
        return f
    to_fnr = getattr(f, "to_fnr", None)
    if to_fnr is None:
        raise TypeError(f"expected a function on the ring, got {f!r}")
    return to_fnr()


# integer kernels --------------------------------------------------------
#
# Tables are rescaled to integer numerators over one common denominator;
# the bilinear sums then run on Python ints and are divided once at the end.

def _int_form(table):
    den = 1
    for v in table:
        den = lcm(den, v.re.denominator, v.im.denominator)
    re = [v.re.numerator * (den // v.re.denominator) for v in table]
    im = [v.im.numerator * (den // v.im.denominator) for v in table]
    return re, im, den, any(im)


def _from_ints(ring, re, im, den):
    return FnR(ring, [Gaussian(Fraction(a, den), Fraction(b, den)) for a, b in zip(re, im)])


def _pair(f, g):
    f, g = as_fnr(f), as_fnr(g)
    if f.ring != g.ring:
        raise ValueError(f"ring mismatch: {f.ring} vs {g.ring}")
    return f, g


def convolve(f, g) -> FnR:
    """(f * g)(x) = sum over ab = x of f(a) g(b)."""
    f, g = _pair(f, g)
    R = f.ring
    mul = R.mul_table
    fr, fi, fd, f_cx = _int_form(f.table)
    gr, gi, gd, g_cx = _int_form(g.table)
    N = R.size
    out_r = [0] * N
    out_i = [0] * N
    g_supp = [b for b in range(N) if gr[b] or gi[b]]
    for a in range(N):
        ar, ai = fr[a], fi[a]
        if not ar and not ai:
            continue
        row = mul[a]
        if f_cx or g_cx:
            for b in g_supp:
                x = row[b]
                out_r[x] += ar * gr[b] - ai * gi[b]
                out_i[x] += ar * gi[b] + ai * gr[b]
        else:
            for b in g_supp:
                out_r[row[b]] += ar * gr[b]
    return _from_ints(R, out_r, out_i, fd * gd)


def corr_left(f, w) -> FnR:
    """(f (*)' w)(x) = sum_r f(r) w(xr)."""
    f, w = _pair(f, w)
    R = f.ring
    mul = R.mul_table
    fr, fi, fd, f_cx = _int_form(f.table)
    wr, wi, wd, w_cx = _int_form(w.table)
    supp = [r for r in range(R.size) if fr[r] or fi[r]]
    out_r, out_i = [], []
    for x in range(R.size):
        row = mul[x]
        sr = si = 0
        if f_cx or w_cx:
            for r in supp:
                y = row[r]
                sr += fr[r] * wr[y] - fi[r] * wi[y]
                si += fr[r] * wi[y] + fi[r] * wr[y]
        else:
            for r in supp:
                sr += fr[r] * wr[row[r]]
        out_r.append(sr)
        out_i.append(si)
    return _from_ints(R, out_r, out_i, fd * wd)


def corr_right(w, g) -> FnR:
    """(w (*) g)(x) = sum_r w(rx) g(r)."""
    w, g = _pair(w, g)
    R = w.ring
    mul = R.mul_table
    wr, wi, wd, w_cx = _int_form(w.table)
    gr, gi, gd, g_cx = _int_form(g.table)
    N = R.size
    out_r = [0] * N
    out_i = [0] * N
    for r in range(N):
        ar, ai = gr[r], gi[r]
        if not ar and not ai:
            continue
        row = mul[r]
        if w_cx or g_cx:
            for x in range(N):
                y = row[x]
                out_r[x] += wr[y] * ar - wi[y] * ai
                out_i[x] += wr[y] * ai + wi[y] * ar
        else:
            for x in range(N):
                out_r[x] += wr[row[x]] * ar
    return _from_ints(R, out_r, out_i, wd * gd)


# deltas and the invariant subalgebra -------------------------------------

def delta(ring, r) -> FnR:
    i = ring.index(r)
    return FnR(ring, [1 if k == i else 0 for k in range(ring.size)])


def delta_set(ring, A) -> FnR:
    members = {ring.index(a) for a in A}
    return FnR(ring, [1 if k in members else 0 for k in range(ring.size)])


def nonzero_ideals(ring):
    """E without the zero ideal, in ``ideal_reps`` order."""
    return [e for e in ring.ideal_reps() if e != ring.zero_ideal]


def epsilon(ring, e) -> FnR:
    """Normalised indicator of the unit orbit of rep(e)."""
    orbit = ring.orbit(e)
    weight = Gaussian(Fraction(1, len(orbit)))
    return FnR(ring, [weight if k in orbit else 0 for k in range(ring.size)])


def eta_terms(ring, x) -> dict:
    """Nonzero coefficients mu(0, Rxt) of eta_x in the epsilon basis, keyed by t.

    t runs over exponents with t_i <= d_i - x_i (x-perp below t in the
    representative order); xt has exponent min(x_i + t_i, d_i).
    """
    x = ring.check_exponent(x)
    if x == ring.zero_ideal:
        raise ValueError("eta is not defined at the zero ideal")
    perp = ring.orth(x)
    terms = {}
    for t in ring.ideal_reps():
        if all(a <= b for a, b in zip(t, perp)):
            m = mobius_zero_closed(ring, ring.ideal_product(x, t))
            if m:
                terms[t] = m
    return terms


def eta(ring, x) -> FnR:
    total = FnR.zero(ring)
    for t, m in eta_terms(ring, x).items():
        total = total + epsilon(ring, t) * m
    return total


def eta_change_of_basis(ring):
    """Rows eta_x over columns epsilon_t, both indexed by ``nonzero_ideals``.

    The epsilon_0 = delta_0 term is dropped: it vanishes in C_0[R].
    """
    labels = nonzero_ideals(ring)
    rows = []
    for x in labels:
        terms = eta_terms(ring, x)
        rows.append([Gaussian(terms.get(t, 0)) for t in labels])
    return rows


def is_s_element(f) -> bool:
    """Right unit-invariant with value 0 at 0."""
    f = as_fnr(f)
    R = f.ring
    if f.table[0]:
        return False
    return _right_invariant(f)


def _right_invariant(f):
    R = f.ring
    mul = R.mul_table
    return all(f.table[mul[x][u]] == f.table[x] for u in R.units for x in range(R.size))


def canonical_s(f) -> FnR:
    """The canonical C_0[R] representative of a right-invariant function."""
    f = as_fnr(f)
    if not _right_invariant(f):
        raise ValueError("function is not invariant under right unit multiplication")
    if not f.table[0]:
        return f
    return FnR(f.ring, (0,) + f.table[1:])


def s_coordinates(f) -> dict:
    """Coefficients c_e with f = sum_e c_e epsilon_e (e nonzero ideal)."""
    f = canonical_s(f)
    R = f.ring
    return {e: f.table[R.rep(e)] * R.orbit_size(e) for e in nonzero_ideals(R)}


def from_s_coordinates(ring, coeffs) -> FnR:
    total = FnR.zero(ring)
    for e, c in coeffs.items():
        if ring.check_exponent(e) == ring.zero_ideal:
            continue
        total = total + epsilon(ring, e) * c
    return total


def _weight_at(w, e):
    value = getattr(w, "value", None)
    if callable(value):
        return w.value(e)
    f = as_fnr(w)
    return f.table[f.ring.rep(e)]


def corr_eta_closed(w, x, y):
    """(w (*) eta_x)(rep y) from the triangular closed form.

    Zero unless Rx <= Ry; otherwise sum over t <= x-perp of
    mu(0, Rxt) w(ty).
    """
    R = w.ring
    x, y = R.check_exponent(x), R.check_exponent(y)
    if x == R.zero_ideal:
        raise ValueError("eta is not defined at the zero ideal")
    if not R.leq_ideal(x, y):
        return Gaussian(0)
    total = Gaussian(0)
    for t, m in eta_terms(R, x).items():
        total = total + _weight_at(w, R.ideal_product(t, y)) * m
    return total
