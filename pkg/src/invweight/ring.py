"""Finite chain rings and their finite direct products.

Two chain-ring families are supported, both commutative:

* ``Z<p^d>``     -- integers modulo p^d, radical generated by p;
* ``F<p>x<d>``   -- truncated polynomials F_p[x]/(x^d), radical generated by x.

Element indexing
----------------
Inside one component an element has a *local index* in ``range(p**d)``:
the residue itself for Z_{p^d}, and ``sum(c_k * p**k)`` for the
coefficient tuple ``(c_0, ..., c_{d-1})`` of a truncated polynomial.
A product element is indexed mixed-radix with the **last** component
varying fastest, so iterating ``range(ring.size)`` walks the elements in
``itertools.product`` order.  Index 0 is always the zero element.

Ideals are named by exponent vectors ``e = (e_1, ..., e_r)`` with
``0 <= e_i <= d_i``, standing for the representative p_1^e_1 ... p_r^e_r.
Larger exponents mean smaller ideals.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "INTEGER_RESIDUE",
    "TRUNCATED_POLYNOMIAL",
    "ChainRingSpec",
    "Element",
    "ProductRing",
    "RingParseError",
    "make_product",
    "parse_ring",
]

INTEGER_RESIDUE = "integer-residue"
TRUNCATED_POLYNOMIAL = "truncated-polynomial"


class RingParseError(ValueError):
    def __init__(self, message, token=None, position=None):
        super().__init__(message)
        self.token = token
        self.position = position


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_power(n: int):
    """Return ``(p, d)`` with ``n == p**d`` and p prime, or None."""
    if n < 2:
        return None
    p = next(k for k in range(2, n + 1) if n % k == 0)
    d = 0
    while n % p == 0:
        n //= p
        d += 1
    return (p, d) if n == 1 else None


@dataclass(frozen=True)
class ChainRingSpec:
    kind: str
    p: int
    d: int

    def __post_init__(self):
        if self.kind not in (INTEGER_RESIDUE, TRUNCATED_POLYNOMIAL):
            raise ValueError(f"unknown chain ring kind {self.kind!r}")
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p = {self.p!r} is not prime")
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"nilpotency index d = {self.d!r} must be a positive integer")

    @classmethod
    def integers(cls, p, d=1):
        return cls(INTEGER_RESIDUE, p, d)

    @classmethod
    def truncated(cls, p, d):
        return cls(TRUNCATED_POLYNOMIAL, p, d)

    @property
    def q(self):
        return self.p

    @property
    def size(self):
        return self.p**self.d

    @property
    def name(self):
        if self.kind == INTEGER_RESIDUE:
            return f"Z{self.size}"
        return f"F{self.p}x{self.d}"

    # local-index level arithmetic -------------------------------------

    def encode(self, local: int):
        """Local index -> natural encoding (residue int or coefficient tuple)."""
        if self.kind == INTEGER_RESIDUE:
            return local
        coeffs = []
        for _ in range(self.d):
            local, c = divmod(local, self.p)
            coeffs.append(c)
        return tuple(coeffs)

    def decode(self, value) -> int:
        if self.kind == INTEGER_RESIDUE:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{self.name} elements are integers, got {value!r}")
            return value % self.size
        value = tuple(value)
        if len(value) != self.d or any(not 0 <= c < self.p for c in value):
            raise ValueError(f"{value!r} is not a coefficient tuple of {self.name}")
        return sum(c * self.p**k for k, c in enumerate(value))

    def add_local(self, a, b):
        if self.kind == INTEGER_RESIDUE:
            return (a + b) % self.size
        p = self.p
        out, scale = 0, 1
        for _ in range(self.d):
            a, ca = divmod(a, p)
            b, cb = divmod(b, p)
            out += ((ca + cb) % p) * scale
            scale *= p
        return out

    def mul_local(self, a, b):
        if self.kind == INTEGER_RESIDUE:
            return (a * b) % self.size
        p, d = self.p, self.d
        ca, cb = self.encode(a), self.encode(b)
        prod = [0] * d
        for i, x in enumerate(ca):
            if x:
                for j in range(d - i):
                    prod[i + j] += x * cb[j]
        return sum((c % p) * p**k for k, c in enumerate(prod))

    def neg_local(self, a):
        if self.kind == INTEGER_RESIDUE:
            return (-a) % self.size
        return self.decode(tuple((-c) % self.p for c in self.encode(a)))

    def valuation_local(self, a) -> int:
        """Largest i with a in rad^i; the zero element gets d."""
        if a == 0:
            return self.d
        if self.kind == INTEGER_RESIDUE:
            i = 0
            while a % self.p == 0:
                a //= self.p
                i += 1
            return i
        return next(k for k, c in enumerate(self.encode(a)) if c)

    def radical_power(self, i: int) -> int:
        """Local index of pi^i (p^i or x^i); zero once i >= d."""
        if i >= self.d:
            return 0
        return self.p**i


@dataclass(frozen=True)
class Element:
    """A ring element bound to its ring; arithmetic is componentwise."""

    ring: "ProductRing"
    index: int

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError(f"mixed-ring operands: {self.ring} and {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.add(self.index, other.index))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.add(self.index, self.ring.neg(other.index)))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Element(self.ring, self.ring.mul(self.index, other.index))

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.index))

    @property
    def components(self):
        return self.ring.components_of(self.index)

    @property
    def is_unit(self):
        return self.ring.is_unit(self.index)

    def valuation(self):
        return self.ring.valuation(self.index)

    def __repr__(self):
        return f"Element({self.ring.render(self.index)} in {self.ring})"

    def __str__(self):
        return self.ring.render(self.index)


class ProductRing:
    """R = R_1 x ... x R_r for chain rings R_i; immutable once built."""

    def __init__(self, components: Sequence[ChainRingSpec]):
        components = tuple(components)
        if not components:
            raise ValueError("a product ring needs at least one component")
        for c in components:
            if not isinstance(c, ChainRingSpec):
                raise TypeError(f"expected ChainRingSpec, got {c!r}")
        self.components = components
        self.radices = tuple(c.size for c in components)
        self.size = 1
        for n in self.radices:
            self.size *= n
        self.depths = tuple(c.d for c in components)

        strides = []
        s = 1
        for n in reversed(self.radices):
            strides.append(s)
            s *= n
        self._strides = tuple(reversed(strides))

        self._locals = list(itertools.product(*(range(n) for n in self.radices)))
        local_add = [_table(c.add_local, c.size) for c in components]
        local_mul = [_table(c.mul_local, c.size) for c in components]
        local_val = [[c.valuation_local(a) for a in range(c.size)] for c in components]
        local_neg = [[c.neg_local(a) for a in range(c.size)] for c in components]

        idx = self._index_of_locals
        N = self.size
        self._add = [[idx(tuple(t[a][b] for t, a, b in zip(local_add, x, y))) for y in self._locals]
                     for x in self._locals]
        self._mul = [[idx(tuple(t[a][b] for t, a, b in zip(local_mul, x, y))) for y in self._locals]
                     for x in self._locals]
        self._neg = [idx(tuple(t[a] for t, a in zip(local_neg, x))) for x in self._locals]
        self._val = [tuple(t[a] for t, a in zip(local_val, x)) for x in self._locals]
        self.units = tuple(i for i in range(N) if not any(self._val[i]))
        self.unit_count = len(self.units)

        self.ideals = tuple(sorted(itertools.product(*(range(d + 1) for d in self.depths)),
                                   key=lambda e: (sum(e), e)))
        self.zero_ideal = tuple(self.depths)
        self.unit_ideal = tuple(0 for _ in self.depths)
        self._ideal_pos = {e: k for k, e in enumerate(self.ideals)}
        self._rep = {e: idx(tuple(c.radical_power(k) for c, k in zip(components, e)))
                     for e in self.ideals}
        orbits = {e: [] for e in self.ideals}
        for i in range(N):
            orbits[self._val[i]].append(i)
        self._orbits = {e: tuple(v) for e, v in orbits.items()}

    def _index_of_locals(self, locs):
        return sum(a * s for a, s in zip(locs, self._strides))

    # identity ------------------------------------------------------------

    @cached_property
    def name(self):
        return "*".join(c.name for c in self.components)

    def __repr__(self):
        return f"ProductRing({self.name})"

    def __str__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, ProductRing) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __len__(self):
        return self.size

    # elements ------------------------------------------------------------

    def element(self, value) -> Element:
        """Build an element from an index, an Element, or per-component encodings."""
        return Element(self, self.index(value))

    def index(self, value) -> int:
        if isinstance(value, Element):
            if value.ring != self:
                raise ValueError(f"{value!r} does not belong to {self}")
            return value.index
        if isinstance(value, int) and not isinstance(value, bool):
            if not 0 <= value < self.size:
                raise IndexError(f"element index {value} out of range for {self}")
            return value
        value = tuple(value)
        if (len(self.components) == 1 and self.components[0].kind == TRUNCATED_POLYNOMIAL
                and all(isinstance(c, int) for c in value)):
            # bare coefficient tuple of a single truncated-polynomial component
            value = (value,)
        if len(value) != len(self.components):
            raise ValueError(f"{self} has {len(self.components)} components, got {value!r}")
        return self._index_of_locals(tuple(c.decode(v) for c, v in zip(self.components, value)))

    def elements(self):
        return [Element(self, i) for i in range(self.size)]

    def components_of(self, i: int):
        return tuple(c.encode(a) for c, a in zip(self.components, self._locals[i]))

    def render(self, i: int) -> str:
        parts = []
        for c, a in zip(self.components, self._locals[i]):
            if c.kind == INTEGER_RESIDUE:
                parts.append(str(a))
            else:
                parts.append(_render_poly(c.encode(a)))
        if len(parts) == 1:
            return parts[0]
        return "(" + ",".join(parts) + ")"

    # arithmetic on indices ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    @property
    def mul_table(self):
        return self._mul

    @property
    def add_table(self):
        return self._add

    def is_unit(self, a: int) -> bool:
        return not any(self._val[a])

    @cached_property
    def one(self) -> int:
        return self._rep[self.unit_ideal]

    def inverse(self, u: int) -> int:
        row = self._mul[u]
        for v in self.units:
            if row[v] == self.one:
                return v
        raise ValueError(f"{self.render(u)} is not a unit of {self}")

    # ideal structure -------------------------------------------------------

    def valuation(self, a) -> tuple:
        return self._val[self.index(a)]

    def ideal_reps(self) -> tuple:
        return self.ideals

    def ideal_position(self, e) -> int:
        return self._ideal_pos[self.check_exponent(e)]

    def check_exponent(self, e) -> tuple:
        e = tuple(e)
        if len(e) != len(self.depths) or any(
                not isinstance(k, int) or not 0 <= k <= d for k, d in zip(e, self.depths)):
            raise ValueError(f"{e!r} is not an ideal exponent vector of {self}")
        return e

    def rep(self, e) -> int:
        """Index of the representative p_1^e_1 ... p_r^e_r."""
        return self._rep[self.check_exponent(e)]

    def rep_element(self, e) -> Element:
        return Element(self, self.rep(e))

    def leq_ideal(self, e, f) -> bool:
        """Re <= Rf, i.e. e_i >= f_i componentwise."""
        return all(a >= b for a, b in zip(e, f))

    def orth(self, e) -> tuple:
        e = self.check_exponent(e)
        return tuple(d - k for d, k in zip(self.depths, e))

    def socle_rep(self) -> tuple:
        return tuple(d - 1 for d in self.depths)

    def ideal_product(self, e, f) -> tuple:
        """Exponent of R(rep(e) rep(f)): componentwise min(e_i + f_i, d_i)."""
        return tuple(min(a + b, d) for a, b, d in zip(e, f, self.depths))

    def ideal_elements(self, e) -> frozenset:
        """The principal ideal R rep(e) as a set of indices."""
        e = self.check_exponent(e)
        return frozenset(i for i in range(self.size) if self.leq_ideal(self._val[i], e))

    def ideal_size(self, e) -> int:
        e = self.check_exponent(e)
        n = 1
        for c, k in zip(self.components, e):
            n *= c.q ** (c.d - k)
        return n

    def orbit(self, e) -> frozenset:
        """The unit orbit R^x rep(e), as indices."""
        return frozenset(self._orbits[self.check_exponent(e)])

    def orbit_size(self, e) -> int:
        e = self.check_exponent(e)
        n = 1
        for c, k in zip(self.components, e):
            if k < c.d:
                n *= c.q ** (c.d - k) - c.q ** (c.d - k - 1)
        return n

    def orbit_members(self, e) -> tuple:
        return self._orbits[self.check_exponent(e)]


def _table(op, n):
    return [[op(a, b) for b in range(n)] for a in range(n)]


def _render_poly(coeffs):
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if k == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def make_product(specs: Iterable[ChainRingSpec]) -> ProductRing:
    return ProductRing(list(specs))


_TOKEN = re.compile(r"Z(\d+)|F(\d+)x(\d+)")


def parse_ring(text: str) -> ProductRing:
    """Parse ``Z4*F2x2``-style ring descriptions (whitespace ignored)."""
    if not isinstance(text, str):
        raise TypeError("ring description must be a string")
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise RingParseError("empty ring description")
    specs = []
    pos = 0
    for token in compact.split("*"):
        if not token:
            raise RingParseError(f"empty component at position {pos} in {text!r}", token, pos)
        m = _TOKEN.fullmatch(token)
        if m is None:
            raise RingParseError(f"unrecognised ring component {token!r} at position {pos}", token, pos)
        if m.group(1) is not None:
            n = int(m.group(1))
            pd = prime_power(n)
            if pd is None:
                raise RingParseError(
                    f"component {token!r}: {n} is not a prime power "
                    "(write coprime factors as a product, e.g. Z2*Z3)", token, pos)
            specs.append(ChainRingSpec.integers(*pd))
        else:
            p, d = int(m.group(2)), int(m.group(3))
            if not is_prime(p):
                raise RingParseError(f"component {token!r}: {p} is not prime", token, pos)
            if d < 1:
                raise RingParseError(f"component {token!r}: nilpotency index must be >= 1", token, pos)
            specs.append(ChainRingSpec.truncated(p, d))
        pos += len(token) + 1
    return ProductRing(specs)
