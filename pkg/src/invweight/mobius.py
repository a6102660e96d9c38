"""Moebius functions of finite posets and of principal-ideal lattices.

Moebius values are integers here (the ground field is Q and every value
that occurs is an integer), returned as plain ``int``.
"""

from __future__ import annotations

from typing import Callable, Hashable, Sequence

__all__ = [
    "FinitePoset",
    "MobiusTable",
    "PosetError",
    "ideal_lattice",
    "mobius_invert",
    "mobius_pair",
    "mobius_poset",
    "mobius_zero_closed",
]


class PosetError(ValueError):
    pass


class FinitePoset:
    """Elements ``elements[0..n-1]`` with a boolean relation matrix ``leq``."""

    def __init__(self, elements: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool]):
        self.elements = tuple(elements)
        n = len(self.elements)
        self._pos = {x: i for i, x in enumerate(self.elements)}
        if len(self._pos) != n:
            raise PosetError("poset elements must be distinct")
        self.leq = [[bool(leq(x, y)) for y in self.elements] for x in self.elements]
        self._validate()
        # linear extension: fewer elements below first
        self.order = sorted(range(n), key=lambda j: (sum(self.leq[i][j] for i in range(n)), j))

    def _validate(self):
        L = self.leq
        n = len(L)
        for i in range(n):
            if not L[i][i]:
                raise PosetError(f"relation is not reflexive at {self.elements[i]!r}")
            for j in range(n):
                if i != j and L[i][j] and L[j][i]:
                    raise PosetError(
                        f"relation is not antisymmetric: {self.elements[i]!r}, {self.elements[j]!r}")
        for i in range(n):
            for j in range(n):
                if L[i][j]:
                    for k in range(n):
                        if L[j][k] and not L[i][k]:
                            raise PosetError("relation is not transitive: "
                                             f"{self.elements[i]!r} <= {self.elements[j]!r} <= {self.elements[k]!r}")

    def __len__(self):
        return len(self.elements)

    def position(self, x) -> int:
        return self._pos[x]

    def le(self, x, y) -> bool:
        return self.leq[self._pos[x]][self._pos[y]]

    def least(self):
        n = len(self)
        for i in range(n):
            if all(self.leq[i][j] for j in range(n)):
                return i
        return None

    def greatest(self):
        n = len(self)
        for j in range(n):
            if all(self.leq[i][j] for i in range(n)):
                return j
        return None


class MobiusTable:
    """mu(x, y) for a poset; zero whenever x is not below y."""

    def __init__(self, poset: FinitePoset, matrix):
        self.poset = poset
        self.matrix = matrix

    def __call__(self, x, y) -> int:
        p = self.poset
        return self.matrix[p.position(x)][p.position(y)]

    def __eq__(self, other):
        return isinstance(other, MobiusTable) and self.matrix == other.matrix

    def satisfies_definition(self) -> bool:
        """Check all four defining recursions against the stored values."""
        L, mu = self.poset.leq, self.matrix
        n = len(L)
        for x in range(n):
            if mu[x][x] != 1:
                return False
            for y in range(n):
                if not L[x][y] and mu[x][y] != 0:
                    return False
                if x == y or not L[x][y]:
                    continue
                interval = [z for z in range(n) if L[x][z] and L[z][y]]
                if sum(mu[z][y] for z in interval) != 0:                        # (a)
                    return False
                if sum(mu[x][z] for z in interval) != 0:                        # (b)
                    return False
                if mu[x][y] != -sum(mu[z][y] for z in interval if z != x):      # (c)
                    return False
                if mu[x][y] != -sum(mu[x][z] for z in interval if z != y):      # (d)
                    return False
        return True


def mobius_poset(P: FinitePoset, form: str = "d") -> MobiusTable:
    """Moebius function by recursion.

    ``form="d"`` sums mu(x, z) over x <= z < y (left recursion); ``form="c"``
    sums mu(z, y) over x < z <= y (right recursion).  Forms (a) and (b) are
    the same identities rearranged, so they select (c) and (d) respectively.
    """
    form = {"a": "c", "b": "d"}.get(form, form)
    if form not in ("c", "d"):
        raise ValueError(f"unknown recursion form {form!r}")
    L = P.leq
    n = len(L)
    mu = [[0] * n for _ in range(n)]
    order = P.order
    if form == "d":
        for x in range(n):
            for y in order:
                if not L[x][y]:
                    continue
                if x == y:
                    mu[x][y] = 1
                else:
                    mu[x][y] = -sum(mu[x][z] for z in range(n) if L[x][z] and L[z][y] and z != y)
    else:
        for y in range(n):
            for x in reversed(order):
                if not L[x][y]:
                    continue
                if x == y:
                    mu[x][y] = 1
                else:
                    mu[x][y] = -sum(mu[z][y] for z in range(n) if L[x][z] and L[z][y] and z != x)
    return MobiusTable(P, mu)


def mobius_invert(P: FinitePoset, g, direction: str = "down", mu: MobiusTable | None = None):
    """Solve g(x) = sum_{y <= x} f(y) for f (``direction="down"``).

    With ``direction="up"`` solves g(x) = sum_{y >= x} f(y) instead, which
    needs a greatest element.  ``g`` is a sequence aligned with
    ``P.elements`` or a mapping keyed by them; the result has the same shape.
    """
    n = len(P)
    if direction == "down":
        if P.least() is None:
            raise PosetError("Moebius inversion from below needs a least element")
    elif direction == "up":
        if P.greatest() is None:
            raise PosetError("Moebius inversion from above needs a greatest element")
    else:
        raise ValueError(f"direction must be 'down' or 'up', not {direction!r}")
    as_map = isinstance(g, dict)
    vals = [g[x] for x in P.elements] if as_map else list(g)
    if len(vals) != n:
        raise ValueError(f"expected {n} values, got {len(vals)}")
    m = (mu or mobius_poset(P)).matrix
    L = P.leq
    if direction == "down":
        f = [sum((vals[y] * m[y][x] for y in range(n) if L[y][x]), 0) for x in range(n)]
    else:
        f = [sum((vals[y] * m[x][y] for y in range(n) if L[x][y]), 0) for x in range(n)]
    if as_map:
        return dict(zip(P.elements, f))
    return f


def ideal_lattice(R) -> FinitePoset:
    """Principal ideals of R (by exponent vector) ordered by inclusion."""
    return FinitePoset(R.ideal_reps(), R.leq_ideal)


def _chain_mu(x, y):
    # mu(T pi^x, T pi^y) on a single chain
    if x == y:
        return 1
    if x == y + 1:
        return -1
    return 0


def mobius_pair(R, e, f) -> int:
    """mu(Re, Rf) on the principal-ideal lattice, as a product of chain values."""
    e, f = R.check_exponent(e), R.check_exponent(f)
    out = 1
    for a, b in zip(e, f):
        out *= _chain_mu(a, b)
        if not out:
            return 0
    return out


def mobius_zero_closed(R, e) -> int:
    """mu(0, Re): (-1)^(sum d_i - e_i) when Re lies in the socle, else 0."""
    e = R.check_exponent(e)
    if all(k >= d - 1 for k, d in zip(e, R.depths)):
        return (-1) ** sum(d - k for k, d in zip(e, R.depths))
    return 0
