"""Brute-force verification of the extension property on small codes.

Vectors of R^n are tuples of element indices.  Everything here is plain
enumeration and is only meant for desk-scale rings and lengths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .conv import FnR, as_fnr, corr_right
from .scalar import Gaussian
from .weights import SymmetryGroup, Weight, sym_right

__all__ = [
    "BudgetExceeded",
    "Code",
    "ExtensionReport",
    "LinearMap",
    "Monomial",
    "Witness",
    "all_monomials",
    "check_lemiso",
    "enumerate_codes",
    "enumerate_isometries",
    "extends_to_monomial",
    "verify_extension_theorem",
]

DEFAULT_CODE_BUDGET = 4096
# |R| <= 9 with n <= 2, or |R| <= 16 with n = 1
DEFAULT_SWEEP_BUDGET = 81


class BudgetExceeded(RuntimeError):
    pass


def _vadd(R, x, y):
    add = R.add_table
    return tuple(add[a][b] for a, b in zip(x, y))


def _vscale(R, r, x):
    row = R.mul_table[r]
    return tuple(row[a] for a in x)


def all_vectors(R, n):
    return list(itertools.product(range(R.size), repeat=n))


class Code:
    """An R-submodule of R^n, stored as its full element set."""

    def __init__(self, ring, n, elements, generators):
        self.ring = ring
        self.n = n
        self.elements = frozenset(elements)
        self.generators = tuple(tuple(g) for g in generators)

    @classmethod
    def span(cls, ring, generators, n=None):
        generators = [tuple(ring.index(a) for a in g) for g in generators]
        if n is None:
            if not generators:
                raise ValueError("length n is needed for the zero code")
            n = len(generators[0])
        elements = {tuple([0] * n)}
        for g in generators:
            if len(g) != n:
                raise ValueError(f"generator {g} has length {len(g)}, expected {n}")
            multiples = {_vscale(ring, r, g) for r in range(ring.size)}
            elements = {_vadd(ring, c, m) for c in elements for m in multiples}
        return cls(ring, n, elements, generators)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return tuple(x) in self.elements

    def __eq__(self, other):
        return isinstance(other, Code) and self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        gens = ", ".join(self.render(g) for g in self.generators) or "0"
        return f"Code({self.ring}^{self.n}, |C|={len(self)}, gens=[{gens}])"

    def render(self, x):
        return "(" + ",".join(self.ring.render(a) for a in x) + ")"

    def sorted_elements(self):
        return sorted(self.elements)

    def is_submodule(self) -> bool:
        R = self.ring
        if tuple([0] * self.n) not in self.elements:
            return False
        for x in self.elements:
            for y in self.elements:
                if _vadd(R, x, y) not in self.elements:
                    return False
            for r in range(R.size):
                if _vscale(R, r, x) not in self.elements:
                    return False
        return Code.span(R, self.generators, self.n).elements == self.elements


def enumerate_codes(R, n, max_gens=None, budget=DEFAULT_CODE_BUDGET):
    """All submodules of R^n generated by at most ``max_gens`` vectors.

    Breadth first over the number of generators, so each code keeps a
    generating set of minimal size.  Codes come out sorted by size, then
    by their sorted element lists.
    """
    if R.size**n > budget:
        raise BudgetExceeded(f"|R|^n = {R.size**n} exceeds the budget {budget}")
    if max_gens is None:
        max_gens = n
    if max_gens > n:
        raise ValueError("max_gens must not exceed n")
    zero = Code(R, n, {tuple([0] * n)}, ())
    seen = {zero.elements: zero}
    frontier = [zero]
    vectors = all_vectors(R, n)
    for _ in range(max_gens):
        nxt = []
        for C in frontier:
            for v in vectors:
                if v in C.elements:
                    continue
                multiples = {_vscale(R, r, v) for r in range(R.size)}
                elements = frozenset(_vadd(R, c, m) for c in C.elements for m in multiples)
                if elements not in seen:
                    code = Code(R, n, elements, C.generators + (v,))
                    seen[elements] = code
                    nxt.append(code)
        frontier = nxt
    return sorted(seen.values(), key=lambda c: (len(c), c.sorted_elements()))


@dataclass(frozen=True)
class LinearMap:
    """A module homomorphism C -> R^n, given by its full value table."""

    code: Code
    n: int
    table: dict = field(hash=False, compare=False)

    def __call__(self, x):
        return self.table[tuple(x)]

    def generator_images(self):
        return tuple(self.table[g] for g in self.code.generators)

    def is_linear(self) -> bool:
        R = self.code.ring
        for x in self.code.elements:
            for y in self.code.elements:
                if self.table[_vadd(R, x, y)] != _vadd(R, self.table[x], self.table[y]):
                    return False
            for r in range(R.size):
                if self.table[_vscale(R, r, x)] != _vscale(R, r, self.table[x]):
                    return False
        return True

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def preserves(self, w) -> bool:
        wt = _weight_table(w)
        memo = {}

        def weight(v):
            if v not in memo:
                memo[v] = _tuple_weight(wt, v)
            return memo[v]

        return all(weight(self.table[x]) == weight(x) for x in self.code.elements)

    def describe(self):
        C = self.code
        return {
            "generators": [C.render(g) for g in C.generators],
            "images": [C.render(self.table[g]) for g in C.generators],
            "table": {C.render(x): C.render(self.table[x]) for x in C.sorted_elements()},
        }


@dataclass(frozen=True)
class Monomial:
    """x -> (x_{pi(1)} u_1, ..., x_{pi(n)} u_n), with 0-based ``perm``."""

    ring: object
    perm: tuple
    units: tuple

    def __call__(self, x):
        mul = self.ring.mul_table
        return tuple(mul[x[p]][u] for p, u in zip(self.perm, self.units))

    def restrict(self, code: Code) -> LinearMap:
        return LinearMap(code, code.n, {x: self(x) for x in code.elements})

    def is_bijective(self) -> bool:
        vecs = all_vectors(self.ring, len(self.perm))
        return len({self(x) for x in vecs}) == len(vecs)


def all_monomials(R, n, G=None):
    units = sorted(_group_units(R, G))
    for perm in itertools.permutations(range(n)):
        for us in itertools.product(units, repeat=n):
            yield Monomial(R, perm, us)


def _group_units(R, G):
    if G is None:
        return set(R.units)
    if isinstance(G, SymmetryGroup):
        return set(G.units)
    return {R.index(u) for u in G}


def _weight_table(w):
    return as_fnr(w).table


def _tuple_weight(wt, x):
    total = Gaussian(0)
    for a in x:
        total = total + wt[a]
    return total


def enumerate_isometries(C: Code, w, max_maps=None):
    """All linear maps C -> R^n preserving the tuple weight of every codeword.

    Generator images are assigned one at a time (pruned by weight and by
    the annihilator of the generator), then the map is propagated over
    every coefficient combination and rejected on any inconsistency.
    Raises ``BudgetExceeded`` once more than ``max_maps`` isometries exist.
    """
    R = C.ring
    n = C.n
    wt = _weight_table(w)
    mul = R.mul_table
    gens = C.generators
    vectors = all_vectors(R, n)
    weight_of = {v: _tuple_weight(wt, v) for v in vectors}

    candidates = []
    for g in gens:
        ann = [r for r in range(R.size) if not any(mul[r][a] for a in g)]
        target = weight_of[g]
        cands = [y for y in vectors if weight_of[y] == target
                 and all(not any(mul[r][b] for b in y) for r in ann)]
        candidates.append(cands)

    combos = []
    for coeffs in itertools.product(range(R.size), repeat=len(gens)):
        x = tuple([0] * n)
        for r, g in zip(coeffs, gens):
            x = _vadd(R, x, _vscale(R, r, g))
        combos.append((coeffs, x))

    found = []
    for images in itertools.product(*candidates):
        table = {}
        ok = True
        for coeffs, x in combos:
            y = tuple([0] * n)
            for r, img in zip(coeffs, images):
                y = _vadd(R, y, _vscale(R, r, img))
            prev = table.get(x)
            if prev is None:
                if weight_of[y] != weight_of[x]:
                    ok = False
                    break
                table[x] = y
            elif prev != y:
                ok = False
                break
        if ok:
            found.append(LinearMap(C, n, table))
            if max_maps is not None and len(found) > max_maps:
                raise BudgetExceeded(f"more than {max_maps} isometries on {C!r}")
    return found


def extends_to_monomial(phi: LinearMap, G=None):
    """A G-monomial transformation agreeing with phi on its code, or None."""
    C = phi.code
    R = C.ring
    if not phi.is_injective():
        return None
    gens = C.generators
    elements = C.sorted_elements()
    for m in all_monomials(R, C.n, G):
        if all(m(g) == phi.table[g] for g in gens) and all(m(x) == phi.table[x] for x in elements):
            return m
    return None


@dataclass
class Witness:
    code: Code
    phi: LinearMap

    def as_dict(self):
        d = self.phi.describe()
        d["code_size"] = len(self.code)
        d["injective"] = self.phi.is_injective()
        return d


@dataclass
class ExtensionReport:
    ring: str
    weight: str
    n: int
    codes_examined: int = 0
    isometries_found: int = 0
    extendable: int = 0
    witnesses: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses


def verify_extension_theorem(R, w, n, max_codes=None, max_maps=None,
                             budget=DEFAULT_SWEEP_BUDGET, G=None) -> ExtensionReport:
    """Check every linear w-isometry of every code in R^n for a monomial extension.

    ``G`` defaults to the right symmetry group of ``w`` (all units for an
    invariant weight).  Codes whose isometry count exceeds ``max_maps`` are
    listed in ``skipped`` instead of aborting the sweep.
    """
    if R.size**n > budget:
        raise BudgetExceeded(f"|R|^n = {R.size**n} exceeds the sweep budget {budget}")
    if G is None:
        G = sym_right(w)
    name = getattr(w, "name", None) or ("custom" if isinstance(w, Weight) else "function")
    report = ExtensionReport(ring=R.name, weight=name, n=n)
    codes = enumerate_codes(R, n, budget=budget)
    if max_codes is not None and len(codes) > max_codes:
        report.skipped.append(f"{len(codes) - max_codes} codes beyond max_codes={max_codes}")
        codes = codes[:max_codes]
    for C in codes:
        try:
            maps = enumerate_isometries(C, w, max_maps=max_maps)
        except BudgetExceeded as exc:
            report.skipped.append(str(exc))
            continue
        report.codes_examined += 1
        for phi in maps:
            report.isometries_found += 1
            if extends_to_monomial(phi, G) is not None:
                report.extendable += 1
            else:
                report.witnesses.append(Witness(C, phi))
    return report


def check_lemiso(phi: LinearMap, w, s) -> bool:
    """Whether a w-isometry phi also preserves the weight w (*) s."""
    if not phi.preserves(w):
        raise ValueError("phi is not a w-isometry")
    v = corr_right(as_fnr(w), as_fnr(s))
    return phi.preserves(v)
