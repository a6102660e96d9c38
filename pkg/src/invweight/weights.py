"""Invariant weights on a product of chain rings.

A ``Weight`` is stored on the ideal representatives E: one value per
principal ideal, 0 on the zero ideal.  Its expansion to a function on R
is constant on unit orbits, so it is invariant by construction.  Arbitrary
(possibly non-invariant) functions stay ``FnR`` values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .conv import FnR, as_fnr
from .mobius import mobius_zero_closed
from .ring import ProductRing, parse_ring
from .scalar import Gaussian, as_scalar, render_rational

__all__ = [
    "SymmetryGroup",
    "Weight",
    "WeightError",
    "dump_weight",
    "hamming",
    "homogeneity_constant",
    "homogeneous",
    "is_invariant",
    "load_weight",
    "sym_left",
    "sym_right",
    "weight_from_table",
    "weight_on_tuple",
    "weight_to_json",
]


class WeightError(ValueError):
    pass


class Weight:
    def __init__(self, ring: ProductRing, values: dict, name: str | None = None):
        self.ring = ring
        self.values = {e: as_scalar(values.get(e, 0)) for e in ring.ideal_reps()}
        if self.values[ring.zero_ideal]:
            raise WeightError("a weight must vanish at 0")
        self.name = name
        self._fnr = None

    def value(self, e) -> Gaussian:
        return self.values[self.ring.check_exponent(e)]

    def __call__(self, a) -> Gaussian:
        return self.values[self.ring.valuation(a)]

    def to_fnr(self) -> FnR:
        if self._fnr is None:
            R = self.ring
            self._fnr = FnR(R, [self.values[R.valuation(i)] for i in range(R.size)])
        return self._fnr

    def scaled(self, c) -> "Weight":
        c = as_scalar(c)
        return Weight(self.ring, {e: v * c for e, v in self.values.items()})

    def distinct_values(self):
        return set(self.values.values())

    def __eq__(self, other):
        return isinstance(other, Weight) and self.ring == other.ring and self.values == other.values

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.values.items()))))

    def __repr__(self):
        body = ", ".join(f"{_key(e)}: {v}" for e, v in self.values.items() if e != self.ring.zero_ideal)
        label = f" {self.name}" if self.name else ""
        return f"Weight({self.ring}{label}; {body})"


def weight_from_table(ring: ProductRing, table: dict, name: str | None = None) -> Weight:
    """Build a weight from exponent -> value; every nonzero ideal must be present."""
    table = {tuple(k): v for k, v in table.items()}
    for k in table:
        try:
            ring.check_exponent(k)
        except ValueError as exc:
            raise WeightError(str(exc)) from None
    missing = [e for e in ring.ideal_reps() if e != ring.zero_ideal and e not in table]
    if missing:
        raise WeightError(f"weight table is missing exponent(s) {', '.join(_key(e) for e in missing)}")
    if ring.zero_ideal in table and as_scalar(table[ring.zero_ideal]):
        raise WeightError("a weight must vanish at the zero ideal")
    return Weight(ring, table, name=name)


def hamming(ring: ProductRing) -> Weight:
    return Weight(ring, {e: 1 for e in ring.ideal_reps() if e != ring.zero_ideal}, name="hamming")


def homogeneous(ring: ProductRing) -> Weight:
    """Normalised homogeneous weight 1 - mu(0, Rx) / |R^x x|."""
    values = {}
    for e in ring.ideal_reps():
        if e == ring.zero_ideal:
            continue
        values[e] = 1 - Gaussian(mobius_zero_closed(ring, e)) / ring.orbit_size(e)
    return Weight(ring, values, name="homogeneous")


@dataclass(frozen=True)
class SymmetryGroup:
    ring: ProductRing
    units: frozenset

    def __contains__(self, u):
        return self.ring.index(u) in self.units

    def __len__(self):
        return len(self.units)

    def is_full(self):
        return self.units == frozenset(self.ring.units)

    def is_subgroup(self) -> bool:
        R = self.ring
        if R.one not in self.units or not self.units <= set(R.units):
            return False
        return all(R.mul(a, b) in self.units for a in self.units for b in self.units) and \
            all(R.inverse(a) in self.units for a in self.units)

    def sorted(self):
        return sorted(self.units)


def sym_left(f) -> SymmetryGroup:
    """Units u with f(ux) = f(x) for every x."""
    f = as_fnr(f)
    R, t, mul = f.ring, f.table, f.ring.mul_table
    return SymmetryGroup(R, frozenset(
        u for u in R.units if all(t[mul[u][x]] == t[x] for x in range(R.size))))


def sym_right(f) -> SymmetryGroup:
    """Units u with f(xu) = f(x) for every x."""
    f = as_fnr(f)
    R, t, mul = f.ring, f.table, f.ring.mul_table
    return SymmetryGroup(R, frozenset(
        u for u in R.units if all(t[mul[x][u]] == t[x] for x in range(R.size))))


def is_invariant(w) -> bool:
    return sym_left(w).is_full() and sym_right(w).is_full()


def homogeneity_constant(w):
    """The common average of w over nonzero principal ideals, or None."""
    if not isinstance(w, Weight):
        if not is_invariant(w):
            raise WeightError("homogeneity is only defined for invariant weights")
        f = as_fnr(w)
        R = f.ring
        w = Weight(R, {e: f.table[R.rep(e)] for e in R.ideal_reps()})
    R = w.ring
    c = None
    for e in R.ideal_reps():
        if e == R.zero_ideal:
            continue
        total = sum((w.values[f] * R.orbit_size(f) for f in R.ideal_reps() if R.leq_ideal(f, e)),
                    Gaussian(0))
        avg = total / R.ideal_size(e)
        if c is None:
            c = avg
        elif avg != c:
            return None
    return c if c is not None else Gaussian(0)


def weight_on_tuple(w, x) -> Gaussian:
    """w(x_1) + ... + w(x_n)."""
    if isinstance(w, Weight):
        R = w.ring
        return sum((w.values[R.valuation(a)] for a in x), Gaussian(0))
    f = as_fnr(w)
    return sum((f[a] for a in x), Gaussian(0))


# weight files -------------------------------------------------------------

def _key(e):
    return ",".join(str(k) for k in e)


def _parse_key(ring, key):
    try:
        e = tuple(int(k) for k in key.split(","))
    except ValueError:
        raise WeightError(f"malformed exponent key {key!r}") from None
    try:
        return ring.check_exponent(e)
    except ValueError:
        raise WeightError(f"exponent key {key!r} does not name an ideal of {ring}") from None


def load_weight(source) -> Weight:
    """Read the JSON weight format from a path, JSON text or parsed mapping."""
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        data = json.loads(Path(source).read_text())
    elif isinstance(source, str):
        data = json.loads(source)
    else:
        data = source
    if not isinstance(data, dict) or "ring" not in data or "values" not in data:
        raise WeightError("weight file needs 'ring' and 'values' fields")
    ring = parse_ring(data["ring"])
    table = {}
    for key, raw in data["values"].items():
        e = _parse_key(ring, key)
        try:
            table[e] = as_scalar(raw)
        except (TypeError, ValueError) as exc:
            raise WeightError(f"bad value for {key!r}: {exc}") from None
    return weight_from_table(ring, table, name=data.get("name"))


def _render_scalar(v):
    if v.is_real:
        return render_rational(v.re)
    return {"re": render_rational(v.re), "im": render_rational(v.im)}


def weight_to_json(w: Weight) -> dict:
    R = w.ring
    data = {"ring": R.name}
    if w.name:
        data["name"] = w.name
    data["values"] = {_key(e): _render_scalar(w.values[e]) for e in R.ideal_reps() if e != R.zero_ideal}
    return data


def dump_weight(w: Weight, path) -> None:
    Path(path).write_text(json.dumps(weight_to_json(w), indent=2) + "\n")
