"""Sufficient criterion for the extension property of an invariant weight.

For every nonzero ideal representative x the value

    sum over t with t_i <= d_i - x_i  of  mu(0, Rxt) * w(tx)

must be nonzero.  These are the diagonal entries of the (triangular)
matrix of ``w (*) eta_x`` evaluated at the representatives; when all are
nonzero, w generates the invariant weights as a right S-module and in
particular w (*) h = hamming for some h in S.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conv import FnR, canonical_s, corr_eta_closed, corr_right, eta, nonzero_ideals
from .linalg import solve
from .mobius import mobius_zero_closed
from .scalar import Gaussian
from .weights import Weight, WeightError, hamming, is_invariant

__all__ = [
    "CriterionEntry",
    "CriterionReport",
    "criterion_check",
    "criterion_matrix",
    "criterion_values",
    "criterion_values_via_eta",
    "solve_to_hamming",
]


def _require_weight(w):
    if isinstance(w, Weight):
        return w
    if not is_invariant(w):
        raise WeightError("the criterion applies to invariant weights only")
    R = w.ring
    return Weight(R, {e: w[R.rep(e)] for e in R.ideal_reps()})


def criterion_values(w) -> dict:
    """x -> criterion sum, straight from the defining formula."""
    w = _require_weight(w)
    R = w.ring
    out = {}
    for x in nonzero_ideals(R):
        perp = R.orth(x)
        total = Gaussian(0)
        for t in R.ideal_reps():
            if any(a > b for a, b in zip(t, perp)):
                continue
            xt = R.ideal_product(x, t)
            m = mobius_zero_closed(R, xt)
            if m:
                total = total + w.values[R.ideal_product(t, x)] * m
        out[x] = total
    return out


def criterion_values_via_eta(w) -> dict:
    """The same values as the diagonal of the eta-correlation matrix."""
    w = _require_weight(w)
    return {x: corr_eta_closed(w, x, x) for x in nonzero_ideals(w.ring)}


def criterion_matrix(w):
    """Rows y, columns x: (w (*) eta_x)(rep y), both over nonzero ideals."""
    w = _require_weight(w)
    labels = nonzero_ideals(w.ring)
    return [[corr_eta_closed(w, x, y) for x in labels] for y in labels]


@dataclass(frozen=True)
class CriterionEntry:
    x: tuple
    value: Gaussian

    @property
    def passed(self) -> bool:
        return bool(self.value)


@dataclass(frozen=True)
class CriterionReport:
    ring: str
    weight: str | None
    entries: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.passed]


def criterion_check(w) -> CriterionReport:
    """Evaluate every entry (no early exit); overall pass is the conjunction.

    A pass means the sufficient condition holds; a failure says nothing
    about whether non-extendable isometries actually exist.
    """
    w = _require_weight(w)
    values = criterion_values(w)
    entries = tuple(CriterionEntry(x, values[x]) for x in nonzero_ideals(w.ring))
    return CriterionReport(ring=w.ring.name, weight=w.name, entries=entries)


def solve_to_hamming(w):
    """Some h in S with w (*) h = hamming, or None if no such h exists.

    Solved in eta coordinates, where the system is triangular with the
    criterion values on the diagonal.
    """
    w = _require_weight(w)
    R = w.ring
    labels = nonzero_ideals(R)
    coeffs = solve(criterion_matrix(w), [1] * len(labels))
    if coeffs is None:
        return None
    h = FnR.zero(R)
    for x, c in zip(labels, coeffs):
        if c:
            h = h + eta(R, x) * c
    h = canonical_s(h)
    if corr_right(w, h) != hamming(R).to_fnr():
        raise ArithmeticError("eta-coordinate solution does not reproduce the Hamming weight")
    return h
