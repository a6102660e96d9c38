"""Invariant weights, the convolution/correlation algebra and an extension
criterion for linear codes over finite products of finite chain rings."""

__version__ = "0.1.0"

from .conv import (
    FnR,
    canonical_s,
    convolve,
    corr_eta_closed,
    corr_left,
    corr_right,
    delta,
    delta_set,
    epsilon,
    eta,
    eta_change_of_basis,
    nonzero_ideals,
)
from .criterion import CriterionReport, criterion_check, criterion_values, solve_to_hamming
from .mobius import (
    FinitePoset,
    ideal_lattice,
    mobius_invert,
    mobius_pair,
    mobius_poset,
    mobius_zero_closed,
)
from .oracle import (
    Code,
    LinearMap,
    Monomial,
    check_lemiso,
    enumerate_codes,
    enumerate_isometries,
    extends_to_monomial,
    verify_extension_theorem,
)
from .ring import ChainRingSpec, Element, ProductRing, make_product, parse_ring
from .scalar import Gaussian
from .weights import (
    SymmetryGroup,
    Weight,
    hamming,
    homogeneity_constant,
    homogeneous,
    is_invariant,
    load_weight,
    sym_left,
    sym_right,
    weight_from_table,
    weight_on_tuple,
)
