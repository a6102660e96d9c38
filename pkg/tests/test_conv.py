import itertools
from fractions import Fraction

import pytest

from conftest import SMALL_RINGS, TEST_RINGS, random_fnr, random_weight
from invweight.conv import (
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
    from_s_coordinates,
    is_s_element,
    nonzero_ideals,
    s_coordinates,
)
from invweight.linalg import determinant, rank
from invweight.ring import parse_ring
from invweight.scalar import Gaussian
from invweight.weights import hamming, homogeneous, is_invariant, sym_left, sym_right


# naive references, straight from the defining sums

def naive_convolve(f, g):
    R = f.ring
    out = [Gaussian(0)] * R.size
    for a in range(R.size):
        for b in range(R.size):
            out[R.mul(a, b)] += f[a] * g[b]
    return FnR(R, out)


def naive_corr_left(f, w):
    R = f.ring
    return FnR(R, [sum((f[r] * w[R.mul(x, r)] for r in range(R.size)), Gaussian(0)) for x in range(R.size)])


def naive_corr_right(w, g):
    R = w.ring
    return FnR(R, [sum((w[R.mul(r, x)] * g[r] for r in range(R.size)), Gaussian(0)) for x in range(R.size)])


@pytest.mark.parametrize("spec", ["Z4", "Z9", "Z2*Z4", "F3x2"])
def test_kernels_match_naive_sums(spec, rng):
    R = parse_ring(spec)
    for _ in range(10):
        f, g = random_fnr(R, rng), random_fnr(R, rng)
        assert convolve(f, g) == naive_convolve(f, g)
        assert corr_left(f, g) == naive_corr_left(f, g)
        assert corr_right(f, g) == naive_corr_right(f, g)


def test_delta_examples():
    Z4 = parse_ring("Z4")
    assert delta_set(Z4, Z4.units).table == (0, 1, 0, 1)
    assert convolve(delta(Z4, 0), delta(Z4, 0)) == delta(Z4, 0)
    assert convolve(delta(Z4, 2), delta(Z4, 2)) == delta(Z4, 0)


@pytest.mark.parametrize("spec", SMALL_RINGS)
def test_delta_products(spec):
    R = parse_ring(spec)
    for r, s in itertools.product(range(R.size), repeat=2):
        assert convolve(delta(R, r), delta(R, s)) == delta(R, R.mul(r, s))


@pytest.mark.parametrize("spec", ["Z4", "Z8", "Z2*Z2", "F2x2", "Z9"])
def test_identity_and_associativity(spec, rng):
    R = parse_ring(spec)
    one = delta(R, R.one)
    for _ in range(20):
        f, g, h = (random_fnr(R, rng) for _ in range(3))
        assert convolve(one, f) == f == convolve(f, one)
        assert convolve(convolve(f, g), h) == convolve(f, convolve(g, h))
        c = Gaussian(Fraction(2, 3), -1)
        assert convolve(f * c, g) == convolve(f, g) * c == convolve(f, g * c)
        assert convolve(f + g, h) == convolve(f, h) + convolve(g, h)


def test_correlation_examples():
    Z4 = parse_ring("Z4")
    w = homogeneous(Z4)
    assert corr_left(delta(Z4, 1), w) == w.to_fnr()
    assert corr_left(delta(Z4, 2), w)[1] == 2
    assert corr_right(w, delta(Z4, 0)).is_zero()


@pytest.mark.parametrize("spec", ["Z4", "Z2*Z4", "F3x2", "Z2*F2x2"])
def test_bimodule_identities(spec, rng):
    R = parse_ring(spec)
    for _ in range(15):
        f, g, w = (random_fnr(R, rng) for _ in range(3))
        assert corr_left(convolve(f, g), w) == corr_left(f, corr_left(g, w))
        assert corr_right(w, convolve(f, g)) == corr_right(corr_right(w, f), g)
        assert corr_left(g, corr_right(w, f)) == corr_right(corr_left(g, w), f)


def test_ring_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        convolve(delta(parse_ring("Z4"), 1), delta(parse_ring("Z8"), 1))


@pytest.mark.parametrize("spec", ["Z4", "Z8", "Z2*Z4", "F2x2"])
def test_symmetry_inheritance(spec, rng):
    R = parse_ring(spec)
    for _ in range(20):
        # sparse integer tables so that proper symmetry subgroups actually occur
        f, g, w = (FnR(R, [rng.choice([0, 0, 1, 2]) for _ in range(R.size)]) for _ in range(3))
        assert sym_left(corr_right(w, g)).units >= sym_right(g).units
        assert sym_right(corr_left(f, w)).units >= sym_left(f).units
        assert sym_left(convolve(f, g)).units >= sym_left(f).units
        assert sym_right(convolve(f, g)).units >= sym_right(g).units


@pytest.mark.parametrize("spec", TEST_RINGS)
def test_right_action_closure(spec, rng):
    R = parse_ring(spec)
    for _ in range(5):
        w = random_weight(R, rng)
        coeffs = {e: rng.randint(-3, 3) for e in nonzero_ideals(R)}
        s = from_s_coordinates(R, coeffs)
        v = corr_right(w, s)
        assert is_invariant(v) and v[0] == 0


def test_epsilon_examples():
    Z4 = parse_ring("Z4")
    half = Fraction(1, 2)
    assert epsilon(Z4, (0,)) == (delta(Z4, 1) + delta(Z4, 3)) * half
    assert epsilon(Z4, (1,)) == delta(Z4, 2)
    for spec in TEST_RINGS:
        R = parse_ring(spec)
        assert epsilon(R, R.zero_ideal) == delta(R, 0)
        for e in R.ideal_reps():
            assert sum(epsilon(R, e), Gaussian(0)) == 1


def test_eta_examples():
    Z4 = parse_ring("Z4")
    assert eta(Z4, (0,)) == epsilon(Z4, (2,)) - epsilon(Z4, (1,))
    assert eta(Z4, (1,)) == epsilon(Z4, (1,)) - epsilon(Z4, (0,))
    P = parse_ring("Z2*Z2")
    e = lambda t: epsilon(P, t)
    assert eta(P, (0, 0)) == e((0, 0)) - e((1, 0)) - e((0, 1)) + e((1, 1))
    with pytest.raises(ValueError):
        eta(Z4, (2,))


def test_eta_change_of_basis_examples():
    Z4 = parse_ring("Z4")
    M = eta_change_of_basis(Z4)
    # rows eta_(0), eta_(1) over epsilon_(0), epsilon_(1); epsilon_(2) = delta_0 dropped
    assert M == [[0, -1], [-1, 1]]
    assert determinant(M) == -1
    P = parse_ring("Z2*Z2")
    assert len(eta_change_of_basis(P)) == 3 and determinant(eta_change_of_basis(P)) != 0


@pytest.mark.parametrize("spec", TEST_RINGS)
def test_eta_basis_full_rank(spec):
    R = parse_ring(spec)
    M = eta_change_of_basis(R)
    assert rank(M) == len(R.ideal_reps()) - 1
    # rows agree with the canonical S-coordinates of the eta functions themselves
    for x, row in zip(nonzero_ideals(R), M):
        coords = s_coordinates(eta(R, x))
        assert [coords[t] for t in nonzero_ideals(R)] == row


def test_s_elements():
    R = parse_ring("Z2*Z4")
    f = from_s_coordinates(R, {(0, 1): 3, (1, 1): -2})
    assert is_s_element(f)
    assert s_coordinates(f)[(0, 1)] == 3 and s_coordinates(f)[(0, 0)] == 0
    assert canonical_s(f + delta(R, 0) * 5) == f
    assert not is_s_element(delta(R, R.one))
    with pytest.raises(ValueError):
        canonical_s(delta(R, R.one))


def test_corr_eta_closed_examples():
    Z4 = parse_ring("Z4")
    assert corr_eta_closed(homogeneous(Z4), (1,), (1,)) == -2
    assert corr_eta_closed(hamming(Z4), (0,), (0,)) == -1
    assert corr_eta_closed(homogeneous(Z4), (0,), (1,)) == 0      # R not below R2


@pytest.mark.parametrize("spec", TEST_RINGS)
def test_corr_eta_closed_matches_correlation(spec, rng):
    R = parse_ring(spec)
    for w in [hamming(R), homogeneous(R), random_weight(R, rng, complex_part=True)]:
        for x in nonzero_ideals(R):
            direct = corr_right(w, eta(R, x))
            for y in R.ideal_reps():
                assert corr_eta_closed(w, x, y) == direct[R.rep(y)]
                if not R.leq_ideal(x, y):
                    assert direct[R.rep(y)] == 0
