import random
import sys
from fractions import Fraction

import pytest

from invweight.conv import FnR
from invweight.ring import parse_ring
from invweight.scalar import Gaussian
from invweight.weights import Weight

TEST_RINGS = ["Z4", "Z8", "Z9", "Z16", "Z2*Z2", "Z2*Z4", "Z2*Z2*Z2", "F2x2", "F3x2", "Z2*F2x2"]
SMALL_RINGS = ["Z2", "Z3", "Z4", "Z8", "Z9", "Z2*Z2", "Z2*Z4", "F2x2", "F3x2", "Z2*F2x2"]


@pytest.fixture(params=TEST_RINGS)
def ring(request):
    return parse_ring(request.param)


def random_scalar(rng, complex_part=True, span=5):
    re = Fraction(rng.randint(-span, span), rng.randint(1, 4))
    im = Fraction(rng.randint(-span, span), rng.randint(1, 4)) if complex_part and rng.random() < 0.3 else 0
    return Gaussian(re, im)


def random_fnr(R, rng, complex_part=True):
    return FnR(R, [random_scalar(rng, complex_part) for _ in range(R.size)])


def random_weight(R, rng, complex_part=False):
    values = {e: random_scalar(rng, complex_part) for e in R.ideal_reps() if e != R.zero_ideal}
    return Weight(R, values)


def principal_ideal_sets(R):
    """Principal ideals as element sets, by brute-force enumeration of R*a."""
    return {a: frozenset(R.mul(r, a) for r in range(R.size)) for a in range(R.size)}


@pytest.fixture
def rng():
    return random.Random(20261017)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "VERDICTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
