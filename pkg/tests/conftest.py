import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from liecx import rational as rq
from liecx.complex_structures import Endomorphism
from liecx.constructions import EXISTENCE_TYPES, BianchiSpec, bianchi, catalog_specs, standard_structure
from liecx.lie_core import direct_product

EXISTENCE_SPECS = [BianchiSpec(t, 1 if t in (4, 6) else None) for t in EXISTENCE_TYPES]
NONEXISTENCE_SPECS = [BianchiSpec(5), BianchiSpec(4, 2), BianchiSpec(4, Fraction(1, 2)), BianchiSpec(4, -1)]
CATALOG = catalog_specs()


def spec_id(spec):
    return spec.label.replace(" ", "")


def product(spec):
    g = bianchi(spec)
    return direct_product(g, g)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def rational_vectors(n):
    return st.lists(rationals, min_size=n, max_size=n).map(tuple)


def random_rational(rng, lo=-5, hi=5, max_den=7):
    return Fraction(rng.randint(lo * max_den, hi * max_den), rng.randint(1, max_den))


def random_vector(rng, n):
    return tuple(random_rational(rng) for _ in range(n))


def random_complex_structure(rng, n, spread=2):
    """``P J0 P^-1`` for a random invertible integer ``P``; exact, ``J^2 = -1``."""
    j0 = [[rq.ZERO] * n for _ in range(n)]
    for k in range(0, n, 2):
        j0[k + 1][k] = rq.ONE
        j0[k][k + 1] = -rq.ONE
    while True:
        p = tuple(tuple(Fraction(rng.randint(-spread, spread)) for _ in range(n)) for _ in range(n))
        if rq.rank(p) == n:
            break
    return Endomorphism(rq.matmul(rq.matmul(p, tuple(map(tuple, j0))), rq.inverse(p)))


@pytest.fixture(scope="session")
def existence_structures():
    return {spec_id(s): standard_structure(s) for s in EXISTENCE_SPECS}


@pytest.fixture
def rng():
    return random.Random(20240521)
