import itertools
import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import CATALOG, EXISTENCE_SPECS, product, random_complex_structure, random_vector, spec_id
from liecx import rational as rq
from liecx.complex_structures import (
    Endomorphism,
    is_complex_structure,
    is_integrable,
    new_endomorphism,
    nijenhuis,
    quasi_invariant_vectors,
)
from liecx.constructions import BianchiSpec, standard_structure
from liecx.errors import DimensionMismatch, NotAComplexStructure, NotSquare
from liecx.lie_core import basis_vector

ROT = ((0, -1), (1, 0))


def test_new_endomorphism():
    assert new_endomorphism(rq.identity(6)).dim == 6
    assert new_endomorphism(ROT).exact
    with pytest.raises(NotSquare):
        new_endomorphism(((1, 0, 0), (0, 1, 0)))


def test_is_complex_structure_small():
    assert is_complex_structure(Endomorphism(ROT))
    assert not is_complex_structure(Endomorphism(rq.identity(2)))
    assert is_complex_structure(Endomorphism(((0.0, -1.0), (1.0 + 1e-12, 0.0))))
    assert not is_complex_structure(Endomorphism(((0.0, -1.0), (1.0 + 1e-6, 0.0))))


def test_type8_standard_structure():
    G, J = standard_structure(8)
    assert is_complex_structure(J)
    u = lambda i: basis_vector(6, i)  # noqa: E731
    assert not any(nijenhuis(G, J, u(2), u(0)))


def test_abelian_any_matrix():
    G = product(BianchiSpec(1))
    m = Endomorphism(tuple(tuple(F(i - j, 3) for j in range(6)) for i in range(6)))
    assert not any(nijenhuis(G, m, basis_vector(6, 0), basis_vector(6, 4)))
    J = random_complex_structure(random.Random(1), 6)
    assert is_integrable(G, J).integrable


# Oracle: sympy with hand-written brackets of type (4), theta=2, on both factors;
# J = P J0 P^-1 for a random integer P and J0 the block 90-degree rotation.
J_TYPE4 = Endomorphism(
    tuple(
        tuple(F(x) for x in row.split())
        for row in [
            "9/5 -4/5 4/5 -1/5 -7/5 -4/5",
            "0 -2 1 0 5 2",
            "-12/5 -3/5 -2/5 3/5 16/5 12/5",
            "88/5 72/5 -22/5 18/5 -359/5 -98/5",
            "18/5 12/5 -2/5 3/5 -64/5 -18/5",
            "-39/5 -41/5 11/5 -9/5 177/5 49/5",
        ]
    )
)


def test_nijenhuis_type4_theta2_frozen():
    G = product(BianchiSpec(4, 2))
    assert is_complex_structure(J_TYPE4)
    e = lambda i: basis_vector(6, i)  # noqa: E731
    assert nijenhuis(G, J_TYPE4, e(0), e(2)) == (
        F(58, 25), F(-24, 5), F(-84, 25), F(506, 25), F(-114, 25), F(-273, 25)
    )
    v = (F(1, 2), F(-1), F(3), F(0), F(2, 3), F(1))
    w = (F(0), F(1), F(-1), F(1, 3), F(2), F(-2))
    assert nijenhuis(G, J_TYPE4, v, w) == (
        F(18839, 450), F(-334, 3), F(5731, 150), F(67601, 25), F(42091, 150), F(-106109, 75)
    )
    assert not is_integrable(G, J_TYPE4).integrable


@pytest.mark.parametrize("spec", EXISTENCE_SPECS, ids=spec_id)
def test_standard_structures_integrable(spec):
    G, J = standard_structure(spec)
    report = is_integrable(G, J)
    assert report.integrable and report.exact
    assert len(report.pairs) == 15
    assert report.max_residual_norm == 0
    assert report.nonzero_pairs() == []


def _sign_permutations(d):
    """Sign-permutation matrices J with J^2 = -1: fixed-point-free involutions with signs."""

    def matchings(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for k, other in enumerate(rest):
            for m in matchings(rest[:k] + rest[k + 1 :]):
                yield [(first, other)] + m

    for m in matchings(list(range(d))):
        for signs in itertools.product((1, -1), repeat=len(m)):
            J = [[0] * d for _ in range(d)]
            for (a, b), s in zip(m, signs):
                J[b][a] = s
                J[a][b] = -s
            yield Endomorphism(tuple(map(tuple, J)))


def test_type8_failing_sign_permutation():
    G = product(BianchiSpec(8))
    failing = [J for J in _sign_permutations(6) if not is_integrable(G, J).integrable]
    assert failing
    # J e_i = e_i* for i = 1, 2, 3 is among them; the first bad pair is (e1, e2)
    J = Endomorphism(tuple(tuple(
        1 if r == c + 3 else -1 if c == r + 3 else 0 for c in range(6)) for r in range(6)))
    assert J in failing
    report = is_integrable(G, J)
    a, b, value = report.first_failure
    assert (a, b) == (0, 1)
    assert value == (0, 0, 1, 0, 0, -1)


def test_is_integrable_rejects_non_structure():
    G = product(BianchiSpec(8))
    with pytest.raises(NotAComplexStructure):
        is_integrable(G, Endomorphism(rq.identity(6)))
    with pytest.raises(DimensionMismatch):
        is_integrable(G, Endomorphism(ROT))


# identities valid for any J with J^2 = -1


@st.composite
def algebra_structure_vectors(draw):
    spec = draw(st.sampled_from(CATALOG))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return product(spec), random_complex_structure(rng, 6), random_vector(rng, 6), random_vector(rng, 6)


@settings(max_examples=150, deadline=None)
@given(algebra_structure_vectors())
def test_nijenhuis_j_identities(data):
    G, J, v, w = data
    n = nijenhuis(G, J, v, w)
    assert n == rq.vscale(-1, nijenhuis(G, J, J.apply(v), J.apply(w)))
    assert n == J.apply(nijenhuis(G, J, J.apply(v), w))
    assert n == J.apply(nijenhuis(G, J, v, J.apply(w)))
    assert not any(nijenhuis(G, J, v, J.apply(v)))


@settings(max_examples=150, deadline=None)
@given(algebra_structure_vectors(), st.fractions(-3, 3, max_denominator=4))
def test_nijenhuis_bilinear_antisymmetric(data, a):
    G, J, v, w = data
    assert nijenhuis(G, J, w, v) == rq.vscale(-1, nijenhuis(G, J, v, w))
    z = rq.vadd(v, w)
    lhs = nijenhuis(G, J, rq.vadd(rq.vscale(a, v), w), z)
    rhs = rq.vadd(rq.vscale(a, nijenhuis(G, J, v, z)), nijenhuis(G, J, w, z))
    assert lhs == rhs


@pytest.mark.parametrize("spec", EXISTENCE_SPECS, ids=spec_id)
def test_basis_verdict_matches_random_pairs(spec):
    G, J = standard_structure(spec)
    assert is_integrable(G, J).integrable
    rng = random.Random(7)
    for _ in range(100):
        assert not any(nijenhuis(G, J, random_vector(rng, 6), random_vector(rng, 6)))


def test_quasi_invariant_type8():
    _, J = standard_structure(8)
    pairs = quasi_invariant_vectors(J, 3)
    assert len(pairs) == 1
    lam, vec = pairs[0]
    assert lam == 0.0
    assert vec == (0.0, 0.0, 1.0)


def test_quasi_invariant_zero_block():
    J = Endomorphism(tuple(tuple(-1 if c == r + 3 else 1 if r == c + 3 else 0 for c in range(6)) for r in range(6)))
    pairs = quasi_invariant_vectors(J, 3)
    assert [lam for lam, _ in pairs] == [0.0, 0.0, 0.0]
    assert [v for _, v in pairs] == [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)]


def _charpoly3(m):
    """Coefficients of det(t I - m), exact, via Faddeev-LeVerrier."""
    n = 3
    coeffs = [F(1)]
    mk = rq.zeros(n)
    for k in range(1, n + 1):
        mk = rq.matmul(m, rq.add(mk, rq.scale(coeffs[-1], rq.identity(n))))
        coeffs.append(-sum(mk[i][i] for i in range(n)) / k)
    return coeffs


@pytest.mark.parametrize("seed", range(25))
def test_quasi_invariant_against_roots(seed):
    rng = random.Random(seed)
    block = tuple(tuple(F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3)) for _ in range(3))
    J = Endomorphism(tuple(
        tuple(block[r][c] if r < 3 and c < 3 else F(0) for c in range(6)) for r in range(6)))
    roots = np.roots([float(c) for c in _charpoly3(block)])
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-7)
    got = quasi_invariant_vectors(J, 3)
    assert len(got) >= 1
    lams = sorted({lam for lam, _ in got})
    assert len(lams) == len(set(np.round(real, 6)))
    for lam in lams:
        assert min(abs(lam - r) for r in real) < 1e-9
    m = np.array(block, dtype=float)
    for lam, vec in got:
        v = np.array(vec)
        assert abs(np.linalg.norm(v) - 1) < 1e-12
        assert v[np.flatnonzero(np.abs(v) > 1e-12)[0]] > 0
        assert np.linalg.norm(m @ v - lam * v) < 1e-8
