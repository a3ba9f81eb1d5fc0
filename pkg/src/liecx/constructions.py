"""Explicit algebras and integrable complex structures on them.

* the eight families of 3-dimensional real Lie algebras (``bianchi``),
* the structure ``Ju = u*, Jv = w, Jv* = w*`` on ``g x g`` built from an
  adapted basis ``{u, v, w}`` of ``g`` (``build_product_j``),
* the table of adapted bases for every type that admits one
  (``standard_structure``),
* ``o(n)`` and a pairing structure on ``o(n) x o(n)``.

Basis vectors are 0-based in code; type numbers and labels such as ``e12``
follow the usual 1-based convention.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import rational as rq
from .complex_structures import Endomorphism
from .errors import (
    DimensionMismatch,
    InvalidJordanTriple,
    InvalidN,
    NoKnownStructure,
    SingularBasis,
    ThetaForbidden,
    ThetaRequired,
    ThetaZero,
)
from .lie_core import bracket, direct_product, new_lie_algebra

__all__ = [
    "BianchiSpec",
    "ComplexPair",
    "RealEigen",
    "JordanTriple",
    "bianchi",
    "catalog_specs",
    "derive_jordan_case",
    "validate_jordan_triple",
    "build_product_j",
    "standard_triple",
    "standard_structure",
    "EXISTENCE_TYPES",
    "orthogonal_algebra",
    "orthogonal_index",
    "orthogonal_pairing",
    "orthogonal_product",
]

THETA_TYPES = (4, 6)


@dataclass(frozen=True)
class BianchiSpec:
    type_id: int
    theta: Fraction | None = None

    def __post_init__(self):
        if not isinstance(self.type_id, int) or not 1 <= self.type_id <= 8:
            raise ValueError(f"type must be an integer in 1..8, got {self.type_id!r}")
        if self.type_id in THETA_TYPES:
            if self.theta is None:
                raise ThetaRequired(f"type ({self.type_id}) needs a parameter theta")
            theta = rq.scalar(self.theta)
            if theta == 0:
                raise ThetaZero(f"type ({self.type_id}) requires theta != 0")
            object.__setattr__(self, "theta", theta)
        elif self.theta is not None:
            raise ThetaForbidden(f"type ({self.type_id}) takes no parameter")

    @property
    def label(self):
        if self.theta is None:
            return f"({self.type_id})"
        return f"({self.type_id}) theta={rq.format_scalar(self.theta)}"


# Nonzero brackets [e_i, e_j], i<j, 1-based, as (i, j, {k: coefficient}).
def _bianchi_brackets(type_id, theta):
    t = theta
    table = {
        1: [],
        2: [(1, 2, {1: 1})],
        3: [(1, 2, {3: 1})],
        4: [(1, 3, {1: 1}), (2, 3, {2: t})],
        5: [(1, 3, {1: 1}), (2, 3, {1: 1, 2: 1})],
        6: [(1, 3, {1: t, 2: -1}), (2, 3, {1: 1, 2: t})],
        7: [(1, 3, {2: 1}), (2, 3, {1: 1}), (1, 2, {3: 1})],
        8: [(1, 3, {2: -1}), (2, 3, {1: 1}), (1, 2, {3: 1})],
    }
    return table[type_id]


def bianchi(spec):
    """The 3-dimensional algebra of the given type, in its canonical basis."""
    if isinstance(spec, int):
        spec = BianchiSpec(spec)
    entries = [
        (i - 1, j - 1, k - 1, coef)
        for i, j, res in _bianchi_brackets(spec.type_id, spec.theta)
        for k, coef in res.items()
    ]
    return new_lie_algebra(3, entries, name=f"type {spec.label}")


def catalog_specs(thetas=(1, 2, Fraction(1, 2), -1)):
    """Every type, with each ``theta`` in ``thetas`` for the parametrised ones."""
    specs = []
    for t in range(1, 9):
        if t in THETA_TYPES:
            specs.extend(BianchiSpec(t, rq.scalar(th)) for th in thetas)
        else:
            specs.append(BianchiSpec(t))
    return specs


@dataclass(frozen=True)
class ComplexPair:
    """``[u,v] = A v + B w``, ``[u,w] = -B v + A w`` with ``B != 0``."""

    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", rq.scalar(self.A))
        object.__setattr__(self, "B", rq.scalar(self.B))
        if self.B == 0:
            raise ValueError("a complex eigenvalue pair needs B != 0")


@dataclass(frozen=True)
class RealEigen:
    """``[u,v] = alpha v``, ``[u,w] = alpha w``."""

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", rq.scalar(self.alpha))


@dataclass(frozen=True)
class JordanTriple:
    u: tuple
    v: tuple
    w: tuple
    case: ComplexPair | RealEigen

    def __post_init__(self):
        for name in ("u", "v", "w"):
            object.__setattr__(self, name, tuple(rq.scalar(x) for x in getattr(self, name)))

    def basis_matrix(self):
        return rq.from_columns((self.u, self.v, self.w))


def _expected_brackets(t):
    v, w = t.v, t.w
    if isinstance(t.case, ComplexPair):
        A, B = t.case.A, t.case.B
        return (
            rq.vadd(rq.vscale(A, v), rq.vscale(B, w)),
            rq.vadd(rq.vscale(-B, v), rq.vscale(A, w)),
        )
    a = t.case.alpha
    return rq.vscale(a, v), rq.vscale(a, w)


def validate_jordan_triple(g, t):
    """True iff ``{u, v, w}`` is a basis and the bracket relations of its case hold."""
    if g.dim != 3 or any(len(x) != 3 for x in (t.u, t.v, t.w)):
        raise DimensionMismatch("Jordan triples live in 3-dimensional algebras")
    if rq.rank(t.basis_matrix()) < 3:
        return False
    uv, uw = _expected_brackets(t)
    return bracket(g, t.u, t.v) == uv and bracket(g, t.u, t.w) == uw


def derive_jordan_case(g, u, v, w):
    """Read the case data off the brackets of ``u`` with ``v`` and ``w``.

    Returns a :class:`ComplexPair` or :class:`RealEigen`, or ``None`` when the
    adjoint of ``u`` does not act on ``span{v, w}`` in either normal form.
    """
    basis = rq.from_columns((u, v, w))
    if rq.rank(basis) < 3:
        raise SingularBasis("u, v, w are linearly dependent")
    inv = rq.inverse(basis)
    u1, a, b = rq.matvec(inv, bracket(g, u, v))
    u2, c, d = rq.matvec(inv, bracket(g, u, w))
    if u1 or u2 or a != d:
        return None
    if b == 0 and c == 0:
        return RealEigen(a)
    if c == -b:
        return ComplexPair(a, b)
    return None


def build_product_j(g, t):
    """Complex structure on ``g x g`` with ``Ju = u*``, ``Jv = w``, ``Jv* = w*``.

    Together with ``J^2 = -1`` this fixes ``J`` on the basis
    ``{u, v, w, u*, v*, w*}``; the result is returned in the standard basis of
    the product.
    """
    if g.dim != 3:
        raise DimensionMismatch("build_product_j expects a 3-dimensional algebra")
    if rq.rank(t.basis_matrix()) < 3:
        raise SingularBasis("u, v, w are linearly dependent")
    if not validate_jordan_triple(g, t):
        raise InvalidJordanTriple("bracket relations of the Jordan triple do not hold")
    zero = (rq.ZERO,) * 3
    cols = [u + zero for u in (t.u, t.v, t.w)] + [zero + u for u in (t.u, t.v, t.w)]
    p = rq.from_columns(cols)
    # images of the adapted basis, in adapted coordinates
    # u -> u*, v -> w, w -> -v, u* -> -u, v* -> w*, w* -> -v*
    images = ((3, 1), (2, 1), (1, -1), (0, -1), (5, 1), (4, -1))
    j_adapted = [[rq.ZERO] * 6 for _ in range(6)]
    for col, (row, sign) in enumerate(images):
        j_adapted[row][col] = Fraction(sign)
    m = rq.matmul(rq.matmul(p, tuple(map(tuple, j_adapted))), rq.inverse(p))
    return Endomorphism(m)


def _e(i):
    return rq.unit(3, i - 1)


# Adapted bases, 1-based basis labels, with the case data derived from the
# brackets (tests re-derive each entry with derive_jordan_case).
_STANDARD = {
    1: ((1, 2, 3), lambda th: RealEigen(0)),
    2: ((3, 1, 2), lambda th: RealEigen(0)),
    3: ((3, 1, 2), lambda th: RealEigen(0)),
    4: ((3, 1, 2), lambda th: RealEigen(-1)),
    6: ((3, 1, 2), lambda th: ComplexPair(-th, 1)),
    7: ((2, 1, 3), lambda th: ComplexPair(0, -1)),
    8: ((3, 1, 2), lambda th: ComplexPair(0, 1)),
}

EXISTENCE_TYPES = (1, 2, 3, 4, 6, 7, 8)


def standard_triple(spec):
    if isinstance(spec, int):
        spec = BianchiSpec(spec)
    t = spec.type_id
    if t == 5:
        raise NoKnownStructure(
            "type (5): g x g carries no integrable complex structure"
        )
    if t == 4 and spec.theta != 1:
        raise NoKnownStructure(
            f"type (4) with theta={rq.format_scalar(spec.theta)}: g x g carries no "
            "integrable complex structure (only theta = 1 does)"
        )
    (iu, iv, iw), case = _STANDARD[t]
    return JordanTriple(_e(iu), _e(iv), _e(iw), case(spec.theta))


def standard_structure(spec):
    """``(g x g, J)`` for every type admitting an integrable complex structure."""
    if isinstance(spec, int):
        spec = BianchiSpec(spec)
    triple = standard_triple(spec)
    g = bianchi(spec)
    return direct_product(g, g), build_product_j(g, triple)


def orthogonal_index(n):
    """Lexicographic list of 1-based pairs ``(i, j)``, ``i < j``, indexing ``o(n)``."""
    return list(combinations(range(1, n + 1), 2))


def _check_n(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidN(f"n must be an integer >= 2, got {n!r}")


def _elementary(n, i, j):
    m = [[0] * n for _ in range(n)]
    m[i - 1][j - 1] = 1
    m[j - 1][i - 1] = -1
    return m


def _commutator(a, b):
    n = len(a)
    ab = [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
    ba = [[sum(b[r][k] * a[k][c] for k in range(n)) for c in range(n)] for r in range(n)]
    return [[ab[r][c] - ba[r][c] for c in range(n)] for r in range(n)]


def orthogonal_algebra(n):
    """``o(n)`` in the basis ``e_ij = E_ij - E_ji`` (``i < j``, lexicographic).

    Structure constants come from matrix commutators: the coefficient of
    ``e_ij`` in an antisymmetric matrix is its ``(i, j)`` entry.
    """
    _check_n(n)
    index = orthogonal_index(n)
    mats = [_elementary(n, i, j) for i, j in index]
    entries = []
    for a, b in combinations(range(len(index)), 2):
        comm = _commutator(mats[a], mats[b])
        for k, (i, j) in enumerate(index):
            if comm[i - 1][j - 1]:
                entries.append((a, b, k, comm[i - 1][j - 1]))
    labels = [_label(i, j, n) for i, j in index]
    return new_lie_algebra(len(index), entries, name=f"o({n})", labels=labels)


def _label(i, j, n):
    return f"e{i}{j}" if n < 10 else f"e{i},{j}"


def orthogonal_pairing(n):
    """Integrable complex structure on ``o(n) x o(n)``.

    Indices pair up as (1,2), (3,4), ...; ``e_ij`` belongs to the block of
    ``i``. With ``i`` odd: ``e_i(i+1)`` maps to its starred copy, and
    ``e_ij -> e_(i+1)j`` for ``j > i+1``, in both factors. Minus signs on the
    partners follow from ``J^2 = -1``. For odd ``n`` the index ``n`` is never a
    block leader, so ``e_(n-2)n -> e_(n-1)n`` closes the scheme.
    """
    _check_n(n)
    index = orthogonal_index(n)
    pos = {p: k for k, p in enumerate(index)}
    d = len(index)
    m = [[rq.ZERO] * (2 * d) for _ in range(2 * d)]
    for (i, j), k in pos.items():
        if i % 2 == 1 and j == i + 1:
            m[d + k][k] = rq.ONE
            m[k][d + k] = -rq.ONE
        elif i % 2 == 1:
            partner = pos[i + 1, j]
            for shift in (0, d):
                m[shift + partner][shift + k] = rq.ONE
                m[shift + k][shift + partner] = -rq.ONE
    return Endomorphism(tuple(map(tuple, m)))


def orthogonal_product(n):
    g = orthogonal_algebra(n)
    return direct_product(g, g, name=f"o({n}) x o({n})")
