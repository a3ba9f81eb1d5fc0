"""Endomorphisms, the Nijenhuis tensor and integrability checks.

For an endomorphism ``J`` of a Lie algebra,

    N(v, w) = [v, w] + J[Jv, w] + J[v, Jw] - [Jv, Jw].

``J`` is an integrable complex structure when ``J^2 = -1`` and ``N`` vanishes.
``N`` is bilinear and antisymmetric, so it is enough to evaluate it on pairs of
basis vectors ``e_a, e_b`` with ``a < b``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import rational as rq
from .errors import DimensionMismatch, NotAComplexStructure, NotSquare
from .lie_core import bracket

__all__ = [
    "Endomorphism",
    "IntegrabilityReport",
    "new_endomorphism",
    "is_complex_structure",
    "nijenhuis",
    "is_integrable",
    "quasi_invariant_vectors",
    "split_parts",
    "NUMERIC_TOL",
]

NUMERIC_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Endomorphism:
    """Square matrix acting on column vectors; exact or float entries, never mixed."""

    m: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.m)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            cols = {len(r) for r in rows}
            raise NotSquare(f"expected a square matrix, got {n} rows with lengths {sorted(cols)}")
        if all(rq.is_exact(x) or isinstance(x, str) for r in rows for x in r):
            rows = tuple(tuple(rq.scalar(x) for x in r) for r in rows)
            exact = True
        else:
            rows = tuple(tuple(float(x) for x in r) for r in rows)
            exact = False
        object.__setattr__(self, "m", rows)
        object.__setattr__(self, "exact", exact)
        cols = []
        for j in range(n):
            cols.append(tuple((i, rows[i][j]) for i in range(n) if rows[i][j]))
        object.__setattr__(self, "_cols", tuple(cols))

    @property
    def dim(self):
        return len(self.m)

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        kind = "exact" if self.exact else "float"
        return f"<Endomorphism dim={self.dim} {kind}>"

    def apply(self, v):
        n = self.dim
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} for a {n}x{n} matrix")
        zero = rq.ZERO if self.exact else 0.0
        if v:
            zero = zero + v[0] * 0
        out = [zero] * n
        for j, a in enumerate(v):
            if a:
                for i, x in self._cols[j]:
                    out[i] += x * a
        return tuple(out)

    def __matmul__(self, other):
        if isinstance(other, Endomorphism):
            return Endomorphism(rq.matmul(self.m, other.m))
        return self.apply(other)

    def square(self):
        return rq.matmul(self.m, self.m)

    def to_array(self):
        return np.array([[float(x) for x in row] for row in self.m])


def new_endomorphism(m):
    return Endomorphism(m)


def is_complex_structure(J, tol=NUMERIC_TOL):
    """``J^2 = -1``: exactly for rational entries, to ``tol`` (max entry) for floats."""
    sq = J.square()
    n = J.dim
    if J.exact:
        return all(sq[i][j] == (-1 if i == j else 0) for i in range(n) for j in range(n))
    err = max(abs(sq[i][j] + (1.0 if i == j else 0.0)) for i in range(n) for j in range(n))
    return err <= tol


def nijenhuis(g, J, v, w):
    """Evaluate the four-term Nijenhuis expression; ``J^2 = -1`` is not assumed."""
    if J.dim != g.dim:
        raise DimensionMismatch(f"{J.dim}x{J.dim} endomorphism on a {g.dim}-dim algebra")
    if len(v) != g.dim or len(w) != g.dim:
        raise DimensionMismatch("vector length differs from the algebra dimension")
    jv = J.apply(v)
    jw = J.apply(w)
    out = bracket(g, v, w)
    out = rq.vadd(out, J.apply(bracket(g, jv, w)))
    out = rq.vadd(out, J.apply(bracket(g, v, jw)))
    return rq.vsub(out, bracket(g, jv, jw))


@dataclass(frozen=True)
class IntegrabilityReport:
    """Nijenhuis values on every basis pair ``a < b`` (0-based) and the verdict."""

    pairs: tuple
    integrable: bool
    max_residual_norm: object
    exact: bool = True

    def nonzero_pairs(self, tol=0):
        return [(a, b, val) for a, b, val in self.pairs if rq.max_abs(val) > tol]

    @property
    def first_failure(self):
        bad = self.nonzero_pairs(0 if self.exact else NUMERIC_TOL)
        return bad[0] if bad else None


def is_integrable(g, J, tol=NUMERIC_TOL):
    """Evaluate ``N(e_a, e_b)`` on all ``a < b``.

    By bilinearity and antisymmetry these pairs determine ``N`` completely, so
    the verdict covers all ``v, w``. ``tol`` applies only to float matrices.
    """
    if J.dim != g.dim:
        raise DimensionMismatch(f"{J.dim}x{J.dim} endomorphism on a {g.dim}-dim algebra")
    if not is_complex_structure(J, tol):
        raise NotAComplexStructure("J^2 != -1")
    d = g.dim
    one = rq.ONE if J.exact else 1.0
    basis = [rq.unit(d, i, one) for i in range(d)]
    pairs = []
    worst = rq.ZERO if J.exact else 0.0
    for a, b in combinations(range(d), 2):
        val = nijenhuis(g, J, basis[a], basis[b])
        pairs.append((a, b, val))
        norm = rq.max_abs(val)
        if norm > worst:
            worst = norm
    integrable = worst == 0 if J.exact else worst <= tol
    return IntegrabilityReport(tuple(pairs), integrable, worst, exact=J.exact)


def split_parts(J, split_dim):
    """Blocks ``(J_part, Jstar_part)`` describing ``J`` on the first factor.

    For ``v`` in the span of the first ``split_dim`` basis vectors,
    ``J v = (J_part v, Jstar_part v)``.
    """
    if J.dim != 2 * split_dim:
        raise DimensionMismatch(f"{J.dim}-dim endomorphism does not split as 2 x {split_dim}")
    top = tuple(row[:split_dim] for row in J.m[:split_dim])
    bottom = tuple(row[:split_dim] for row in J.m[split_dim:])
    return top, bottom


def quasi_invariant_vectors(J, split_dim, tol=1e-7):
    """Real eigenpairs of the first-factor block of ``J``.

    Each returned vector ``u`` satisfies ``J u = lam * u + (something in the
    second factor)``. Vectors are unit length with first nonzero coordinate
    positive; a repeated eigenvalue yields a reduced-echelon basis of its
    eigenspace, so the output is reproducible. Float computation only.
    """
    block = np.array(split_parts(J, split_dim)[0], dtype=float)
    n = split_dim
    scale = max(1.0, float(np.abs(block).max()))
    eigvals = np.linalg.eigvals(block)
    real = sorted(float(ev.real) for ev in eigvals if abs(ev.imag) <= tol * scale)
    clusters = []
    for lam in real:
        if clusters and abs(lam - clusters[-1][-1]) <= tol * scale:
            clusters[-1].append(lam)
        else:
            clusters.append([lam])

    out = []
    for cluster in clusters:
        lam = float(np.mean(cluster))
        if abs(lam) <= tol * scale:
            lam = 0.0
        shifted = block - lam * np.eye(n)
        _, s, vt = np.linalg.svd(shifted)
        null = vt[s <= tol * scale * max(1.0, np.sqrt(n))]
        if null.shape[0] == 0:
            null = vt[-1:]
        for vec in _echelon_rows(null):
            out.append((lam, _normalize(vec)))
    return out


def _echelon_rows(rows, tol=1e-10):
    """Reduced row echelon form of a full-rank row set spanning a subspace."""
    a = np.array(rows, dtype=float)
    r = 0
    for col in range(a.shape[1]):
        if r == a.shape[0]:
            break
        piv = r + int(np.argmax(np.abs(a[r:, col])))
        if abs(a[piv, col]) <= tol:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] /= a[r, col]
        for k in range(a.shape[0]):
            if k != r:
                a[k] -= a[k, col] * a[r]
        r += 1
    return a[:r]


def _normalize(vec):
    vec = np.asarray(vec, dtype=float)
    vec = vec / np.linalg.norm(vec)
    vec[np.abs(vec) < 1e-14] = 0.0
    nz = np.flatnonzero(np.abs(vec) > 1e-12)
    if nz.size and vec[nz[0]] < 0:
        vec = -vec
    return tuple(float(x) + 0.0 for x in vec)


def endomorphism_from_columns(columns):
    """Matrix whose ``j``-th column is ``columns[j]``."""
    return Endomorphism(rq.from_columns(columns))


def as_exact(J):
    """Exact copy of a float matrix whose entries are exactly representable."""
    return Endomorphism(tuple(tuple(Fraction(x) for x in row) for row in J.m))
