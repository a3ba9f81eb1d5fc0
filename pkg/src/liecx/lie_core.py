"""Real Lie algebras given by exact structure constants.

Basis indices are 0-based here. ``c[i][j][k]`` is the coefficient of ``e_k`` in
``[e_i, e_j]``. Vectors are plain tuples of coordinates in the standard basis.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from . import rational as rq
from .errors import (
    AntisymmetryViolation,
    DimensionMismatch,
    IndexOutOfRange,
    JacobiViolation,
)

__all__ = [
    "LieAlgebra",
    "new_lie_algebra",
    "bracket",
    "direct_product",
    "adjoint_matrix",
    "change_of_basis",
    "jacobi_defect",
    "jacobi_residual",
    "antisymmetry_residual",
    "basis_vector",
]


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Finite-dimensional real Lie algebra.

    Construction validates antisymmetry and the Jacobi identity; an instance
    that exists is a Lie algebra.
    """

    dim: int
    c: tuple
    name: str | None = None
    labels: tuple | None = field(default=None)

    def __post_init__(self):
        d = self.dim
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"dimension must be a positive integer, got {d!r}")
        c = _freeze_tensor(self.c, d)
        object.__setattr__(self, "c", c)
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(f"e{i + 1}" for i in range(d)))
        else:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != d:
                raise DimensionMismatch(f"{len(labels)} labels for dimension {d}")
            object.__setattr__(self, "labels", labels)

        table = {}
        for i in range(d):
            for j in range(d):
                nz = tuple((k, x) for k, x in enumerate(c[i][j]) if x)
                if i == j:
                    if nz:
                        raise AntisymmetryViolation(f"[e{i + 1}, e{i + 1}] is nonzero")
                    continue
                if j < i and any(c[i][j][k] != -c[j][i][k] for k in range(d)):
                    raise AntisymmetryViolation(
                        f"[e{i + 1}, e{j + 1}] != -[e{j + 1}, e{i + 1}]"
                    )
                if nz:
                    table[i, j] = nz
        object.__setattr__(self, "_table", table)

        bad = jacobi_defect(self)
        if bad is not None:
            raise JacobiViolation(*bad)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.c == other.c

    def __hash__(self):
        return hash((self.dim, self.c))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<LieAlgebra{label} dim={self.dim} nonzero_brackets={len(self._table) // 2}>"

    @property
    def is_abelian(self):
        return not self._table

    def nonzero_brackets(self):
        """Yield ``(i, j, ((k, c_ijk), ...))`` for ``i < j`` with a nonzero bracket."""
        for (i, j), terms in sorted(self._table.items()):
            if i < j:
                yield i, j, terms

    @cached_property
    def structure_array(self):
        """Float copy of the structure constants, shape ``(d, d, d)``, read-only."""
        arr = np.zeros((self.dim,) * 3)
        for (i, j), terms in self._table.items():
            for k, x in terms:
                arr[i, j, k] = float(x)
        arr.flags.writeable = False
        return arr


def _freeze_tensor(c, d):
    if len(c) != d:
        raise DimensionMismatch(f"structure tensor has {len(c)} slices for dimension {d}")
    out = []
    for i, plane in enumerate(c):
        if len(plane) != d:
            raise DimensionMismatch(f"c[{i}] has {len(plane)} rows, expected {d}")
        rows = []
        for j, row in enumerate(plane):
            if len(row) != d:
                raise DimensionMismatch(f"c[{i}][{j}] has length {len(row)}, expected {d}")
            rows.append(tuple(rq.scalar(x) for x in row))
        out.append(tuple(rows))
    return tuple(out)


def _zero_tensor(d):
    return [[[rq.ZERO] * d for _ in range(d)] for _ in range(d)]


def new_lie_algebra(dim, entries=(), name=None, labels=None):
    """Build an algebra from sparse entries ``(i, j, k, value)``.

    Each entry sets ``c_ij^k``; the transposed coefficient is filled in by
    antisymmetry. Entries with ``i > j`` are accepted and mirrored.
    """
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"dimension must be a positive integer, got {dim!r}")
    c = _zero_tensor(dim)
    seen = {}
    for entry in entries:
        i, j, k, value = entry
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 0 <= idx < dim:
                raise IndexOutOfRange(f"index {idx!r} outside [0, {dim})")
        value = rq.scalar(value)
        if i == j:
            if value:
                raise AntisymmetryViolation(f"[e{i + 1}, e{i + 1}] must vanish")
            continue
        if i > j:
            i, j, value = j, i, -value
        if seen.get((i, j, k), value) != value:
            raise AntisymmetryViolation(f"conflicting values for c[{i}][{j}][{k}]")
        seen[i, j, k] = value
        c[i][j][k] = value
        c[j][i][k] = -value
    return LieAlgebra(dim, c, name=name, labels=labels)


def basis_vector(g_or_dim, i):
    d = g_or_dim if isinstance(g_or_dim, int) else g_or_dim.dim
    return rq.unit(d, i)


def _zero_like(x, y):
    if x and y:
        return x[0] * 0 + y[0] * 0
    return rq.ZERO


def bracket(g, x, y):
    """``[x, y] = sum_ij x_i y_j c_ij^k e_k``; works for exact and float coordinates."""
    d = g.dim
    if len(x) != d or len(y) != d:
        raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} in a {d}-dim algebra")
    out = [_zero_like(x, y)] * d
    ys = [(j, b) for j, b in enumerate(y) if b]
    table = g._table
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in ys:
            terms = table.get((i, j))
            if terms:
                ab = a * b
                for k, ck in terms:
                    out[k] += ab * ck
    return tuple(out)


def jacobi_defect(g):
    """First triple ``i<j<k`` whose cyclic Jacobi sum is nonzero, or ``None``."""
    for triple, res in _jacobi_sums(g):
        if any(res):
            return triple, res
    return None


def jacobi_residual(g):
    """Largest absolute coordinate over all cyclic Jacobi sums (exact)."""
    return max((rq.max_abs(res) for _, res in _jacobi_sums(g)), default=rq.ZERO)


def antisymmetry_residual(g):
    d = g.dim
    return rq.max_abs(
        g.c[i][j][k] + g.c[j][i][k] for i in range(d) for j in range(d) for k in range(d)
    )


def _jacobi_sums(g):
    d = g.dim
    table = g._table
    for i, j, k in combinations(range(d), 3):
        res = [rq.ZERO] * d
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, x in table.get((a, b), ()):
                for n, y in table.get((m, c), ()):
                    res[n] += x * y
        yield (i, j, k), tuple(res)


def direct_product(g, h, name=None):
    """``g x h`` with block-diagonal brackets; ``h`` occupies the trailing indices."""
    n, m = g.dim, h.dim
    d = n + m
    c = _zero_tensor(d)
    for (i, j), terms in g._table.items():
        for k, x in terms:
            c[i][j][k] = x
    for (i, j), terms in h._table.items():
        for k, x in terms:
            c[n + i][n + j][n + k] = x
    labels = tuple(g.labels) + tuple(s + "*" for s in h.labels)
    if name is None and g.name and h.name:
        name = f"{g.name} x {h.name}"
    return LieAlgebra(d, c, name=name, labels=labels)


def adjoint_matrix(g, u):
    """Matrix of ``[u, .]``: column ``j`` is ``[u, e_j]``."""
    d = g.dim
    if len(u) != d:
        raise DimensionMismatch(f"vector of length {len(u)} in a {d}-dim algebra")
    zero = u[0] * 0 if d else rq.ZERO
    m = [[zero] * d for _ in range(d)]
    for i, a in enumerate(u):
        if not a:
            continue
        for j in range(d):
            for k, ck in g._table.get((i, j), ()):
                m[k][j] += a * ck
    return tuple(tuple(row) for row in m)


def change_of_basis(g, p, name=None, labels=None):
    """Re-express ``g`` in the basis formed by the columns of ``p``.

    New basis vector ``f_a = sum_i p[i][a] e_i``; the returned constants
    satisfy ``[f_a, f_b] = sum_c c'_ab^c f_c``.
    """
    p = tuple(tuple(rq.scalar(x) for x in row) for row in p)
    d = rq.check_square(p)
    if d != g.dim:
        raise DimensionMismatch(f"{d}x{d} basis change for a {g.dim}-dim algebra")
    p_inv = rq.inverse(p)
    cols = [rq.column(p, a) for a in range(d)]
    c = _zero_tensor(d)
    for a in range(d):
        for b in range(a + 1, d):
            coords = rq.matvec(p_inv, bracket(g, cols[a], cols[b]))
            c[a][b] = list(coords)
            c[b][a] = [-x for x in coords]
    return LieAlgebra(d, c, name=name if name is not None else g.name, labels=labels)

