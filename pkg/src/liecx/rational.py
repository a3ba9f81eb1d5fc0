"""Small dense linear algebra over exact rationals.

Matrices are tuples of row tuples, vectors are tuples. Entries are
:class:`fractions.Fraction` in the exact profile; the same helpers work on
floats (the numeric profile) because they only use ``+ - * /``.
"""

from fractions import Fraction
from numbers import Rational

from .errors import DimensionMismatch, NotSquare, SingularMatrix

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x):
    """Coerce ``x`` to an exact rational.

    Accepts ints, Fractions and strings like ``"3"``, ``"-1/2"``. Floats are
    rejected: an exact value must not silently absorb round-off.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact scalar")


def parse_scalar(text):
    text = text.strip()
    if not text or any(ch in text for ch in ".eE"):
        raise ValueError(f"expected 'p' or 'p/q', got {text!r}")
    return Fraction(text)


def format_scalar(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_exact(x):
    return isinstance(x, Rational) and not isinstance(x, bool)


def identity(n, one=ONE):
    zero = one - one
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(n, m=None, zero=ZERO):
    m = n if m is None else m
    return tuple((zero,) * m for _ in range(n))


def shape(a):
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if any(len(r) != cols for r in a):
        raise DimensionMismatch("ragged matrix")
    return rows, cols


def check_square(a):
    rows, cols = shape(a)
    if rows != cols:
        raise NotSquare(f"matrix is {rows}x{cols}")
    return rows


def transpose(a):
    return tuple(zip(*a))


def column(a, j):
    return tuple(row[j] for row in a)


def from_columns(cols):
    return transpose(tuple(tuple(c) for c in cols))


def matmul(a, b):
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2:
        raise DimensionMismatch(f"cannot multiply {n}x{k} by {k2}x{m}")
    bt = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), a[0][0] * 0) for col in bt)
        for row in a
    )


def matvec(a, v):
    if a and len(a[0]) != len(v):
        raise DimensionMismatch(f"matrix has {len(a[0])} columns, vector has length {len(v)}")
    zero = v[0] * 0 if v else ZERO
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), zero) for row in a)


def add(a, b):
    if shape(a) != shape(b):
        raise DimensionMismatch("shape mismatch")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(s, a):
    return tuple(tuple(s * x for x in row) for row in a)


def neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def vadd(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"vectors of length {len(u)} and {len(v)}")
    return tuple(x + y for x, y in zip(u, v))


def vsub(u, v):
    if len(u) != len(v):
        raise DimensionMismatch(f"vectors of length {len(u)} and {len(v)}")
    return tuple(x - y for x, y in zip(u, v))


def vscale(s, v):
    return tuple(s * x for x in v)


def unit(n, i, one=ONE):
    zero = one - one
    return tuple(one if k == i else zero for k in range(n))


def _promote(a):
    # plain ints would turn into floats under "/"
    return [[Fraction(x) if isinstance(x, int) else x for x in row] for row in a]


def inverse(a):
    """Gauss-Jordan inverse; exact on Fractions and ints."""
    n = check_square(a)
    a = _promote(a)
    work = [list(row) + list(unit(n, i, a[0][0] * 0 + 1)) for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix("matrix is not invertible")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def rank(a):
    rows = _promote(a)
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        for r in range(rk + 1, len(rows)):
            if rows[r][col] != 0:
                f = rows[r][col] / rows[rk][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rk])]
        rk += 1
    return rk


def solve(a, b):
    """Solve ``a x = b`` for a square invertible ``a`` and vector ``b``."""
    return matvec(inverse(a), b)


def max_abs(entries):
    best = None
    for x in entries:
        ax = abs(x)
        if best is None or ax > best:
            best = ax
    return ZERO if best is None else best
