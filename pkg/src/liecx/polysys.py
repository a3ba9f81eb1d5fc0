"""Integrability of an unknown matrix as an explicit polynomial system.

For a ``d``-dimensional algebra the unknowns are the ``d*d`` entries of ``J``
(index ``r*d + c`` holds ``J[r, c]``, rendered ``x_{r+1,c+1}``). The system
consists of

* ``(J^2 + I)[r, c] = 0`` for every entry, and
* ``N(e_a, e_b)[k] = 0`` for ``a < b`` and every component ``k``,

all of degree at most two. Nijenhuis equations that vanish identically for the
algebra are left out.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import rational as rq
from .errors import InconsistentFixing
from .lie_core import change_of_basis, direct_product

__all__ = [
    "Equation",
    "PolynomialSystem",
    "emit_polynomial_system",
    "adapted_setup",
    "ADAPTED_BASES",
    "ADAPTED_NAMES",
]


@dataclass(frozen=True)
class Equation:
    """``sum(coef * prod(x[i] for i in monomial)) = 0`` with a provenance tag.

    ``tag`` is ``("square_identity", row, col)`` or
    ``("nijenhuis", a, b, k)``, all 0-based.
    """

    terms: tuple
    tag: tuple

    @property
    def degree(self):
        return max((len(m) for _, m in self.terms), default=0)

    def is_zero(self):
        return not self.terms

    def evaluate(self, x):
        total = 0
        for coef, mono in self.terms:
            t = coef
            for i in mono:
                t = t * x[i]
            total = total + t
        return total

    def as_dict(self):
        return {mono: coef for coef, mono in self.terms}


def _canonical(poly):
    items = [(c, m) for m, c in poly.items() if c != 0]
    items.sort(key=lambda cm: (-len(cm[1]), cm[1]))
    return tuple(items)


@dataclass(frozen=True)
class PolynomialSystem:
    matrix_dim: int
    equations: tuple
    fixed: dict = field(default_factory=dict)

    @property
    def n_unknowns(self):
        return self.matrix_dim**2

    def position(self, index):
        return divmod(index, self.matrix_dim)

    def evaluate(self, x):
        return [eq.evaluate(x) for eq in self.equations]

    def sum_of_squares(self, x):
        return sum(v * v for v in self.evaluate(x))

    def variable_name(self, index, names=None):
        if names and index in names:
            return names[index]
        r, c = self.position(index)
        return f"x_{{{r + 1},{c + 1}}}"

    def render_equation(self, eq, names=None):
        if not eq.terms:
            return "0"
        parts = []
        for n, (coef, mono) in enumerate(eq.terms):
            factors = [self.variable_name(i, names) for i in mono]
            mag = rq.format_scalar(abs(coef))
            body = " * ".join([mag] + factors)
            if n == 0:
                parts.append(body if coef > 0 else "-" + body)
            else:
                parts.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(parts)

    def to_text(self, names=None):
        d = self.matrix_dim
        lines = [
            f"# unknowns: {self.n_unknowns} entries of a {d}x{d} matrix J",
            "# x_{r,c} = J[r,c] (1-based); unknown index = (r-1)*%d + (c-1)" % d,
        ]
        if names:
            for idx in sorted(names):
                lines.append(f"# {names[idx]} = {self.variable_name(idx)}")
        for (r, c), val in sorted(self.fixed.items()):
            lines.append(f"# fixed x_{{{r + 1},{c + 1}}} = {rq.format_scalar(val)}")
        lines.append(f"# equations: {len(self.equations)}")
        for eq in self.equations:
            lines.append(f"{self.render_equation(eq, names)} = 0    # {_tag_text(eq.tag)}")
        return "\n".join(lines) + "\n"

    def to_dict(self):
        d = self.matrix_dim
        return {
            "matrix_dim": d,
            "n_unknowns": self.n_unknowns,
            "unknowns": [
                {"index": i, "row": i // d + 1, "col": i % d + 1} for i in range(d * d)
            ],
            "fixed": [
                {"row": r + 1, "col": c + 1, "value": rq.format_scalar(v)}
                for (r, c), v in sorted(self.fixed.items())
            ],
            "equations": [
                {
                    "provenance": _tag_dict(eq.tag),
                    "terms": [
                        {"coefficient": rq.format_scalar(c), "monomial": list(m)}
                        for c, m in eq.terms
                    ],
                }
                for eq in self.equations
            ],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def _tag_text(tag):
    if tag[0] == "square_identity":
        return f"(J^2+I)[{tag[1] + 1},{tag[2] + 1}]"
    _, a, b, k = tag
    return f"N(e{a + 1},e{b + 1})[{k + 1}]"


def _tag_dict(tag):
    if tag[0] == "square_identity":
        return {"kind": "square_identity", "row": tag[1] + 1, "col": tag[2] + 1}
    _, a, b, k = tag
    return {"kind": "nijenhuis", "a": a + 1, "b": b + 1, "component": k + 1}


def _normalize_fixing(fixed, d):
    if fixed is None:
        return {}
    items = fixed.items() if hasattr(fixed, "items") else fixed
    out = {}
    for key, value in items:
        r, c = key
        if not (isinstance(r, int) and isinstance(c, int) and 0 <= r < d and 0 <= c < d):
            raise InconsistentFixing(f"entry {key!r} is outside a {d}x{d} matrix")
        value = rq.scalar(value)
        if out.get((r, c), value) != value:
            raise InconsistentFixing(f"entry ({r + 1},{c + 1}) fixed to two different values")
        out[r, c] = value
    return out


def _add(poly, mono, coef):
    mono = tuple(sorted(mono))
    poly[mono] = poly.get(mono, 0) + coef


def _substitute(poly, values):
    if not values:
        return poly
    out = {}
    for mono, coef in poly.items():
        rest = []
        for i in mono:
            if i in values:
                coef = coef * values[i]
            else:
                rest.append(i)
        _add(out, rest, coef)
    return out


def emit_polynomial_system(g, fixed=None, reduce_block=None):
    """Equations for ``J^2 = -1`` and ``N = 0`` on ``g`` in the entries of ``J``.

    ``fixed`` maps 0-based ``(row, col)`` to a rational value (a mapping or a
    sequence of pairs); those entries are substituted. ``reduce_block=m``
    keeps only the Nijenhuis equations of pairs inside the first ``m`` basis
    vectors. This is a reduction only under the assumption that those vectors
    together with their images under ``J`` span the algebra (then the other
    pairs follow from ``N(Jv, w) = -J N(v, w)``); the default keeps all pairs.
    """
    d = g.dim
    fixing = _normalize_fixing(fixed, d)
    values = {r * d + c: v for (r, c), v in fixing.items()}
    idx = lambda r, c: r * d + c  # noqa: E731
    one = Fraction(1)

    equations = []
    for r in range(d):
        for c in range(d):
            poly = {}
            for k in range(d):
                _add(poly, (idx(r, k), idx(k, c)), one)
            if r == c:
                _add(poly, (), one)
            equations.append(Equation(_canonical(_substitute(poly, values)), ("square_identity", r, c)))

    # cb[b] lists (i, m, c_ib^m); ca[a] lists (j, m, c_aj^m)
    table = g._table
    right = {b: [(i, m, x) for (i, bb), t in table.items() if bb == b for m, x in t] for b in range(d)}
    left = {a: [(j, m, x) for (aa, j), t in table.items() if aa == a for m, x in t] for a in range(d)}

    limit = d if reduce_block is None else reduce_block
    for a, b in combinations(range(limit), 2):
        polys = [dict() for _ in range(d)]
        for k in range(d):
            poly = polys[k]
            if g.c[a][b][k]:
                _add(poly, (), g.c[a][b][k])
            # J [J e_a, e_b]
            for i, m, x in right[b]:
                _add(poly, (idx(k, m), idx(i, a)), x)
            # J [e_a, J e_b]
            for j, m, x in left[a]:
                _add(poly, (idx(k, m), idx(j, b)), x)
        # -[J e_a, J e_b]
        for (i, j), terms in table.items():
            for k, x in terms:
                _add(polys[k], (idx(i, a), idx(j, b)), -x)
        for k in range(d):
            generic = _canonical(polys[k])
            if not generic:
                continue
            equations.append(
                Equation(_canonical(_substitute(polys[k], values)), ("nijenhuis", a, b, k))
            )
    return PolynomialSystem(d, tuple(equations), fixing)


# Bases {u, v, w} (columns, canonical coordinates) adapted to a quasi-invariant
# vector u = e3, as used for the non-existence arguments of types (4) and (5).
ADAPTED_BASES = {
    4: ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    5: ((0, 0, 1), (1, 0, 0), (0, -1, 0)),
}

# J u = lambda u + (g*-part), J v = X u + Y v + Z w, J w = A u + B v + C w
ADAPTED_NAMES = {
    "lambda": (0, 0),
    "X": (0, 1),
    "Y": (1, 1),
    "Z": (2, 1),
    "A": (0, 2),
    "B": (1, 2),
    "C": (2, 2),
}


def adapted_setup(g3, basis):
    """Product algebra written in ``(u, v, w, u*, v*, w*)`` plus the fixing that
    makes ``u`` quasi-invariant.

    Returns ``(product, fixed, names)`` where ``names`` maps unknown indices to
    the letters of :data:`ADAPTED_NAMES`.
    """
    u, v, w = basis
    p = rq.from_columns((u, v, w))
    h = change_of_basis(g3, p, labels=("u", "v", "w"))
    prod = direct_product(h, h)
    fixed = {(1, 0): 0, (2, 0): 0}
    d = prod.dim
    names = {r * d + c: name for name, (r, c) in ADAPTED_NAMES.items()}
    return prod, fixed, names
