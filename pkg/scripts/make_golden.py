"""Regenerate tests/data/golden_type4_theta2.txt from a hand transcription.

The nine g-part equations of N(u,e1), N(u,e2), N(e1,e2) for type (4) in the
adapted basis {u, e1, e2}, u = e3, with J e1 = X u + Y e1 + Z e2 and
J e2 = A u + B e1 + C e2, are expanded with sympy and rendered in the text
format of ``liecx emit``. This script does not import liecx.

    python scripts/make_golden.py [theta]
"""

import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

lam, X, Y, Z, A, B, C = sp.symbols("lambda X Y Z A B C")
# unknown index of each letter in the 6x6 matrix (row-major)
INDEX = {lam: 0, X: 1, A: 2, Y: 7, B: 8, Z: 13, C: 14}


def equations(th):
    return [
        ("N(u,e1)", "u", -lam * X - X * Y - Z * th * A),
        ("N(u,e1)", "e1", -1 - lam * Y - Y**2 - Z * th * B + lam * Y),
        ("N(u,e1)", "e2", -lam * Z - Y * Z - Z * th * C + lam * Z * th),
        ("N(u,e2)", "u", -lam * th * A - X * B - C * th * A),
        ("N(u,e2)", "e1", -lam * th * B - B * Y - C * th * B + lam * B),
        ("N(u,e2)", "e2", -th - lam * th * C - B * Z - C**2 * th + lam * C * th),
        ("N(e1,e2)", "u", -X * A * th + A * X),
        ("N(e1,e2)", "e1", -X * th * B + A * Y + X * B - A * Y),
        ("N(e1,e2)", "e2", -X * th * C + A * Z + X * th * C - A * Z * th),
    ]


def render(expr):
    poly = sp.Poly(sp.expand(expr), *INDEX)
    terms = []
    for powers, coef in poly.terms():
        mono = []
        for sym, p in zip(INDEX, powers):
            mono += [INDEX[sym]] * p
        terms.append((Fraction(int(coef.p), int(coef.q)), tuple(sorted(mono))))
    terms.sort(key=lambda t: (-len(t[1]), t[1]))
    names = {i: str(s) for s, i in INDEX.items()}
    parts = []
    for n, (coef, mono) in enumerate(terms):
        body = " * ".join([str(abs(coef))] + [names[i] for i in mono])
        if n == 0:
            parts.append(body if coef > 0 else "-" + body)
        else:
            parts.append(("+ " if coef > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def main():
    th = sp.Rational(sys.argv[1]) if len(sys.argv) > 1 else sp.Integer(2)
    lines = [f"{pair}[{comp}]: {render(expr)}" for pair, comp, expr in equations(th)]
    out = Path(__file__).resolve().parents[1] / "tests" / "data" / f"golden_type4_theta{th}.txt".replace("/", "_")
    out.write_text("\n".join(lines) + "\n")
    print(out.read_text(), end="")


if __name__ == "__main__":
    main()
