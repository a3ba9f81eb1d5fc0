"""Exception hierarchy.

Everything raised deliberately by the library derives from :class:`LieCxError`;
input-shape problems additionally derive from :class:`ValueError` so callers
that only care about "bad argument" can catch that.
"""


class LieCxError(Exception):
    pass


class IndexOutOfRange(LieCxError, ValueError):
    pass


class DimensionMismatch(LieCxError, ValueError):
    pass


class AntisymmetryViolation(LieCxError, ValueError):
    pass


class JacobiViolation(LieCxError, ValueError):
    """The bracket fails the Jacobi identity on ``triple``.

    ``residual`` is the cyclic sum ``[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]``
    in basis coordinates (0-based indices in ``triple``).
    """

    def __init__(self, triple, residual):
        self.triple = tuple(triple)
        self.residual = tuple(residual)
        i, j, k = (t + 1 for t in self.triple)
        super().__init__(
            f"Jacobi identity fails for (e{i}, e{j}, e{k}): residual {_fmt(self.residual)}"
        )


class SingularMatrix(LieCxError, ValueError):
    pass


class NotSquare(LieCxError, ValueError):
    pass


class NotAComplexStructure(LieCxError, ValueError):
    pass


class ThetaRequired(LieCxError, ValueError):
    pass


class ThetaForbidden(LieCxError, ValueError):
    pass


class ThetaZero(LieCxError, ValueError):
    pass


class InvalidJordanTriple(LieCxError, ValueError):
    pass


class SingularBasis(LieCxError, ValueError):
    pass


class InvalidN(LieCxError, ValueError):
    pass


class InconsistentFixing(LieCxError, ValueError):
    pass


class NoKnownStructure(LieCxError):
    """Raised for algebras on which no integrable complex structure exists."""


def _fmt(vec):
    return "(" + ", ".join(str(x) for x in vec) + ")"
