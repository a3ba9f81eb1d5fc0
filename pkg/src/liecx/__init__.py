"""Integrable complex structures on real Lie algebras, checked in exact arithmetic."""

from .complex_structures import (
    Endomorphism,
    IntegrabilityReport,
    is_complex_structure,
    is_integrable,
    new_endomorphism,
    nijenhuis,
    quasi_invariant_vectors,
    split_parts,
)
from .constructions import (
    EXISTENCE_TYPES,
    BianchiSpec,
    ComplexPair,
    JordanTriple,
    RealEigen,
    bianchi,
    build_product_j,
    catalog_specs,
    derive_jordan_case,
    orthogonal_algebra,
    orthogonal_pairing,
    orthogonal_product,
    standard_structure,
    standard_triple,
    validate_jordan_triple,
)
from .errors import (
    AntisymmetryViolation,
    DimensionMismatch,
    InconsistentFixing,
    IndexOutOfRange,
    InvalidJordanTriple,
    InvalidN,
    JacobiViolation,
    LieCxError,
    NoKnownStructure,
    NotAComplexStructure,
    NotSquare,
    SingularBasis,
    SingularMatrix,
    ThetaForbidden,
    ThetaRequired,
    ThetaZero,
)
from .lie_core import (
    LieAlgebra,
    adjoint_matrix,
    bracket,
    change_of_basis,
    direct_product,
    jacobi_residual,
    new_lie_algebra,
)
from .polysys import PolynomialSystem, adapted_setup, emit_polynomial_system
from .search import (
    SearchConfig,
    SearchResult,
    numeric_search,
    rationalize_and_certify,
    residual_and_gradient,
    snap_rational,
)

__version__ = "0.1.0"

__all__ = [
    "AntisymmetryViolation",
    "BianchiSpec",
    "ComplexPair",
    "DimensionMismatch",
    "EXISTENCE_TYPES",
    "Endomorphism",
    "InconsistentFixing",
    "IndexOutOfRange",
    "IntegrabilityReport",
    "InvalidJordanTriple",
    "InvalidN",
    "JacobiViolation",
    "JordanTriple",
    "LieAlgebra",
    "LieCxError",
    "NoKnownStructure",
    "NotAComplexStructure",
    "NotSquare",
    "PolynomialSystem",
    "RealEigen",
    "SearchConfig",
    "SearchResult",
    "SingularBasis",
    "SingularMatrix",
    "ThetaForbidden",
    "ThetaRequired",
    "ThetaZero",
    "adapted_setup",
    "adjoint_matrix",
    "bianchi",
    "bracket",
    "build_product_j",
    "catalog_specs",
    "change_of_basis",
    "derive_jordan_case",
    "direct_product",
    "emit_polynomial_system",
    "is_complex_structure",
    "is_integrable",
    "jacobi_residual",
    "new_endomorphism",
    "new_lie_algebra",
    "nijenhuis",
    "numeric_search",
    "orthogonal_algebra",
    "orthogonal_pairing",
    "orthogonal_product",
    "quasi_invariant_vectors",
    "rationalize_and_certify",
    "residual_and_gradient",
    "snap_rational",
    "split_parts",
    "standard_structure",
    "standard_triple",
    "validate_jordan_triple",
]
