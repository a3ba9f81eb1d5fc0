"""JSON forms of algebras, endomorphisms and integrability reports.

Human-facing indices are 1-based. Exact scalars are strings ``"p"`` or
``"p/q"``; float matrices (search output) use JSON numbers.
"""

import json
from pathlib import Path

from . import rational as rq
from .complex_structures import NUMERIC_TOL, Endomorphism
from .lie_core import new_lie_algebra

__all__ = [
    "algebra_to_dict",
    "algebra_from_dict",
    "endomorphism_to_dict",
    "endomorphism_from_dict",
    "report_to_dict",
    "load_json",
    "ALGEBRA_SCHEMA",
    "ENDOMORPHISM_SCHEMA",
    "REPORT_SCHEMA",
    "SEARCH_RESULT_SCHEMA",
    "SYSTEM_SCHEMA",
]

_SCALAR = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["dim", "brackets"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "name": {"type": ["string", "null"]},
        "basis_labels": {"type": "array", "items": {"type": "string"}},
        "brackets": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "j", "result"],
                "properties": {
                    "i": {"type": "integer", "minimum": 1},
                    "j": {"type": "integer", "minimum": 1},
                    "result": {
                        "type": "object",
                        "patternProperties": {"^[0-9]+$": _SCALAR},
                        "additionalProperties": False,
                    },
                },
            },
        },
    },
}

ENDOMORPHISM_SCHEMA = {
    "type": "object",
    "required": ["dim", "rows"],
    "properties": {
        "dim": {"type": "integer", "minimum": 1},
        "rows": {
            "type": "array",
            "items": {"type": "array", "items": {"anyOf": [_SCALAR, {"type": "number"}]}},
        },
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["complex_structure", "integrable", "pairs_checked", "nonzero_pairs"],
    "properties": {
        "complex_structure": {"type": "boolean"},
        "integrable": {"type": "boolean"},
        "pairs_checked": {"type": "integer"},
        "max_residual_norm": {"anyOf": [_SCALAR, {"type": "number"}, {"type": "null"}]},
        "nonzero_pairs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["a", "b", "value"],
                "properties": {
                    "a": {"type": "integer"},
                    "b": {"type": "integer"},
                    "value": {"type": "object"},
                },
            },
        },
    },
}

SEARCH_RESULT_SCHEMA = {
    "type": "object",
    "required": [
        "best_residual",
        "best_matrix",
        "starts",
        "converged_starts",
        "seed",
        "per_start_residuals",
    ],
    "properties": {
        "best_residual": {"type": "number", "minimum": 0},
        "best_matrix": ENDOMORPHISM_SCHEMA,
        "starts": {"type": "integer", "minimum": 1},
        "converged_starts": {"type": "integer", "minimum": 0},
        "seed": {"type": "integer"},
        "per_start_residuals": {"type": "array", "items": {"type": "number"}},
    },
}

SYSTEM_SCHEMA = {
    "type": "object",
    "required": ["matrix_dim", "n_unknowns", "unknowns", "equations"],
    "properties": {
        "matrix_dim": {"type": "integer"},
        "n_unknowns": {"type": "integer"},
        "equations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["provenance", "terms"],
                "properties": {
                    "terms": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["coefficient", "monomial"],
                            "properties": {
                                "coefficient": _SCALAR,
                                "monomial": {
                                    "type": "array",
                                    "items": {"type": "integer"},
                                    "maxItems": 2,
                                },
                            },
                        },
                    }
                },
            },
        },
    },
}


def algebra_to_dict(g):
    brackets = []
    for i, j, terms in g.nonzero_brackets():
        brackets.append(
            {"i": i + 1, "j": j + 1, "result": {str(k + 1): rq.format_scalar(x) for k, x in terms}}
        )
    return {"dim": g.dim, "name": g.name, "basis_labels": list(g.labels), "brackets": brackets}


def algebra_from_dict(data):
    if not isinstance(data, dict) or "dim" not in data or "brackets" not in data:
        raise ValueError("algebra JSON needs 'dim' and 'brackets'")
    dim = data["dim"]
    entries = []
    for item in data["brackets"]:
        i, j = item["i"] - 1, item["j"] - 1
        for k, value in item["result"].items():
            entries.append((i, j, int(k) - 1, rq.parse_scalar(str(value))))
    return new_lie_algebra(dim, entries, name=data.get("name"), labels=data.get("basis_labels"))


def endomorphism_to_dict(J):
    if J.exact:
        rows = [[rq.format_scalar(x) for x in row] for row in J.m]
    else:
        rows = [list(row) for row in J.m]
    return {"dim": J.dim, "rows": rows}


def endomorphism_from_dict(data):
    if not isinstance(data, dict) or "rows" not in data:
        raise ValueError("endomorphism JSON needs 'rows'")
    rows = data["rows"]

    def conv(x):
        if isinstance(x, str):
            return rq.parse_scalar(x)
        if isinstance(x, bool):
            raise ValueError("booleans are not matrix entries")
        return x

    J = Endomorphism(tuple(tuple(conv(x) for x in row) for row in rows))
    if "dim" in data and data["dim"] != J.dim:
        raise ValueError(f"'dim' is {data['dim']} but the matrix is {J.dim}x{J.dim}")
    return J


def _vector_dict(vec):
    return {
        str(k + 1): (rq.format_scalar(x) if rq.is_exact(x) else float(x))
        for k, x in enumerate(vec)
        if x
    }


def report_to_dict(report, g=None, complex_structure=True):
    """Serialise an IntegrabilityReport; only nonzero pairs are listed."""
    if report is None:
        return {
            "complex_structure": complex_structure,
            "integrable": False,
            "pairs_checked": 0,
            "max_residual_norm": None,
            "nonzero_pairs": [],
        }
    labels = g.labels if g is not None else None
    pairs = []
    for a, b, val in report.nonzero_pairs(0 if report.exact else NUMERIC_TOL):
        item = {"a": a + 1, "b": b + 1, "value": _vector_dict(val)}
        if labels:
            item["labels"] = [labels[a], labels[b]]
        pairs.append(item)
    worst = report.max_residual_norm
    return {
        "complex_structure": True,
        "integrable": report.integrable,
        "pairs_checked": len(report.pairs),
        "max_residual_norm": rq.format_scalar(worst) if report.exact else float(worst),
        "nonzero_pairs": pairs,
    }


def load_json(path, key=None):
    """Read a JSON file; when ``key`` is given and present at top level, return that member."""
    data = json.loads(Path(path).read_text())
    if key is not None and isinstance(data, dict) and key in data:
        return data[key]
    return data
