"""Multistart Levenberg-Marquardt search for integrable complex structures.

The objective is ``F(J) = ||J^2 + I||_F^2 + sum_{a<b} ||N(e_a, e_b)||^2``,
a quartic in the entries of ``J`` that vanishes exactly on integrable complex
structures. A search that drives ``F`` to zero is evidence of existence and
can be turned into a certificate by :func:`rationalize_and_certify`; a search
that stalls above zero is only corroboration of non-existence.
"""

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .complex_structures import Endomorphism, is_complex_structure, is_integrable
from .errors import DimensionMismatch

__all__ = [
    "SearchConfig",
    "SearchResult",
    "residual_and_gradient",
    "numeric_search",
    "snap_rational",
    "rationalize",
    "rationalize_and_certify",
    "default_threads",
]

DEFAULT_SEED = 42


@dataclass(frozen=True)
class SearchConfig:
    starts: int = 100
    seed: int = DEFAULT_SEED
    max_iters: int = 500
    tol: float = 1e-12
    init_range: float = 2.0
    mu0: float = 1e-3
    mu_up: float = 10.0
    mu_down: float = 0.1
    mu_max: float = 1e16
    threads: int = 1

    def __post_init__(self):
        if self.starts < 1:
            raise ValueError("starts must be >= 1")
        if self.max_iters < 0 or self.tol < 0 or self.init_range <= 0:
            raise ValueError("max_iters, tol must be >= 0 and init_range > 0")


@dataclass
class SearchResult:
    best_residual: float
    best_matrix: Endomorphism
    starts: int
    converged_starts: int
    seed: int
    per_start_residuals: list
    per_start_iterations: list = field(default_factory=list)
    best_start: int = 0
    points: np.ndarray | None = field(default=None, repr=False)

    def converged_indices(self, tol):
        """Start indices with residual <= tol, best first (ties by index)."""
        res = np.asarray(self.per_start_residuals)
        idx = np.flatnonzero(res <= tol)
        return [int(i) for i in idx[np.argsort(res[idx], kind="stable")]]

    def matrix(self, start):
        d = self.best_matrix.dim
        return Endomorphism(self.points[start].reshape(d, d).tolist())

    def to_dict(self):
        return {
            "best_residual": self.best_residual,
            "best_start": self.best_start,
            "best_matrix": {"dim": self.best_matrix.dim, "rows": [list(r) for r in self.best_matrix.m]},
            "starts": self.starts,
            "converged_starts": self.converged_starts,
            "seed": self.seed,
            "per_start_residuals": list(self.per_start_residuals),
            "per_start_iterations": list(self.per_start_iterations),
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def _structure(g):
    return np.ascontiguousarray(g.structure_array, dtype=np.float64)


def residual_and_gradient(g, x):
    """``(F(x), grad F(x))`` for the flattened (row-major) matrix ``x``."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.dim * g.dim,):
        raise DimensionMismatch(f"expected {g.dim * g.dim} entries, got shape {x.shape}")
    r, jac = kernels.residual_jacobian(_structure(g), np.ascontiguousarray(x))
    return float(r @ r), 2.0 * (jac.T @ r)


def default_threads():
    try:
        return max(1, int(os.environ.get("LIE_CX_THREADS", "1")))
    except ValueError:
        return 1


def _run_lm(c, x0, free, cfg, max_iters=None):
    return kernels.lm(
        c,
        x0,
        free,
        cfg.max_iters if max_iters is None else max_iters,
        cfg.tol,
        cfg.mu0,
        cfg.mu_up,
        cfg.mu_down,
        cfg.mu_max,
    )


def numeric_search(g, config=None, **overrides):
    """Run ``config.starts`` independent LM descents from seeded uniform starts.

    Start ``s`` uses the ``s``-th row of one ``(starts, d*d)`` draw from
    ``numpy.random.default_rng(seed)``, so the outcome does not depend on
    thread scheduling. Ties for the best residual go to the lowest index.
    """
    cfg = config or SearchConfig()
    if overrides:
        cfg = SearchConfig(**{**asdict(cfg), **overrides})
    d = g.dim
    n = d * d
    c = _structure(g)
    rng = np.random.default_rng(cfg.seed)
    x0 = rng.uniform(-cfg.init_range, cfg.init_range, size=(cfg.starts, n))
    free = np.arange(n, dtype=np.int64)

    def one(s):
        return _run_lm(c, x0[s], free, cfg)

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            outcomes = list(pool.map(one, range(cfg.starts)))
    else:
        outcomes = [one(s) for s in range(cfg.starts)]

    points = np.array([o[0] for o in outcomes])
    residuals = [float(o[1]) for o in outcomes]
    iterations = [int(o[2]) for o in outcomes]
    best = int(np.argmin(residuals))
    return SearchResult(
        best_residual=residuals[best],
        best_matrix=Endomorphism(points[best].reshape(d, d).tolist()),
        starts=cfg.starts,
        converged_starts=sum(r <= cfg.tol for r in residuals),
        seed=cfg.seed,
        per_start_residuals=residuals,
        per_start_iterations=iterations,
        best_start=best,
        points=points,
    )


def _nearest(value, denominators):
    best = None
    for q in denominators:
        cand = Fraction(round(value * q), q)
        dist = abs(value - float(cand))
        if best is None or dist < best[0]:
            best = (dist, cand)
    return best


def snap_rational(g, x, config=None, denominators=(1, 2), max_candidates=None):
    """Move a converged point onto a nearby zero with simple rational entries.

    Entries are pinned one at a time to the nearest fraction with a small
    denominator, closest first; after each pin the remaining entries are
    re-solved by LM. A pin is kept only if the residual stays within
    ``config.tol``. Integers are tried on every entry before halves (and so on
    through ``denominators``), since an early pin to ``1/2`` tends to force
    irrational partners like ``sqrt(3)/2``. Returns ``(x, pinned_mask)``;
    entries that could not be pinned keep their float values.
    """
    cfg = config or SearchConfig()
    c = _structure(g)
    x = np.array(x, dtype=np.float64).ravel()
    pinned = np.zeros(x.size, dtype=bool)
    stages = [tuple(q for q in denominators if q <= top) for top in sorted(denominators)]
    for dens in stages:
        while not pinned.all():
            cands = sorted(
                ((*_nearest(x[i], dens), int(i)) for i in np.flatnonzero(~pinned)),
                key=lambda t: (t[0], t[2]),
            )
            if max_candidates is not None:
                cands = cands[:max_candidates]
            for _, target, i in cands:
                trial = x.copy()
                trial[i] = float(target)
                mask = pinned.copy()
                mask[i] = True
                free = np.flatnonzero(~mask).astype(np.int64)
                xr, f, _ = _run_lm(c, trial, free, cfg, max_iters=max(cfg.max_iters, 200))
                if f <= cfg.tol:
                    x, pinned = xr, mask
                    break
            else:
                break
    return x, pinned


def rationalize(J_num, max_denominator):
    """Round every entry to the closest fraction with denominator <= max_denominator."""
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    return Endomorphism(
        tuple(
            tuple(Fraction(float(v)).limit_denominator(max_denominator) for v in row)
            for row in J_num.m
        )
    )


def rationalize_and_certify(g, J_num, max_denominator):
    """Exact integrable complex structure near ``J_num``, or ``None``.

    The rounded matrix is returned only when ``J^2 = -1`` and ``N = 0`` hold
    in exact arithmetic.
    """
    J = rationalize(J_num, max_denominator)
    if J.dim != g.dim or not is_complex_structure(J):
        return None
    return J if is_integrable(g, J).integrable else None
