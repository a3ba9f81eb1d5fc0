"""Record empirical residual floors for the algebras without integrable structures.

Independent of the regression runs: a different seed and ten times as many
starts, same iteration budget. The numbers corroborate non-existence; they do
not prove it. Writes tests/data/nonexistence_floors.json.

    python scripts/record_floors.py [--starts 5000] [--seed 20240601]
"""

import argparse
import json
import time
from pathlib import Path

from liecx import kernels
from liecx.constructions import BianchiSpec, bianchi
from liecx.lie_core import direct_product
from liecx.search import SearchConfig, numeric_search

CASES = [("5", BianchiSpec(5)), ("4:2", BianchiSpec(4, 2)), ("4:1/2", BianchiSpec(4, "1/2")), ("4:-1", BianchiSpec(4, -1))]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--starts", type=int, default=5000)
    parser.add_argument("--seed", type=int, default=20240601)
    parser.add_argument("--max-iters", type=int, default=500)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parents[1] / "tests" / "data" / "nonexistence_floors.json",
    )
    args = parser.parse_args()

    record = {
        "note": "empirical minima of the search objective; corroboration only, not a proof of non-existence",
        "backend": kernels.backend(),
        "starts": args.starts,
        "seed": args.seed,
        "max_iters": args.max_iters,
        "floors": {},
    }
    for key, spec in CASES:
        g = bianchi(spec)
        t0 = time.perf_counter()
        res = numeric_search(direct_product(g, g), SearchConfig(starts=args.starts, seed=args.seed, max_iters=args.max_iters))
        elapsed = time.perf_counter() - t0
        record["floors"][key] = {
            "floor": res.best_residual,
            "converged_starts": res.converged_starts,
            "seconds": round(elapsed, 1),
        }
        print(f"type {key:6s} floor={res.best_residual:.6e} converged={res.converged_starts} ({elapsed:.1f}s)", flush=True)
    args.out.write_text(json.dumps(record, indent=2) + "\n")


if __name__ == "__main__":
    main()
