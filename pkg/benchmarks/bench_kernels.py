"""Compare the numba kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 200] [--starts 20]

Both paths are imported directly (nb_* and np_*), so LIE_CX_NO_JIT does not
matter here. If numba is missing, nb_* run as plain Python loops.
"""

import argparse
import time
import timeit

import numpy as np

from liecx import kernels
from liecx.constructions import BianchiSpec, bianchi, orthogonal_product
from liecx.lie_core import direct_product


def per_call(fn, repeat):
    fn()  # compile / warm up
    return min(timeit.repeat(fn, number=repeat, repeat=3)) / repeat


def lm_batch(lm, c, x0, max_iters):
    free = np.arange(x0.shape[1], dtype=np.int64)
    for x in x0:
        lm(c, x, free, max_iters, 1e-12, 1e-3, 10.0, 0.1, 1e16)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=200)
    parser.add_argument("--starts", type=int, default=20)
    args = parser.parse_args()

    g = bianchi(BianchiSpec(4, 2))
    cases = [("type (4) theta=2 product, d=6", direct_product(g, g)), ("o(4) x o(4), d=12", orthogonal_product(4))]
    print(f"numba available: {kernels.HAVE_NUMBA}; default backend: {kernels.backend()}")
    print(f"{'case':34s} {'kernel':20s} {'numba':>12s} {'numpy':>12s} {'speedup':>8s}")
    for name, G in cases:
        c = np.ascontiguousarray(G.structure_array)
        n = G.dim * G.dim
        x = np.random.default_rng(0).uniform(-2, 2, n)
        rows = [
            ("residuals", lambda: kernels.nb_residuals(c, x), lambda: kernels.np_residuals(c, x), args.repeat),
            ("residual+jacobian", lambda: kernels.nb_residual_jacobian(c, x),
             lambda: kernels.np_residual_jacobian(c, x), args.repeat),
        ]
        for label, fa, fb, rep in rows:
            ta, tb = per_call(fa, rep), per_call(fb, rep)
            print(f"{name:34s} {label:20s} {ta * 1e6:10.1f}us {tb * 1e6:10.1f}us {tb / ta:7.1f}x")

        x0 = np.random.default_rng(1).uniform(-2, 2, (args.starts, n))
        lm_batch(kernels.nb_lm, c, x0[:1], 2)
        t0 = time.perf_counter()
        lm_batch(kernels.nb_lm, c, x0, 100)
        ta = time.perf_counter() - t0
        t0 = time.perf_counter()
        lm_batch(kernels.np_lm, c, x0, 100)
        tb = time.perf_counter() - t0
        label = f"LM x{args.starts}, 100 it"
        print(f"{name:34s} {label:20s} {ta * 1e3:10.1f}ms {tb * 1e3:10.1f}ms {tb / ta:7.1f}x")


if __name__ == "__main__":
    main()
