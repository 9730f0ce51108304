"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit

import numpy as np

from isoci import _kernels_py as fallback

try:
    from isoci import _kernels as compiled
except ImportError:
    compiled = None


def cases(rng):
    src = rng.standard_normal((512, 512, 3))
    k = np.arange(-8, 9)
    di, dj = (a.ravel().astype(np.int64) for a in np.meshgrid(k, k, indexing="ij"))
    w = rng.random(di.size)
    yield "stencil_sum 512^2 x 289 taps", (src, di, dj, w)

    n, m = 4096, 1024
    args = [rng.integers(0, 64, m).astype(np.int64), rng.integers(0, 64, m).astype(np.int64),
            rng.integers(0, 64, n).astype(np.int64), rng.integers(0, 64, n).astype(np.int64),
            rng.standard_normal(n), rng.standard_normal(n),
            rng.standard_normal((3, 3)), rng.standard_normal((3, 3)), 1 / 64, 2]
    yield "singular_sum 1024 x 4096", tuple(args)

    p = 200_000
    xi = rng.uniform(-np.pi, np.pi, p)
    s = rng.uniform(0, 1, p)
    u, wu = np.polynomial.legendre.leggauss(64)
    yield "profile_quad 2e5 points x 64 nodes", (xi, s, np.sqrt(1 + s * s), rng.uniform(0, 2, p),
                                                 rng.uniform(1, 2, p), 0.5 * (u + 1), 0.5 * wu)

    q = 3000
    px, py = rng.uniform(-1, 1, q), rng.uniform(-1, 1, q)
    yield "min_pair_ratio 3000 points", (px, py, np.stack([px, py, np.sin(px)], -1), 0.05)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':<40}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for label, a in cases(rng):
        name = label.split()[0]
        tp = min(timeit.repeat(lambda: getattr(fallback, name)(*a), number=1, repeat=args.repeat))
        if compiled is None:
            print(f"{label:<40}{tp:>12.4f}{'n/a':>12}{'':>10}")
            continue
        tc = min(timeit.repeat(lambda: getattr(compiled, name)(*a), number=1, repeat=args.repeat))
        print(f"{label:<40}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
