"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--scan-n 6]
"""
import argparse
import timeit

import numpy as np

from q1lab import _pykernels

try:
    from q1lab import _ckernels
except ImportError:
    _ckernels = None


def _random_graph_rows(rng, n, p):
    upper = np.triu(rng.random((n, n)) < p, 1)
    adj = upper | upper.T
    return [int(sum(1 << v for v in np.flatnonzero(adj[u]))) for u in range(n)]


def cases(scan_n, rng):
    mat = rng.random((30, 30))
    sym = mat + mat.T
    rows = [_random_graph_rows(rng, 40, 0.5) for _ in range(5)]
    total = 1 << (scan_n * (scan_n - 1) // 2)
    return {
        "jacobi 30x30": lambda k: k.jacobi_eigh(sym, vectors=True),
        "max clique, 5 x G(40, 0.5)": lambda k: [k.max_clique(r, 40) for r in rows],
        f"connected masks n={scan_n}": lambda k: k.connected_masks(scan_n, 0, total),
        f"full scan n={scan_n}": lambda k: k.scan_connected(scan_n, 0, total),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scan-n", type=int, default=6)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    rng = np.random.default_rng(0)
    print(f"{'kernel':<30}" + "".join(f"{name:>12}" for name, _ in backends) + ("   speedup" if _ckernels else ""))
    for label, fn in cases(args.scan_n, rng).items():
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in backends]
        line = f"{label:<30}" + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2:
            line += f"  {times[0] / times[1]:>7.1f}x"
        print(line)
    if _ckernels is None:
        print("compiled extension not built; only the fallback was timed")


if __name__ == "__main__":
    main()
