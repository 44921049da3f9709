"""Timing of root enumeration on E8, D16+ and the Kummer lattice.

    python benchmarks/bench_roots.py [--repeat N]

The numba kernel is compiled on first use; the first row per process
includes that cost and is reported separately as "compile".
"""
import argparse
import time

from k3tool.lattice import USE_NUMBA, named_lattice, vectors_of_norm

LATTICES = ("E8", "D16plus", "Kummer")
EXPECTED = {"E8": 240, "D16plus": 480, "Kummer": 32}


def positive_gram(name):
    return [[-x for x in row] for row in named_lattice(name).matrix()]


def time_once(gram, backend):
    t0 = time.perf_counter()
    n = len(vectors_of_norm(gram, 2, backend))
    return n, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["numpy", "python"]
    if USE_NUMBA:
        backends.insert(0, "numba")
        _, t = time_once(positive_gram("E8"), "numba")
        print(f"{'compile':>8} {'numba':>7} {t:9.4f}s")
    print(f"{'lattice':>8} {'backend':>7} {'best':>10} {'roots':>6}")
    for name in LATTICES:
        gram = positive_gram(name)
        for backend in backends:
            best = float("inf")
            for _ in range(args.repeat):
                n, t = time_once(gram, backend)
                best = min(best, t)
            assert n == EXPECTED[name], (name, backend, n)
            print(f"{name:>8} {backend:>7} {best:9.4f}s {n:6d}")


if __name__ == "__main__":
    main()
