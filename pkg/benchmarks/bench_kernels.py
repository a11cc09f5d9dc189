"""Compare the compiled and pure-Python kernels on the two hot paths.

Run from the repository root after an editable install::

    python3 benchmarks/bench_kernels.py [--n 16] [--lr-n 12] [--repeat 3]

Character tables use a fresh memo each repetition, so the timings cover
the full Murnaghan-Nakayama recursion. The LR workload counts
c^lam_{alpha,beta} for every lam |- N and every alpha, beta of half size
contained in lam.
"""

from __future__ import annotations

import argparse
import time

from specht_invariants import kernels
from specht_invariants.partitions import contains, enumerate_partitions


def character_table(n: int) -> int:
    parts = [p.parts for p in enumerate_partitions(n)]
    memo: dict = {}
    checksum = 0
    for lam in parts:
        for mu in parts:
            checksum += kernels.mn_character(lam, mu, memo) ** 2
    return checksum


def lr_workload(n: int) -> int:
    half = n // 2
    outers = enumerate_partitions(n)
    inners = enumerate_partitions(half)
    weights = enumerate_partitions(n - half)
    checksum = 0
    for lam in outers:
        for alpha in inners:
            if not contains(lam, alpha):
                continue
            for beta in weights:
                if contains(lam, beta):
                    checksum += kernels.lr_count(lam.parts, alpha.parts, beta.parts)
    return checksum


def best_of(fn, arg, repeat: int) -> tuple[float, int]:
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(arg)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=16, help="character table size")
    parser.add_argument("--lr-n", type=int, default=12, help="outer size for the LR workload")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    previous = kernels.backend()
    rows = []
    try:
        for name in kernels.available():
            kernels.set_backend(name)
            t_chi, c_chi = best_of(character_table, args.n, args.repeat)
            t_lr, c_lr = best_of(lr_workload, args.lr_n, args.repeat)
            rows.append((name, t_chi, c_chi, t_lr, c_lr))
    finally:
        kernels.set_backend(previous)

    print(f"{'backend':<8} {'chi table n=' + str(args.n):>18} {'LR n=' + str(args.lr_n):>12}")
    for name, t_chi, _, t_lr, _ in rows:
        print(f"{name:<8} {t_chi * 1000:>15.1f} ms {t_lr * 1000:>9.1f} ms")
    if len({(r[2], r[4]) for r in rows}) != 1:
        raise SystemExit("backends disagree on the workload checksums")
    if len(rows) == 2:
        py, cy = rows
        print(f"speedup: chi x{py[1] / cy[1]:.1f}, LR x{py[3] / cy[3]:.1f}")
    else:
        print("compiled backend not built; only the Python fallback was timed")


if __name__ == "__main__":
    main()
