"""Time the pure-Python partition kernel against the compiled one.

Runs each kernel operation over the same pre-generated workload and
prints per-operation timings plus the speedup factor.  Exits nonzero
when the compiled backend is unavailable, since then there is nothing
to compare.

Usage: python benchmarks/bench_kernel.py [--ground-size N] [--rounds K]
"""

import argparse
import random
import sys
import time

from widthgames._kernel import kernel_py

try:
    from widthgames._kernel import _speedups
except ImportError:
    _speedups = None


def random_partition(rng, n):
    full = (1 << n) - 1
    blocks = []
    rest = full
    while rest:
        low = rest & -rest
        pool = rest & ~low
        extra = rng.getrandbits(n) & pool
        block = low | extra
        blocks.append(block)
        rest &= ~block
    return kernel_py.canonicalize(blocks)


def build_workload(n, count, seed):
    rng = random.Random(seed)
    full = (1 << n) - 1
    parts = [random_partition(rng, n) for _ in range(count)]
    pairs = [
        (parts[i], parts[(i * 7 + 3) % count]) for i in range(count)
    ]
    masks = [rng.getrandbits(n) & full or 1 for _ in range(count)]
    return full, parts, pairs, masks


OPS = (
    ("canonicalize", lambda impl, w: [impl.canonicalize(p) for p in w[1]]),
    ("is_partition_of", lambda impl, w: [impl.is_partition_of(p, w[0]) for p in w[1]]),
    ("join", lambda impl, w: [impl.join(p, q) for p, q in w[2]]),
    ("is_coarser", lambda impl, w: [impl.is_coarser(q, p) for p, q in w[2]]),
    ("block_containing", lambda impl, w: [impl.block_containing(p, m) for p, m in zip(w[1], w[3])]),
    ("redirect", lambda impl, w: [impl.redirect(p, 0, m) for p, m in zip(w[1], w[3])]),
)


def time_op(fn, impl, workload, rounds):
    best = None
    for _ in range(rounds):
        t0 = time.perf_counter()
        fn(impl, workload)
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best


def check_agreement(workload):
    full, parts, pairs, masks = workload
    for p, q in pairs:
        assert kernel_py.join(p, q) == _speedups.join(p, q)
        assert kernel_py.is_coarser(q, p) == _speedups.is_coarser(q, p)
    for p, m in zip(parts, masks):
        assert kernel_py.block_containing(p, m) == _speedups.block_containing(p, m)
        assert kernel_py.redirect(p, 0, m) == _speedups.redirect(p, 0, m)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ground-size", type=int, default=12)
    parser.add_argument("--count", type=int, default=4000)
    parser.add_argument("--rounds", type=int, default=5)
    parser.add_argument("--seed", type=int, default=20260818)
    args = parser.parse_args(argv)

    if _speedups is None:
        print("compiled kernel is not built; nothing to compare")
        return 1

    workload = build_workload(args.ground_size, args.count, args.seed)
    check_agreement(workload)

    print("ground size %d, %d items per op, best of %d rounds"
          % (args.ground_size, args.count, args.rounds))
    print("%-18s %12s %12s %9s" % ("operation", "python (ms)", "cython (ms)", "speedup"))
    total_py = 0.0
    total_cy = 0.0
    for name, fn in OPS:
        t_py = time_op(fn, kernel_py, workload, args.rounds)
        t_cy = time_op(fn, _speedups, workload, args.rounds)
        total_py += t_py
        total_cy += t_cy
        print("%-18s %12.3f %12.3f %8.2fx"
              % (name, t_py * 1e3, t_cy * 1e3, t_py / t_cy))
    print("%-18s %12.3f %12.3f %8.2fx"
          % ("total", total_py * 1e3, total_cy * 1e3, total_py / total_cy))
    return 0


if __name__ == "__main__":
    sys.exit(main())
