"""Benchmark the compiled arithmetic kernel against the pure Python one.

Runs identical randomized workloads through both implementations,
verifies they produce exactly the same results, and reports wall-clock
times with the speedup of the compiled kernel.
"""

import argparse
import random
import time

RADICANDS = (1, 2, 3, 5, 6, 7, 10, 13)


def load_kernels():
    from exactframes._kernel import pycore
    kernels = [("python", pycore)]
    try:
        from exactframes._kernel import fastcore
    except ImportError:
        fastcore = None
    if fastcore is not None:
        kernels.append(("c", fastcore))
    return kernels


def random_terms(rng, kernel, max_terms=4):
    out = ()
    for _ in range(rng.randrange(0, max_terms + 1)):
        term = kernel.make_terms(rng.randrange(-99, 100),
                                 rng.randrange(1, 40),
                                 rng.choice(RADICANDS))
        out = kernel.add_terms(out, term)
    return out


def bench_split(kernel, limit):
    start = time.perf_counter()
    acc = 0
    for n in range(1, limit + 1):
        outer, core = kernel.squarefree_split(n)
        acc += outer + core
    return time.perf_counter() - start, acc


def bench_ring(kernel, cases, seed):
    rng = random.Random(seed)
    start = time.perf_counter()
    acc = ()
    for _ in range(cases):
        x = random_terms(rng, kernel)
        y = random_terms(rng, kernel)
        acc = kernel.add_terms(kernel.mul_terms(x, y), kernel.neg_terms(acc))
    return time.perf_counter() - start, acc


def bench_matmul(kernel, size, seed):
    rng = random.Random(seed)
    a = [[random_terms(rng, kernel, 2) for _ in range(size)]
         for _ in range(size)]
    b = [[random_terms(rng, kernel, 2) for _ in range(size)]
         for _ in range(size)]
    start = time.perf_counter()
    out = kernel.matmul_terms(a, b)
    flat = tuple(tuple(row) for row in out)
    return time.perf_counter() - start, flat


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="compare the exact-arithmetic kernels")
    parser.add_argument("--split-limit", type=int, default=200000,
                        help="integers to split into square and "
                             "squarefree parts")
    parser.add_argument("--ring-cases", type=int, default=20000,
                        help="randomized add/multiply rounds")
    parser.add_argument("--matmul-size", type=int, default=48,
                        help="side length of the exact matrix product")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    kernels = load_kernels()
    if len(kernels) == 1:
        print("compiled kernel unavailable; "
              "benchmarking the pure Python kernel only")
    results = {}
    for name, kernel in kernels:
        split_t, split_acc = bench_split(kernel, args.split_limit)
        ring_t, ring_acc = bench_ring(kernel, args.ring_cases, args.seed)
        mat_t, mat_out = bench_matmul(kernel, args.matmul_size, args.seed)
        results[name] = {
            "times": (split_t, ring_t, mat_t),
            "values": (split_acc, ring_acc, mat_out),
        }
        print(f"{name:>7}  squarefree_split x {args.split_limit}: "
              f"{split_t:7.3f}s   ring ops x {args.ring_cases}: "
              f"{ring_t:7.3f}s   matmul {args.matmul_size}x"
              f"{args.matmul_size}: {mat_t:7.3f}s")
    if len(kernels) == 2:
        if results["python"]["values"] != results["c"]["values"]:
            print("MISMATCH: the kernels disagree on workload results")
            return 1
        print("kernels agree exactly on all workload results")
        labels = ("squarefree_split", "ring ops", "matmul")
        for idx, label in enumerate(labels):
            ratio = (results["python"]["times"][idx]
                     / results["c"]["times"][idx])
            print(f"{label}: compiled kernel runs {ratio:.1f}x faster")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
