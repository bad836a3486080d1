"""Benchmark the transversal kernel: compiled extension vs pure Python.

Both backends implement the same branch-and-bound with identical branch
ordering, so node counts and witnesses must match exactly; only the wall
clock differs. Workloads are the ones the library actually runs: the
covering-design searches behind c_star, the tight constructions, and a
seeded batch of random k-uniform systems.

    python3 benchmarks/bench_tau.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from mvlab._tau_fallback import solve_tau as solve_python
from mvlab.constructions import (
    build_complete_uniform,
    build_generalized_triangle,
    build_h_nk,
)
from mvlab.kernels import ACTIVE_KERNEL

try:
    from mvlab._tau_core import solve_tau as solve_native
except ImportError:
    solve_native = None


def random_system(rng: random.Random, n: int, k: int, m: int) -> list[int]:
    edges = set()
    while len(edges) < m:
        bits = 0
        for v in rng.sample(range(n), k):
            bits |= 1 << v
        edges.add(bits)
    return sorted(edges)


def workloads() -> list[tuple[str, list[list[int]]]]:
    rng = random.Random(2024)
    named: list[tuple[str, list[list[int]]]] = [
        ("generalized-triangle k=6", [list(build_generalized_triangle(6).edges)]),
        ("complete-uniform (9,6)", [list(build_complete_uniform(9, 6).edges)]),
        ("complete-uniform (11,7)", [list(build_complete_uniform(11, 7).edges)]),
        ("H(16,3) pasting", [list(build_h_nk(16, 3).edges)]),
        ("H(23,4) pasting", [list(build_h_nk(23, 4).edges)]),
        ("random 3-uniform n=18 m=40",
         [random_system(rng, 18, 3, 40) for _ in range(20)]),
        ("random 4-uniform n=20 m=60",
         [random_system(rng, 20, 4, 60) for _ in range(10)]),
        ("random graphs n=22 m=80",
         [random_system(rng, 22, 2, 80) for _ in range(10)]),
    ]
    return named


def run(solver, instances: list[list[int]]) -> tuple[float, int, list]:
    t0 = time.perf_counter()
    results = [solver(e) for e in instances]
    elapsed = time.perf_counter() - t0
    nodes = sum(r[2] for r in results)
    return elapsed, nodes, results


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3,
                    help="timing repetitions per workload (best is reported)")
    args = ap.parse_args()

    print(f"active kernel: {ACTIVE_KERNEL}")
    if solve_native is None:
        print("compiled extension not available; timing pure Python only\n")
    backends = [("python", solve_python)]
    if solve_native is not None:
        backends.append(("native", solve_native))

    header = f"{'workload':<34} {'nodes':>9}"
    for name, _ in backends:
        header += f" {name + ' (ms)':>13}"
    if solve_native is not None:
        header += f" {'speedup':>8}"
    print(header)
    print("-" * len(header))

    ratios = []
    for label, instances in workloads():
        times: dict[str, float] = {}
        baseline = None
        for name, solver in backends:
            samples = [run(solver, instances) for _ in range(args.repeat)]
            times[name] = min(s[0] for s in samples)
            _, nodes, results = samples[0]
            if baseline is None:
                baseline = (nodes, results)
            else:
                # identical algorithm: exact agreement, not just same tau
                assert nodes == baseline[0], f"{label}: node counts diverge"
                assert results == baseline[1], f"{label}: results diverge"
        row = f"{label:<34} {baseline[0]:>9}"
        for name, _ in backends:
            row += f" {times[name] * 1e3:>13.2f}"
        if solve_native is not None:
            ratios.append(times["python"] / times["native"])
            row += f" {ratios[-1]:>7.1f}x"
        print(row)

    if ratios:
        print(f"\nmedian speedup: {statistics.median(ratios):.1f}x")


if __name__ == "__main__":
    main()
