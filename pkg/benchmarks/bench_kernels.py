"""Benchmark the compiled kernel extension against the portable fallback.

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py

Workloads mirror real call sites: the pairwise scan over the n = 16
double-ball set, seeded pair sampling on the n = 24 set, GF(2) rank of a
truncated-family matrix, and the clique search behind the exact solver.
"""

from __future__ import annotations

import time

import numpy as np

from orthocert import _kernels_py
from orthocert import build_extremal_set, build_restricted_X, split_truncate
from orthocert.certificate import Gf2Matrix

try:
    from orthocert import _kernels
except ImportError:
    _kernels = None


def _time(fn, *args, repeat: int = 3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def _omega_component_complement(n: int) -> tuple[list[int], int]:
    """Complement adjacency of the even-weight component of the n-orthogonality graph."""
    masks = np.arange(1 << n, dtype=np.uint64)
    masks = masks[np.bitwise_count(masks) % 2 == 0]
    size = len(masks)
    dists = np.bitwise_count(masks[:, None] ^ masks[None, :])
    adj = []
    for i in range(size):
        row = 0
        for j in np.nonzero((dists[i] != n // 2) & (np.arange(size) != i))[0].tolist():
            row |= 1 << j
        adj.append(row)
    return adj, size


def main() -> None:
    set16 = build_extremal_set(16)
    set24 = build_extremal_set(24)
    family = split_truncate(set16).even_plus
    entries = build_restricted_X(family, 4)
    gf2 = Gf2Matrix.from_integer_matrix(entries)
    rng = np.random.default_rng(2)
    dense_rows = [
        int.from_bytes(rng.integers(0, 256, size=72, dtype=np.uint8).tobytes(), "little")
        for _ in range(576)
    ]
    clique_adj, clique_n = _omega_component_complement(8)

    workloads = [
        ("pair_scan n=16 (2304 masks)", "pair_scan", (set16.masks, 8)),
        ("sampled_scan n=24, 10^6 trials", "sampled_scan", (set24.masks, 12, 1_000_000, 42)),
        ("gf2_rank family 576x576", "gf2_rank", (list(gf2.rows), gf2.cols)),
        ("gf2_rank dense 576x576", "gf2_rank", (dense_rows, 576)),
        ("max_clique omega_8 component", "max_clique", (clique_adj, clique_n)),
    ]

    print(f"{'workload':38} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, name, args in workloads:
        t_pure, r_pure = _time(getattr(_kernels_py, name), *args)
        if _kernels is None:
            print(f"{label:38} {t_pure * 1e3:9.2f}ms {'n/a':>10} {'n/a':>8}")
            continue
        t_comp, r_comp = _time(getattr(_kernels, name), *args)
        assert _normalize(r_pure) == _normalize(r_comp), f"backend mismatch in {name}"
        print(
            f"{label:38} {t_pure * 1e3:9.2f}ms {t_comp * 1e3:9.2f}ms "
            f"{t_pure / t_comp:7.1f}x"
        )
    if _kernels is None:
        print("compiled extension not available; install with a C compiler to compare")


def _normalize(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    return value


if __name__ == "__main__":
    main()
