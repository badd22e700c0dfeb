"""Portable kernel implementations (NumPy-vectorized where it pays off).

The compiled extension ``orthocert._kernels`` provides the same five
functions with identical semantics; ``orthocert.kernels`` selects one at
import time.  The two backends must produce bit-identical results: the
same first violating pair, the same sampled draw sequence, and the same
clique witness.  Keep any behavioural change mirrored in ``_kernels.pyx``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

# splitmix64 constants; draws are stateless: out(i) = mix(seed + i * PHI)
_PHI = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

_SAMPLE_BATCH = 1 << 20
_SCAN_BLOCK_ENTRIES = 1 << 25


def _mix(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def pair_scan(masks: np.ndarray, target: int) -> tuple[int, int] | None:
    """First pair (i, j), i < j, with popcount(masks[i] ^ masks[j]) == target.

    Scan order is row-major over the upper triangle, so the returned pair is
    the lexicographically first one.  Returns None when no pair matches.
    """
    n = len(masks)
    # rows are blocked so memory stays bounded for large inputs
    block = max(1, _SCAN_BLOCK_ENTRIES // max(n, 1))
    for i0 in range(0, n - 1, block):
        i1 = min(i0 + block, n - 1)
        rows = masks[i0:i1, None] ^ masks[None, :]
        hits = np.bitwise_count(rows) == target
        # keep j > i only
        cols = np.arange(n)
        hits &= cols[None, :] > (np.arange(i0, i1))[:, None]
        if hits.any():
            flat = np.argmax(hits)
            di, j = divmod(int(flat), n)
            return i0 + di, j
    return None


def distance_counts(masks: np.ndarray) -> np.ndarray:
    """Counts of unordered pairwise Hamming distances, indexed 0..64."""
    n = len(masks)
    counts = np.zeros(65, dtype=np.int64)
    block = max(1, _SCAN_BLOCK_ENTRIES // max(n, 1))
    for i0 in range(0, n - 1, block):
        i1 = min(i0 + block, n - 1)
        rows = np.bitwise_count(masks[i0:i1, None] ^ masks[None, :])
        cols = np.arange(n)
        keep = cols[None, :] > (np.arange(i0, i1))[:, None]
        counts += np.bincount(rows[keep].ravel(), minlength=65).astype(np.int64)
    return counts


def sampled_scan(
    masks: np.ndarray, target: int, trials: int, seed: int
) -> tuple[int, int, int] | None:
    """Deterministic seeded pair sampling; first violating (trial, i, j) or None.

    Trial t draws splitmix64 outputs 2t+1 and 2t+2 from the stateless stream,
    maps the first to i (mod n) and the second to j over the remaining n - 1
    indices, so every unordered pair is (near-)uniform with no rejection loop.
    """
    n = len(masks)
    if n < 2 or trials < 1:
        return None
    seed_u = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
    n_u = np.uint64(n)
    n1_u = np.uint64(n - 1)
    for t0 in range(0, trials, _SAMPLE_BATCH):
        t1 = min(t0 + _SAMPLE_BATCH, trials)
        t = np.arange(t0, t1, dtype=np.uint64)
        two_t = t + t
        a = _mix(seed_u + (two_t + np.uint64(1)) * _PHI)
        b = _mix(seed_u + (two_t + np.uint64(2)) * _PHI)
        i = (a % n_u).astype(np.int64)
        j = (b % n1_u).astype(np.int64)
        j += j >= i
        hit = np.bitwise_count(masks[i] ^ masks[j]) == target
        if hit.any():
            idx = int(np.argmax(hit))
            return t0 + idx, int(i[idx]), int(j[idx])
    return None


def gf2_rank(rows: Sequence[int], ncols: int) -> int:
    """Rank over GF(2) of rows given as packed Python ints (bit b = column b)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        if row < 0 or row >> ncols:
            raise ValueError("row has bits outside the declared column range")
        cur = row
        while cur:
            low = cur & -cur
            b = low.bit_length() - 1
            piv = pivots.get(b)
            if piv is None:
                pivots[b] = cur
                rank += 1
                break
            cur ^= piv
    return rank


def max_clique(adj: Sequence[int], n: int) -> tuple[int, list[int]]:
    """Maximum clique by branch and bound with a greedy colouring bound.

    ``adj[v]`` is the neighbour bitmask of vertex v (self bit clear).  The
    search is deterministic: candidates are coloured lowest index first and
    branches are explored in decreasing colour order, so the witness is the
    first optimum encountered under that fixed order.
    """
    if n == 0:
        return 0, []
    best_size = 0
    best_mask = 0

    def expand(r_size: int, r_mask: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if not cand:
            if r_size > best_size:
                best_size = r_size
                best_mask = r_mask
            return
        order: list[int] = []
        colors: list[int] = []
        q = cand
        color = 0
        while q:
            color += 1
            qc = q
            while qc:
                low = qc & -qc
                v = low.bit_length() - 1
                order.append(v)
                colors.append(color)
                q ^= low
                qc = (qc ^ low) & ~adj[v]
        p = cand
        for idx in range(len(order) - 1, -1, -1):
            if r_size + colors[idx] <= best_size:
                return
            v = order[idx]
            bit = 1 << v
            expand(r_size + 1, r_mask | bit, p & adj[v])
            p ^= bit

    expand(0, 0, (1 << n) - 1)
    members = []
    m = best_mask
    while m:
        low = m & -m
        members.append(low.bit_length() - 1)
        m ^= low
    return best_size, members
