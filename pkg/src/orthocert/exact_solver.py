"""Brute-force maximum independent set for the orthogonality graph at small n.

Independent sets of the graph are cliques of its complement, so the solver
runs a branch-and-bound clique search (greedy colouring bound, bitset state)
on the complement of each connected component and sums the results.  The
branching order is fixed, so the witness is reproducible; the search is
single-threaded by design, which keeps the reported witness deterministic.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import GuardExceeded
from .hypercube import VertexSet

EXACT_SOLVER_MAX_DIM = 8


def _adjacency(mask_list: np.ndarray, n: int) -> list[int]:
    """Orthogonality adjacency bitsets over the given masks (empty for odd n)."""
    size = len(mask_list)
    if n % 2:
        return [0] * size
    dists = np.bitwise_count(mask_list[:, None] ^ mask_list[None, :])
    rows = dists == n // 2
    return [
        sum(1 << j for j in np.nonzero(rows[i])[0].tolist()) for i in range(size)
    ]


def _components(adj: list[int], size: int) -> list[list[int]]:
    """Connected components as ascending vertex-index lists, by smallest vertex."""
    seen = 0
    comps = []
    for v in range(size):
        if seen >> v & 1:
            continue
        frontier = 1 << v
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
        seen |= comp
        members = []
        m = comp
        while m:
            low = m & -m
            members.append(low.bit_length() - 1)
            m ^= low
        comps.append(members)
    return comps


def _mis_over(mask_list: np.ndarray, n: int) -> tuple[int, list[int]]:
    """Maximum independent set over the given vertex masks; returns (size, masks)."""
    size = len(mask_list)
    adj = _adjacency(mask_list, n)
    total = 0
    chosen: list[int] = []
    for members in _components(adj, size):
        count = len(members)
        comp_adj = []
        for a in members:
            row = 0
            for bi, b in enumerate(members):
                if a != b and not adj[a] >> b & 1:
                    row |= 1 << bi
            comp_adj.append(row)
        best, picks = kernels.max_clique(comp_adj, count)
        total += best
        chosen.extend(int(mask_list[members[p]]) for p in picks)
    return total, chosen


def max_independent_set(n: int) -> tuple[int, VertexSet]:
    """Exact independence number of the orthogonality graph with a witness.

    Exhaustive only for n <= 8 (up to 256 vertices); larger n must use the
    bound machinery instead.  The witness always verifies independent.
    """
    if not 1 <= n <= EXACT_SOLVER_MAX_DIM:
        raise GuardExceeded(f"exact solving is limited to n <= {EXACT_SOLVER_MAX_DIM}")
    masks = np.arange(1 << n, dtype=np.uint64)
    size, chosen = _mis_over(masks, n)
    return size, VertexSet.from_masks(n, chosen)


def max_independent_set_parity_class(n: int) -> int:
    """Independence number restricted to even-weight vertices.

    For n divisible by 4 all edges stay inside a parity class and flipping one
    coordinate swaps the classes, so the full independence number is exactly
    twice this value; the doubling is cross-checked against the full solver
    in the test suite.
    """
    if n % 4:
        raise ValueError(f"n must be divisible by 4, got {n}")
    if n > EXACT_SOLVER_MAX_DIM:
        raise GuardExceeded(f"exact solving is limited to n <= {EXACT_SOLVER_MAX_DIM}")
    masks = np.arange(1 << n, dtype=np.uint64)
    masks = masks[np.bitwise_count(masks) % 2 == 0]
    size, _ = _mis_over(masks, n)
    return size
