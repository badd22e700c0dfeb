"""The double-ball independent set and its size and colouring consequences.

For n divisible by 4, take every vertex of {-1, +1}^n whose first n - 1
coordinates lie within Hamming distance n/4 - 1 of the all-(+1) vector or of
the all-(-1) vector, with both signs of the last coordinate.  Same-ball pairs
are closer than n/2 and cross-ball pairs are farther, so the set is
independent; its size is the closed form a_n below.  Correctness is never
assumed: the verifier and the size count are checked by the test suite and
the CLI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .hypercube import VertexSet

MAX_BUILD_DIM = 64


@dataclass(frozen=True)
class ExtremalSetSpec:
    """Parameters of the double-ball construction in dimension n.

    The two ball centers live in dimension n - 1: the all-(+1) vector
    (mask 0) and the all-(-1) vector.  Disjointness of the balls needs
    2 * radius < n - 1, which holds for every valid n.
    """

    n: int
    center_pair: tuple[int, int]
    radius: int

    @classmethod
    def for_dimension(cls, n: int) -> "ExtremalSetSpec":
        _require_mod4(n)
        radius = n // 4 - 1
        return cls(n=n, center_pair=(0, (1 << (n - 1)) - 1), radius=radius)

    def __post_init__(self):
        if self.radius < 0 or 2 * self.radius >= self.n - 1:
            raise ValueError(f"radius {self.radius} invalid for dimension {self.n}")


def a_n(n: int) -> int:
    """Closed-form size of the double-ball set: 4 * sum_{i<n/4} C(n-1, i)."""
    _require_mod4(n)
    return 4 * sum(math.comb(n - 1, i) for i in range(n // 4))


def _require_mod4(n: int):
    if n <= 0 or n % 4:
        raise ValueError(f"n must be a positive multiple of 4, got {n}")


def _ball_masks(m: int, radius: int) -> np.ndarray:
    """All m-bit masks of weight <= radius, ascending within each weight layer."""
    layers = []
    for w in range(radius + 1):
        count = math.comb(m, w)
        gen = (
            sum(1 << b for b in combo) for combo in combinations(range(m), w)
        )
        layers.append(np.fromiter(gen, dtype=np.uint64, count=count))
    return np.concatenate(layers)


def build_extremal_set(n: int) -> VertexSet:
    """Construct the double-ball independent set in dimension n (n % 4 == 0)."""
    _require_mod4(n)
    if n > MAX_BUILD_DIM:
        raise ValueError(f"n must be at most {MAX_BUILD_DIM}, got {n}")
    spec = ExtremalSetSpec.for_dimension(n)
    m = n - 1
    ball = _ball_masks(m, spec.radius)
    full = np.uint64(spec.center_pair[1])
    bases = np.concatenate([ball, ball ^ full])
    top = np.uint64(1 << m)
    return VertexSet.from_masks(n, np.concatenate([bases, bases | top]))


def chromatic_lower_bound(n: int) -> int:
    """ceil(2^n / a_n), valid when n is a power of two (alpha = a_n is proven)."""
    if n < 4 or n & (n - 1):
        raise ValueError(f"n must be a power of two with n >= 4, got {n}")
    a = a_n(n)
    return -((-1 << n) // a)
