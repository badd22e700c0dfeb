"""Exact binomials, Lucas parity, and Krawtchouk polynomial tables.

Everything here is arbitrary-precision integer arithmetic; nothing rounds
or wraps.  Tables are cached per dimension and immutable once built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import GuardExceeded

MAX_TABLE_DIM = 64


def binom(t: int, r: int) -> int:
    """Generalized binomial coefficient C(t, r) = t(t-1)...(t-r+1) / r!.

    Valid for any integer t (including negative) and r >= 0.  For t < 0 the
    falling factorial gives C(t, r) = (-1)^r C(r - t - 1, r).
    """
    if r < 0:
        raise ValueError("lower index must be non-negative")
    if t >= 0:
        return math.comb(t, r)
    value = math.comb(r - t - 1, r)
    return -value if r % 2 else value


def binom_mod2(a: int, b: int) -> int:
    """Parity of C(a, b): 1 iff every binary digit of b is dominated by a.

    Lucas' theorem at p = 2; defined for non-negative arguments only.
    """
    if a < 0 or b < 0:
        raise ValueError("Lucas parity requires non-negative arguments")
    return 1 if a & b == b else 0


def krawtchouk(j: int, i: int, m: int) -> int:
    """Krawtchouk value K_j(i; m) = sum_h (-1)^h C(i, h) C(m-i, j-h).

    j is the degree, 0 <= j <= m.  The point i may be any integer; outside
    0..m the same sum with generalized binomials evaluates the polynomial
    extension in i.
    """
    if not 0 <= j <= m:
        raise ValueError(f"degree {j} outside 0..{m}")
    total = 0
    for h in range(j + 1):
        term = binom(i, h) * binom(m - i, j - h)
        total += -term if h % 2 else term
    return total


@dataclass(frozen=True)
class KrawtchoukTable:
    """All values K_j(i; m) for 0 <= i, j <= m.

    Row index i is the evaluation point, column index j the degree, so
    ``values[i][j] == K_j(i; m)``.
    """

    m: int
    values: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.values[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        """K_j evaluated at all points 0..m (the eigenvalue list of one degree)."""
        return tuple(row[j] for row in self.values)


@lru_cache(maxsize=None)
def krawtchouk_table(m: int) -> KrawtchoukTable:
    """Full exact table for dimension m, built from the defining sum.

    Cached per m; the lru_cache gives write-once publication of the frozen
    table, so concurrent readers are safe.
    """
    if not 1 <= m <= MAX_TABLE_DIM:
        raise GuardExceeded(f"table dimension {m} outside 1..{MAX_TABLE_DIM}")
    values = tuple(
        tuple(krawtchouk(j, i, m) for j in range(m + 1)) for i in range(m + 1)
    )
    return KrawtchoukTable(m=m, values=values)
