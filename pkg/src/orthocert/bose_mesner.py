"""Exact dense realization of the hypercube's distance-matrix algebra.

Matrices carry integer numerators over one positive denominator, which keeps
every operation in arbitrary-precision integer arithmetic.  Products and sums
take a NumPy int64 fast path only when an a-priori magnitude bound proves the
result cannot overflow; otherwise they fall back to big-int loops, so results
are exact in all cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np

from .combinatorics import krawtchouk, krawtchouk_table
from .errors import GuardExceeded, RatioBoundVoid

DISTANCE_MATRIX_MAX_DIM = 13
PROJECTION_MATRIX_MAX_DIM = 11
SPECTRAL_CHECK_MAX_DIM = 9

_INT64_SAFE = 1 << 62


class ExactRationalMatrix:
    """Dense matrix of exact rationals: integer numerators / one denominator.

    Instances are immutable by convention; operations return new matrices.
    """

    __slots__ = ("_num", "den", "rows", "cols", "_i64", "_max_abs")

    def __init__(self, num: list[list[int]], den: int = 1):
        if den == 0:
            raise ValueError("denominator must be nonzero")
        if den < 0:
            num = [[-v for v in row] for row in num]
            den = -den
        self.rows = len(num)
        self.cols = len(num[0]) if num else 0
        for row in num:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
        self._num = num
        self.den = den
        self._i64 = False  # False = not computed yet, None = does not fit
        self._max_abs = -1

    @classmethod
    def identity(cls, n: int) -> "ExactRationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactRationalMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_fractions(cls, entries: list[list[Fraction]]) -> "ExactRationalMatrix":
        den = reduce(math.lcm, (f.denominator for row in entries for f in row), 1)
        num = [[int(f * den) for f in row] for row in entries]
        return cls(num, den)

    # -- internal helpers -------------------------------------------------

    def _as_i64(self):
        if self._i64 is False:
            try:
                self._i64 = np.array(self._num, dtype=np.int64)
            except (OverflowError, ValueError):
                self._i64 = None
        return self._i64

    def max_abs(self) -> int:
        if self._max_abs < 0:
            arr = self._as_i64()
            if arr is not None:
                m = int(np.abs(arr).max()) if arr.size else 0
            else:
                m = max((abs(v) for row in self._num for v in row), default=0)
            self._max_abs = m
        return self._max_abs

    def _check_shape(self, other: "ExactRationalMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # -- queries -----------------------------------------------------------

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self._num[i][j], self.den)

    def to_fraction_rows(self) -> list[list[Fraction]]:
        return [[Fraction(v, self.den) for v in row] for row in self._num]

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return Fraction(sum(self._num[i][i] for i in range(self.rows)), self.den)

    def is_zero(self) -> bool:
        arr = self._as_i64()
        if arr is not None:
            return not arr.any()
        return all(v == 0 for row in self._num for v in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactRationalMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            return False
        return (self - other).is_zero()

    # -- arithmetic ----------------------------------------------------------

    def _combine(self, other: "ExactRationalMatrix", sign: int) -> "ExactRationalMatrix":
        self._check_shape(other)
        den = math.lcm(self.den, other.den)
        sa, sb = den // self.den, sign * (den // other.den)
        a64, b64 = self._as_i64(), other._as_i64()
        if (
            a64 is not None
            and b64 is not None
            and abs(sa) < _INT64_SAFE
            and abs(sb) < _INT64_SAFE
            and self.max_abs() * abs(sa) + other.max_abs() * abs(sb) < _INT64_SAFE
        ):
            num = (a64 * sa + b64 * sb).tolist()
        else:
            num = [
                [sa * x + sb * y for x, y in zip(ra, rb)]
                for ra, rb in zip(self._num, other._num)
            ]
        return ExactRationalMatrix(num, den)

    def __add__(self, other: "ExactRationalMatrix") -> "ExactRationalMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "ExactRationalMatrix") -> "ExactRationalMatrix":
        return self._combine(other, -1)

    def scaled(self, q) -> "ExactRationalMatrix":
        """Multiply by an exact scalar (int or Fraction)."""
        q = Fraction(q)
        p, d = q.numerator, q.denominator
        a64 = self._as_i64()
        if a64 is not None and abs(p) < _INT64_SAFE and self.max_abs() * abs(p) < _INT64_SAFE:
            num = (a64 * p).tolist()
        else:
            num = [[p * v for v in row] for row in self._num]
        return ExactRationalMatrix(num, self.den * d)

    def __matmul__(self, other: "ExactRationalMatrix") -> "ExactRationalMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        a64, b64 = self._as_i64(), other._as_i64()
        if (
            a64 is not None
            and b64 is not None
            and self.max_abs() * other.max_abs() * max(self.cols, 1) < _INT64_SAFE
        ):
            num = (a64 @ b64).tolist()
        else:
            bt = list(zip(*other._num))
            num = [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in self._num]
        return ExactRationalMatrix(num, self.den * other.den)

    def transpose(self) -> "ExactRationalMatrix":
        return ExactRationalMatrix([list(row) for row in zip(*self._num)], self.den)

    def reduced(self) -> "ExactRationalMatrix":
        """Equivalent matrix with the common gcd of numerators and denominator removed."""
        g = self.den
        for row in self._num:
            for v in row:
                if v:
                    g = math.gcd(g, v)
                    if g == 1:
                        return self
        return ExactRationalMatrix(
            [[v // g for v in row] for row in self._num], self.den // g
        )

    def rank(self) -> int:
        """Exact rank by integer Gaussian elimination with gcd row normalization.

        The denominator never matters for rank; rows are cross-multiplied to
        stay integral, then divided by their gcd to keep entries small.
        """
        work = [list(row) for row in self._num]
        nrows, ncols = self.rows, self.cols
        rank = 0
        prow = 0
        for col in range(ncols):
            pivot = None
            for r in range(prow, nrows):
                if work[r][col]:
                    pivot = r
                    break
            if pivot is None:
                continue
            work[prow], work[pivot] = work[pivot], work[prow]
            prow_vals = work[prow]
            p = prow_vals[col]
            for r in range(prow + 1, nrows):
                v = work[r][col]
                if not v:
                    continue
                row = [p * a - v * b for a, b in zip(work[r], prow_vals)]
                g = 0
                for a in row:
                    if a:
                        g = math.gcd(g, a)
                        if g == 1:
                            break
                if g > 1:
                    row = [a // g for a in row]
                work[r] = row
            rank += 1
            prow += 1
            if prow == nrows:
                break
        return rank

    def __repr__(self) -> str:
        return f"ExactRationalMatrix({self.rows}x{self.cols}, den={self.den})"


@dataclass(frozen=True)
class SpectralReport:
    """Per-identity outcome of the distance-algebra consistency checks."""

    m: int
    ok: bool
    identities: dict[str, bool]
    failures: list[str]


@lru_cache(maxsize=4)
def _pairwise_distances(m: int) -> np.ndarray:
    """uint8 matrix of Hamming distances between all masks of m bits."""
    size = 1 << m
    arr = np.arange(size, dtype=np.uint64)
    out = np.empty((size, size), dtype=np.uint8)
    block = max(1, (1 << 24) // size)
    for lo in range(0, size, block):
        out[lo : lo + block] = np.bitwise_count(arr[lo : lo + block, None] ^ arr[None, :])
    out.setflags(write=False)
    return out


def distance_matrix(j: int, m: int) -> ExactRationalMatrix:
    """0/1 adjacency matrix of the distance-j relation on m-bit masks.

    Rows and columns are indexed by ascending mask; j = 0 gives the identity.
    """
    if not 1 <= m <= DISTANCE_MATRIX_MAX_DIM:
        raise GuardExceeded(f"dense distance matrix limited to m <= {DISTANCE_MATRIX_MAX_DIM}")
    if not 0 <= j <= m:
        raise ValueError(f"distance {j} outside 0..{m}")
    num = (_pairwise_distances(m) == j).astype(np.int64).tolist()
    return ExactRationalMatrix(num)


def projection_entry(i: int, j: int, m: int) -> Fraction:
    """Entry of the i-th eigenspace projector between masks at distance j."""
    if not 0 <= i <= m:
        raise ValueError(f"eigenspace index {i} outside 0..{m}")
    if not 0 <= j <= m:
        raise ValueError(f"distance {j} outside 0..{m}")
    return Fraction(krawtchouk(i, j, m), 1 << m)


def projection_matrix(i: int, m: int) -> ExactRationalMatrix:
    """Dense orthogonal projector onto the i-th common eigenspace.

    Symmetric and idempotent with trace C(m, i); entries depend only on the
    Hamming distance of the indexing masks.
    """
    if not 1 <= m <= PROJECTION_MATRIX_MAX_DIM:
        raise GuardExceeded(f"dense projector limited to m <= {PROJECTION_MATRIX_MAX_DIM}")
    if not 0 <= i <= m:
        raise ValueError(f"eigenspace index {i} outside 0..{m}")
    table = krawtchouk_table(m)
    lut = np.array([table.entry(d, i) for d in range(m + 1)], dtype=np.int64)
    num = lut[_pairwise_distances(m)].tolist()
    return ExactRationalMatrix(num, 1 << m)


def spectral_identities(
    a_mats: list[ExactRationalMatrix],
    e_mats: list[ExactRationalMatrix],
    m: int,
) -> SpectralReport:
    """Verify the algebra identities on prebuilt matrices (exactly, no tolerance).

    Checks the resolution of identity, orthogonal idempotency, the Krawtchouk
    eigenvalue expansion of every distance matrix, and projector traces.
    Factored out of spectral_check so tests can inject a perturbed matrix and
    watch the right identity fail.
    """
    size = a_mats[0].rows
    failures: list[str] = []

    total = e_mats[0]
    for e in e_mats[1:]:
        total = total + e
    sum_ok = total == ExactRationalMatrix.identity(size)
    if not sum_ok:
        failures.append("sum(E_i) != I")

    idem_ok = True
    zero = ExactRationalMatrix.zeros(size, size)
    for i in range(m + 1):
        for l in range(i, m + 1):
            prod = e_mats[i] @ e_mats[l]
            expect = e_mats[i] if i == l else zero
            if prod != expect:
                idem_ok = False
                failures.append(f"E_{i} * E_{l} != {'E_%d' % i if i == l else '0'}")

    table = krawtchouk_table(m)
    expand_ok = True
    for j in range(m + 1):
        acc = e_mats[0].scaled(table.entry(0, j))
        for i in range(1, m + 1):
            acc = acc + e_mats[i].scaled(table.entry(i, j))
        if acc != a_mats[j]:
            expand_ok = False
            failures.append(f"A_{j} != sum_i K_{j}(i) E_i")

    trace_ok = True
    for i in range(m + 1):
        if e_mats[i].trace() != math.comb(m, i):
            trace_ok = False
            failures.append(f"trace E_{i} != C({m},{i})")

    identities = {
        "sum_projections": sum_ok,
        "orthogonal_idempotents": idem_ok,
        "distance_expansion": expand_ok,
        "projection_traces": trace_ok,
    }
    return SpectralReport(m=m, ok=not failures, identities=identities, failures=failures)


def spectral_check(m: int) -> SpectralReport:
    """Build all distance matrices and projectors for m and verify the algebra."""
    if not 1 <= m <= SPECTRAL_CHECK_MAX_DIM:
        raise GuardExceeded(f"spectral check limited to m <= {SPECTRAL_CHECK_MAX_DIM}")
    a_mats = [distance_matrix(j, m) for j in range(m + 1)]
    e_mats = [projection_matrix(i, m) for i in range(m + 1)]
    return spectral_identities(a_mats, e_mats, m)


def ratio_bound(n: int, j: int) -> Fraction:
    """Hoffman-style eigenvalue bound on independent sets of the distance-j graph.

    Exact rational 2^n (-lambda_min) / (valency - lambda_min) where lambda_min
    is the least Krawtchouk eigenvalue of degree j on n.  Raises
    RatioBoundVoid when the least eigenvalue is non-negative.
    """
    if not 0 <= j <= n:
        raise ValueError(f"distance {j} outside 0..{n}")
    eigenvalues = [krawtchouk(j, i, n) for i in range(n + 1)]
    lam_min = min(eigenvalues)
    if lam_min >= 0:
        raise RatioBoundVoid(f"least eigenvalue {lam_min} is non-negative")
    valency = math.comb(n, j)
    return Fraction((1 << n) * -lam_min, valency - lam_min)
