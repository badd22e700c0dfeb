"""Bitmask vertex kernel for the hypercube and its orthogonality graph.

Vertices of {-1, +1}^n are n-bit masks (bit b set means coordinate b is -1,
bit 0 is the first coordinate).  Two vertices are adjacent in the
orthogonality graph when their Hamming distance is exactly n/2, so the graph
is edgeless for odd n.  This module provides distances, adjacency,
independence verification (exhaustive and seeded-sampled), the four-way
parity/last-coordinate truncation split, and the shared set file format.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import kernels
from .errors import DimensionMismatch, GuardExceeded, SetFileError

MAX_DIM = 64
PAIRWISE_GUARD = 100_000

_WRITE_CHUNK = 1 << 20


@dataclass(frozen=True)
class Vertex:
    """A point of {-1, +1}^n as an n-bit mask plus its dimension."""

    mask: int
    dim: int

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dimension {self.dim} outside 1..{MAX_DIM}")
        if not 0 <= self.mask < (1 << self.dim):
            raise ValueError(f"mask {self.mask:#x} has bits outside dimension {self.dim}")

    @property
    def weight(self) -> int:
        """Number of -1 coordinates."""
        return self.mask.bit_count()

    def to_pm_string(self) -> str:
        return "".join("-" if self.mask >> b & 1 else "+" for b in range(self.dim))

    @classmethod
    def from_pm_string(cls, text: str) -> "Vertex":
        mask = 0
        for b, ch in enumerate(text):
            if ch == "-":
                mask |= 1 << b
            elif ch != "+":
                raise ValueError(f"invalid sign character {ch!r}")
        return cls(mask=mask, dim=len(text))


class VertexSet:
    """Ordered, duplicate-free vertices of one dimension (ascending mask).

    Masks are held in a uint64 array so multi-million-vertex sets stay cheap;
    iteration and indexing materialize Vertex objects on demand.  Instances
    are immutable after construction.
    """

    __slots__ = ("dim", "_masks")

    def __init__(self, dim: int, masks: np.ndarray):
        # internal: assumes masks already validated, unique and ascending
        self.dim = dim
        self._masks = masks

    @classmethod
    def from_masks(cls, dim: int, masks) -> "VertexSet":
        """Canonicalizing constructor: sorts, deduplicates, validates range."""
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dimension {dim} outside 1..{MAX_DIM}")
        if not isinstance(masks, np.ndarray):
            masks = list(masks)
        try:
            arr = np.unique(np.asarray(masks, dtype=np.uint64))
        except (OverflowError, TypeError) as exc:
            raise ValueError(f"masks must be unsigned 64-bit integers: {exc}") from exc
        if dim < 64 and len(arr) and int(arr[-1]) >> dim:
            raise ValueError(f"mask {int(arr[-1]):#x} has bits outside dimension {dim}")
        arr.setflags(write=False)
        return cls(dim, arr)

    @classmethod
    def from_vertices(cls, vertices: Iterable[Vertex]) -> "VertexSet":
        vs = list(vertices)
        if not vs:
            raise ValueError("cannot infer dimension from an empty vertex list")
        dim = vs[0].dim
        for v in vs:
            if v.dim != dim:
                raise DimensionMismatch(f"mixed dimensions {dim} and {v.dim}")
        return cls.from_masks(dim, [v.mask for v in vs])

    @property
    def masks(self) -> np.ndarray:
        """Read-only ascending uint64 mask array."""
        return self._masks

    def __len__(self) -> int:
        return len(self._masks)

    def __iter__(self) -> Iterator[Vertex]:
        for m in self._masks:
            yield Vertex(mask=int(m), dim=self.dim)

    def __getitem__(self, i: int) -> Vertex:
        return Vertex(mask=int(self._masks[i]), dim=self.dim)

    def __contains__(self, v: Vertex) -> bool:
        if not isinstance(v, Vertex) or v.dim != self.dim:
            return False
        i = int(np.searchsorted(self._masks, np.uint64(v.mask)))
        return i < len(self._masks) and int(self._masks[i]) == v.mask

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.dim == other.dim
            and np.array_equal(self._masks, other._masks)
        )

    def __repr__(self) -> str:
        return f"VertexSet(dim={self.dim}, size={len(self)})"


@dataclass(frozen=True)
class FamilySplit:
    """The four truncated families of a set, keyed by weight parity and last sign."""

    even_plus: VertexSet
    even_minus: VertexSet
    odd_plus: VertexSet
    odd_minus: VertexSet

    def items(self) -> tuple[tuple[str, VertexSet], ...]:
        return (
            ("even_plus", self.even_plus),
            ("even_minus", self.even_minus),
            ("odd_plus", self.odd_plus),
            ("odd_minus", self.odd_minus),
        )

    def total_size(self) -> int:
        return sum(len(fam) for _, fam in self.items())


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of an independence check."""

    ok: bool
    mode: str  # "exhaustive", "sampled" or "edgeless"
    violation: tuple[Vertex, Vertex] | None = None
    pairs_checked: int = 0
    trials: int | None = None
    seed: int | None = None
    violation_trial: int | None = None


def hamming(x: Vertex, y: Vertex) -> int:
    """Hamming distance: the number of coordinates where x and y differ."""
    if x.dim != y.dim:
        raise DimensionMismatch(f"dimensions {x.dim} and {y.dim} differ")
    return (x.mask ^ y.mask).bit_count()


def is_edge(x: Vertex, y: Vertex) -> bool:
    """Adjacency in the orthogonality graph: distance exactly n/2.

    Odd n has no orthogonal pairs, so the result is always False there.
    """
    n = x.dim
    if y.dim != n:
        raise DimensionMismatch(f"dimensions {n} and {y.dim} differ")
    if n % 2:
        return False
    return hamming(x, y) == n // 2


def _pair(s: VertexSet, i: int, j: int) -> tuple[Vertex, Vertex]:
    return s[i], s[j]


def verify_independent(s: VertexSet, *, guard: int = PAIRWISE_GUARD) -> VerificationResult:
    """Exhaustive pairwise independence check.

    Returns ok, or the lexicographically first violating pair (ascending mask
    order).  Sets larger than the guard must use the sampled variant.
    """
    n = s.dim
    if len(s) > guard:
        raise GuardExceeded(f"{len(s)} vertices exceed the exhaustive guard of {guard}")
    if n % 2:
        return VerificationResult(ok=True, mode="edgeless")
    total_pairs = len(s) * (len(s) - 1) // 2
    hit = kernels.pair_scan(s.masks, n // 2)
    if hit is None:
        return VerificationResult(ok=True, mode="exhaustive", pairs_checked=total_pairs)
    i, j = hit
    return VerificationResult(
        ok=False, mode="exhaustive", violation=_pair(s, i, j), pairs_checked=total_pairs
    )


def verify_independent_sampled(s: VertexSet, trials: int, seed: int) -> VerificationResult:
    """Seeded random-pair independence check; deterministic for a given seed.

    Each trial draws one uniform unordered pair (two stateless splitmix64
    draws; the tiny modulo bias at 64-bit range is negligible).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n = s.dim
    if n % 2:
        return VerificationResult(ok=True, mode="edgeless", trials=trials, seed=seed)
    if len(s) < 2:
        return VerificationResult(ok=True, mode="sampled", trials=trials, seed=seed)
    hit = kernels.sampled_scan(s.masks, n // 2, trials, seed)
    if hit is None:
        return VerificationResult(
            ok=True, mode="sampled", pairs_checked=trials, trials=trials, seed=seed
        )
    t, i, j = hit
    lo, hi = min(i, j), max(i, j)
    return VerificationResult(
        ok=False,
        mode="sampled",
        violation=_pair(s, lo, hi),
        pairs_checked=t + 1,
        trials=trials,
        seed=seed,
        violation_trial=t,
    )


def split_truncate(c: VertexSet) -> FamilySplit:
    """Split by (weight parity, sign of last coordinate) and drop that coordinate.

    Weight is the number of -1 coordinates; "plus" families collect vertices
    whose last coordinate is +1 (top bit clear).
    """
    n = c.dim
    if n < 2:
        raise ValueError("dimension must be at least 2 to truncate")
    arr = c.masks
    last = (arr >> np.uint64(n - 1)) & np.uint64(1)
    odd = np.bitwise_count(arr) & np.uint64(1)
    trunc = arr & np.uint64((1 << (n - 1)) - 1)

    def fam(parity: int, sign: int) -> VertexSet:
        sel = (odd == parity) & (last == sign)
        return VertexSet.from_masks(n - 1, trunc[sel])

    return FamilySplit(
        even_plus=fam(0, 0),
        even_minus=fam(0, 1),
        odd_plus=fam(1, 0),
        odd_minus=fam(1, 1),
    )


def distance_spectrum(s: VertexSet, *, guard: int = PAIRWISE_GUARD) -> set[int]:
    """The set of pairwise Hamming distances occurring in s (empty for |s| < 2)."""
    if len(s) > guard:
        raise GuardExceeded(f"{len(s)} vertices exceed the exhaustive guard of {guard}")
    if len(s) < 2:
        return set()
    counts = kernels.distance_counts(s.masks)
    return {d for d in range(len(counts)) if counts[d] > 0}


def write_set_file(path: str | os.PathLike, s: VertexSet) -> None:
    """Write one +/- line per vertex (position 0 first), ascending mask order.

    Output is byte-stable: no comments, no trailing junk, '\\n' line ends.
    """
    n = s.dim
    arr = s.masks
    with open(path, "wb") as fh:
        for lo in range(0, len(arr), _WRITE_CHUNK):
            chunk = arr[lo : lo + _WRITE_CHUNK].astype("<u8")
            bits = np.unpackbits(
                chunk.view(np.uint8).reshape(len(chunk), 8), axis=1, bitorder="little"
            )[:, :n]
            out = np.where(bits, np.uint8(ord("-")), np.uint8(ord("+")))
            lines = np.empty((len(chunk), n + 1), dtype=np.uint8)
            lines[:, :n] = out
            lines[:, n] = ord("\n")
            fh.write(lines.tobytes())


def _ascii_lines(fh, path):
    try:
        yield from fh
    except UnicodeDecodeError as exc:
        raise SetFileError(f"{path}: not an ASCII text file ({exc})") from exc


def read_set_file(path: str | os.PathLike) -> VertexSet:
    """Parse the +/- line format; blank lines and '#' comments are ignored.

    The dimension is inferred from the first vertex line and enforced on the
    rest; duplicate vertices are rejected.
    """
    masks: list[int] = []
    dim: int | None = None
    try:
        fh = open(path, "r", encoding="ascii")
    except UnicodeDecodeError as exc:  # pragma: no cover - open defers decoding
        raise SetFileError(f"{path}: not an ASCII text file ({exc})") from exc
    with fh:
        for lineno, raw in enumerate(_ascii_lines(fh, path), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if dim is None:
                dim = len(line)
                if not 1 <= dim <= MAX_DIM:
                    raise SetFileError(f"{path}:{lineno}: dimension {dim} outside 1..{MAX_DIM}")
            elif len(line) != dim:
                raise SetFileError(
                    f"{path}:{lineno}: length {len(line)} differs from dimension {dim}"
                )
            mask = 0
            for b, ch in enumerate(line):
                if ch == "-":
                    mask |= 1 << b
                elif ch != "+":
                    raise SetFileError(f"{path}:{lineno}: invalid character {ch!r}")
            masks.append(mask)
    if dim is None:
        raise SetFileError(f"{path}: no vertex lines found")
    if len(set(masks)) != len(masks):
        raise SetFileError(f"{path}: duplicate vertex lines")
    return VertexSet.from_masks(dim, masks)
