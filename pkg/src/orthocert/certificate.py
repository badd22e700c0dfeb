"""Mechanical rank certificate for the power-of-two upper bound.

For n = 2^k the pipeline works in dimension m = 2^k - 1 with the polynomial

    phi(x) = C(x/2 - 1, 2^(k-2) - 1),

of degree 2^(k-2) - 1 in x.  Three facts combine into the bound:

  * phi takes odd values on the diagonal (distance 0) and even values at
    every other admissible distance 2s (s != 2^(k-2)), by Lucas parity of
    C(s - 1, 2^(k-2) - 1).  Hence the matrix [phi(d(x, y))] restricted to a
    truncated family is congruent to the identity mod 2 and is invertible.
  * phi expands in Krawtchouk polynomials using only degrees below 2^(k-2),
    so that matrix lies in the span of the first 2^(k-2) eigenprojectors and
    its rank is at most sum_{i < 2^(k-2)} C(m, i).
  * Any independent set splits into four truncated families, each of whose
    pairwise distances are admissible, so its size is at most four times the
    family bound, which equals the double-ball construction size exactly.

Everything below is exact integer or rational arithmetic; a certificate is
emitted only when every check passes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .combinatorics import binom, binom_mod2, krawtchouk_table
from .construction import a_n
from .errors import (
    CertificationError,
    ConsistencyError,
    DimensionMismatch,
    GuardExceeded,
    InadmissibleDistance,
)
from .hypercube import VertexSet, split_truncate

RESTRICTED_MATRIX_GUARD = 4096


def _require_k(k: int):
    if k < 3:
        raise ValueError(f"exponent k must be at least 3, got {k} (k = 2 is the trivial case)")


def phi_eval(xi: int, k: int) -> int:
    """phi at an even point 2s: the integer C(s - 1, 2^(k-2) - 1).

    Only even arguments in 0..2^k - 2 give integer values; odd arguments must
    go through phi_eval_rational.
    """
    _require_k(k)
    if xi % 2:
        raise ValueError(f"odd argument {xi}: use phi_eval_rational")
    if not 0 <= xi <= (1 << k) - 2:
        raise ValueError(f"argument {xi} outside 0..{(1 << k) - 2}")
    return binom(xi // 2 - 1, (1 << (k - 2)) - 1)


def phi_eval_rational(xi: int, k: int) -> Fraction:
    """phi at any integer point, as the degree-(2^(k-2) - 1) polynomial in xi."""
    _require_k(k)
    r = (1 << (k - 2)) - 1
    prod = Fraction(1)
    half = Fraction(xi, 2)
    for s in range(r):
        prod *= half - 1 - s
    return prod / math.factorial(r)


def krawtchouk_expand(k: int) -> list[Fraction]:
    """Exact Krawtchouk coefficients c_0..c_m of phi on m = 2^k - 1.

    Uses dual orthogonality: c_i = 2^-m sum_j phi(j) K_j(i; m).  The result
    is re-checked by reconstructing phi at every integer point 0..m; a
    mismatch aborts, since nothing downstream would be trustworthy.
    """
    _require_k(k)
    m = (1 << k) - 1
    table = krawtchouk_table(m)
    phis = [phi_eval_rational(j, k) for j in range(m + 1)]
    scale = Fraction(1, 1 << m)
    coeffs = [
        scale * sum(phis[j] * table.entry(i, j) for j in range(m + 1))
        for i in range(m + 1)
    ]
    for xi in range(m + 1):
        recon = sum(coeffs[i] * table.entry(xi, i) for i in range(m + 1))
        if recon != phis[xi]:
            raise ConsistencyError(
                f"Krawtchouk expansion does not reconstruct phi at {xi} (k={k})"
            )
    return coeffs


def admissible_distances(k: int) -> set[int]:
    """Distances a truncated family can realize: even, below 2^k - 1, not 2^(k-1)."""
    _require_k(k)
    half = 1 << (k - 1)
    return {2 * s for s in range(half) if s != half // 2}


def mod2_identity_check(k: int) -> tuple[int, list[int]]:
    """Parity certificate: phi odd at 0 and even at every other admissible 2s.

    Returns (bit, failing s values).  The diagonal s = 0 is evaluated
    directly (its binomial has upper argument -1, outside Lucas' theorem);
    s >= 1 uses Lucas parity of C(s - 1, 2^(k-2) - 1).
    """
    _require_k(k)
    r = (1 << (k - 2)) - 1
    failing = []
    if binom(-1, r) % 2 == 0:
        failing.append(0)
    for s in range(1, 1 << (k - 1)):
        if s == 1 << (k - 2):
            continue
        if binom_mod2(s - 1, r):
            failing.append(s)
    return (0 if failing else 1), failing


@dataclass(frozen=True)
class Gf2Matrix:
    """Bit matrix with packed integer rows (bit b of a row = column b)."""

    rows: tuple[int, ...]
    cols: int

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(rows=tuple(1 << i for i in range(n)), cols=n)

    @classmethod
    def from_integer_matrix(cls, entries: list[list[int]]) -> "Gf2Matrix":
        cols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            packed = 0
            for b, v in enumerate(row):
                if v & 1:
                    packed |= 1 << b
            rows.append(packed)
        return cls(rows=tuple(rows), cols=cols)


def gf2_rank(matrix: Gf2Matrix) -> int:
    """Rank over the two-element field, via packed-word elimination."""
    return kernels.gf2_rank(list(matrix.rows), matrix.cols)


def build_restricted_X(cprime: VertexSet, k: int) -> list[list[int]]:
    """Matrix [phi(d(x, y))] over a truncated family, as exact integers.

    Every pairwise distance must be admissible (even, not 2^(k-1)); the first
    offending pair, if any, is reported, since it means the input cannot come
    from an independent set.  Dense materialization is capped at
    RESTRICTED_MATRIX_GUARD members.
    """
    _require_k(k)
    m = (1 << k) - 1
    if cprime.dim != m:
        raise DimensionMismatch(f"family dimension {cprime.dim}, expected {m}")
    if len(cprime) > RESTRICTED_MATRIX_GUARD:
        raise GuardExceeded(
            f"{len(cprime)} members exceed the dense-matrix guard of "
            f"{RESTRICTED_MATRIX_GUARD}; certify without a witness at this scale"
        )
    masks = cprime.masks
    dists = np.bitwise_count(masks[:, None] ^ masks[None, :])
    allowed = np.zeros(m + 2, dtype=bool)
    for d in admissible_distances(k):
        allowed[d] = True
    bad = ~allowed[dists]
    np.fill_diagonal(bad, False)
    if bad.any():
        flat = int(np.argmax(bad))
        i, j = divmod(flat, len(masks))
        raise InadmissibleDistance(
            f"distance {int(dists[i, j])} between members {i} and {j} is not admissible",
            pair=(cprime[i], cprime[j]),
        )
    phi_by_distance = [0] * (m + 1)
    for d in admissible_distances(k):
        phi_by_distance[d] = phi_eval(d, k)
    if k <= 7:  # phi values fit int64 up to C(62, 31); use a vectorized lookup
        lut = np.array(phi_by_distance, dtype=np.int64)
        return lut[dists].tolist()
    return [[phi_by_distance[d] for d in row] for row in dists.tolist()]


def family_rank_bound(k: int) -> int:
    """Certified per-family bound: sum_{i < 2^(k-2)} C(2^k - 1, i).

    Refuses to emit the number unless the parity and degree checks pass,
    because only then is the rank argument sound.
    """
    _require_k(k)
    ok, failing = mod2_identity_check(k)
    if not ok:
        raise CertificationError(f"parity check failed at s in {failing}")
    coeffs = krawtchouk_expand(k)
    cutoff = 1 << (k - 2)
    if any(coeffs[i] for i in range(cutoff, len(coeffs))):
        raise CertificationError("phi uses Krawtchouk degrees above the cutoff")
    return _rank_sum(k)


def _rank_sum(k: int) -> int:
    m = (1 << k) - 1
    return sum(math.comb(m, i) for i in range(1 << (k - 2)))


@dataclass(frozen=True)
class FamilyEvidence:
    """Witness-side record for one truncated family."""

    label: str
    size: int
    identity_mod2_ok: bool
    gf2_rank: int
    rank_equals_size: bool
    inadmissible_pair: str | None = None


@dataclass(frozen=True)
class WitnessEvidence:
    size: int
    families: tuple[FamilyEvidence, ...]
    within_bound: bool
    equality: bool


@dataclass(frozen=True)
class CertificateReport:
    """Full result of the certificate pipeline, JSON-serializable and diffable."""

    k: int
    n: int
    m: int
    trivial: bool
    phi_values: tuple[Fraction, ...]
    coefficients: tuple[Fraction, ...]
    mod2_ok: bool
    mod2_witnesses: tuple[int, ...]
    degree_ok: bool
    family_rank_bound: int
    total_bound: int
    matches_a_n: bool
    valid: bool
    reasons: tuple[str, ...] = ()
    witness: WitnessEvidence | None = None

    def to_json_dict(self) -> dict:
        """Canonical dict: rationals as 'p/q' strings, large integers as strings."""
        doc = {
            "k": self.k,
            "n": self.n,
            "m": self.m,
            "trivial": self.trivial,
            "phi_values": [str(f) for f in self.phi_values],
            "coefficients": [str(f) for f in self.coefficients],
            "mod2_ok": self.mod2_ok,
            "mod2_witnesses": list(self.mod2_witnesses),
            "degree_ok": self.degree_ok,
            "family_rank_bound": str(self.family_rank_bound),
            "total_bound": str(self.total_bound),
            "matches_a_n": self.matches_a_n,
            "valid": self.valid,
            "reasons": list(self.reasons),
        }
        if self.witness is not None:
            doc["witness"] = {
                "size": self.witness.size,
                "within_bound": self.witness.within_bound,
                "equality": self.witness.equality,
                "families": [
                    {
                        "label": f.label,
                        "size": f.size,
                        "identity_mod2_ok": f.identity_mod2_ok,
                        "gf2_rank": f.gf2_rank,
                        "rank_equals_size": f.rank_equals_size,
                        "inadmissible_pair": f.inadmissible_pair,
                    }
                    for f in self.witness.families
                ],
            }
        else:
            doc["witness"] = None
        return doc


def _check_family(label: str, fam: VertexSet, k: int) -> FamilyEvidence:
    try:
        entries = build_restricted_X(fam, k)
    except InadmissibleDistance as exc:
        x, y = exc.pair
        return FamilyEvidence(
            label=label,
            size=len(fam),
            identity_mod2_ok=False,
            gf2_rank=0,
            rank_equals_size=False,
            inadmissible_pair=f"{x.to_pm_string()} / {y.to_pm_string()}",
        )
    size = len(fam)
    mod2_ok = True
    for i, row in enumerate(entries):
        for j, v in enumerate(row):
            if v % 2 != (1 if i == j else 0):
                mod2_ok = False
                break
        if not mod2_ok:
            break
    rank = gf2_rank(Gf2Matrix.from_integer_matrix(entries)) if size else 0
    return FamilyEvidence(
        label=label,
        size=size,
        identity_mod2_ok=mod2_ok,
        gf2_rank=rank,
        rank_equals_size=rank == size,
    )


def _trivial_report(witness_set: VertexSet | None) -> CertificateReport:
    # k = 2: the bound 4 needs no polynomial machinery
    bound = a_n(4)
    witness = None
    reasons = ["trivial case: k = 2, bound 4"]
    valid = True
    if witness_set is not None:
        if witness_set.dim != 4:
            raise DimensionMismatch(f"witness dimension {witness_set.dim}, expected 4")
        within = len(witness_set) <= bound
        witness = WitnessEvidence(
            size=len(witness_set),
            families=(),
            within_bound=within,
            equality=len(witness_set) == bound,
        )
        if not within:
            valid = False
            reasons.append("witness exceeds the bound")
    return CertificateReport(
        k=2,
        n=4,
        m=3,
        trivial=True,
        phi_values=(),
        coefficients=(),
        mod2_ok=True,
        mod2_witnesses=(),
        degree_ok=True,
        family_rank_bound=1,
        total_bound=bound,
        matches_a_n=True,
        valid=valid,
        reasons=tuple(reasons),
        witness=witness,
    )


def certify(k: int, witness_set: VertexSet | None = None) -> CertificateReport:
    """Run the whole certificate pipeline for n = 2^k.

    Without a witness the report certifies the unconditional upper bound
    4 * sum_{i < 2^(k-2)} C(2^k - 1, i) = a_n.  With a witness set it also
    splits the set into its four truncated families, checks each restricted
    matrix is congruent to the identity mod 2 with full GF(2) rank, and
    records whether the witness meets the bound with equality.
    """
    if k < 2:
        raise ValueError(f"exponent k must be at least 2, got {k}")
    if k == 2:
        return _trivial_report(witness_set)

    n = 1 << k
    m = n - 1
    reasons: list[str] = []

    phis = tuple(phi_eval_rational(j, k) for j in range(m + 1))
    coeffs = tuple(krawtchouk_expand(k))
    cutoff = 1 << (k - 2)
    degree_ok = not any(coeffs[i] for i in range(cutoff, m + 1))
    if not degree_ok:
        reasons.append("phi uses Krawtchouk degrees above the cutoff")
    mod2_bit, failing = mod2_identity_check(k)
    if not mod2_bit:
        reasons.append(f"parity check failed at s in {failing}")

    bound = _rank_sum(k)
    total = 4 * bound
    matches = total == a_n(n)
    if not matches:
        reasons.append("rank sum does not equal the construction size")

    witness = None
    if witness_set is not None:
        if witness_set.dim != n:
            raise DimensionMismatch(f"witness dimension {witness_set.dim}, expected {n}")
        split = split_truncate(witness_set)
        families = tuple(
            _check_family(label, fam, k) for label, fam in split.items()
        )
        for fev in families:
            if fev.inadmissible_pair is not None:
                reasons.append(
                    f"family {fev.label}: inadmissible pair {fev.inadmissible_pair}"
                )
            elif not fev.identity_mod2_ok:
                reasons.append(f"family {fev.label}: matrix not congruent to I mod 2")
            elif not fev.rank_equals_size:
                reasons.append(
                    f"family {fev.label}: GF(2) rank {fev.gf2_rank} below size {fev.size}"
                )
        size = len(witness_set)
        within = size <= total
        if not within:
            reasons.append(f"witness size {size} exceeds the bound {total}")
        witness = WitnessEvidence(
            size=size,
            families=families,
            within_bound=within,
            equality=size == total,
        )

    valid = not reasons
    return CertificateReport(
        k=k,
        n=n,
        m=m,
        trivial=False,
        phi_values=phis,
        coefficients=coeffs,
        mod2_ok=bool(mod2_bit),
        mod2_witnesses=tuple(failing),
        degree_ok=degree_ok,
        family_rank_bound=bound,
        total_bound=total,
        matches_a_n=matches,
        valid=valid,
        reasons=tuple(reasons),
        witness=witness,
    )
