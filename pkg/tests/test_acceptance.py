"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with output visible:

    pytest tests/test_acceptance.py -v -s
"""

import json
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from orthocert import (
    ExactRationalMatrix,
    a_n,
    build_extremal_set,
    build_restricted_X,
    certify,
    chromatic_lower_bound,
    binom_mod2,
    distance_matrix,
    distance_spectrum,
    gf2_rank,
    krawtchouk_expand,
    krawtchouk_table,
    max_independent_set,
    phi_eval_rational,
    projection_matrix,
    spectral_check,
    split_truncate,
    verify_independent,
    verify_independent_sampled,
    VertexSet,
)
from orthocert.certificate import Gf2Matrix
from orthocert.cli import EXIT_OK, main

from oracles import triangular_expansion


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"[FAIL] criterion {number}: {description}")
        raise
    print(f"[PASS] criterion {number}: {description}")


def _run_cli_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    return code, doc


def test_criterion_1_closed_form_sizes(capsys):
    with criterion(1, "cmd_bound reproduces a_16 = 2304 and a_24 = 178208 in < 1 s"):
        start = time.perf_counter()
        code16, doc16 = _run_cli_json(capsys, "bound", "--n", "16")
        code24, doc24 = _run_cli_json(capsys, "bound", "--n", "24")
        elapsed = time.perf_counter() - start
        assert code16 == EXIT_OK and code24 == EXIT_OK
        assert doc16["results"]["a_n"] == "2304"
        assert doc24["results"]["a_n"] == "178208"
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_2_exact_ground_truth():
    with criterion(2, "exact solver: alpha = 4 at n = 4 and 32 at n = 8 in < 60 s"):
        start = time.perf_counter()
        size4, witness4 = max_independent_set(4)
        size8, witness8 = max_independent_set(8)
        elapsed = time.perf_counter() - start
        assert size4 == 4 == a_n(4)
        assert size8 == 32 == a_n(8)
        assert verify_independent(witness4).ok and len(witness4) == 4
        assert verify_independent(witness8).ok and len(witness8) == 32
        assert elapsed < 60.0, f"took {elapsed:.3f}s"


def test_criterion_3_construction_tightness():
    with criterion(
        3,
        "double-ball set: size a_n and exhaustive verification for n in {4, 8, "
        "12, 16} (n = 16 < 10 s); 10^7 seeded trials clean at n = 32",
    ):
        for n in (4, 8, 12):
            s = build_extremal_set(n)
            assert len(s) == a_n(n)
            assert verify_independent(s).ok
        start = time.perf_counter()
        s16 = build_extremal_set(16)
        assert len(s16) == a_n(16) == 2304
        result = verify_independent(s16)
        elapsed = time.perf_counter() - start
        assert result.ok and result.pairs_checked == 2304 * 2303 // 2
        assert elapsed < 10.0, f"n = 16 took {elapsed:.3f}s"

        s32 = build_extremal_set(32)
        assert len(s32) == a_n(32) == 14288896
        sampled = verify_independent_sampled(s32, 10_000_000, seed=20260808)
        assert sampled.ok and sampled.trials == 10_000_000


def test_criterion_4_certificate_validity():
    with criterion(
        4,
        "certify(k) valid with total_bound = a_(2^k) for k in {3..6}; k = 3 "
        "coefficients are (3/4, -1/4) against the triangular-solve oracle; < 5 s",
    ):
        start = time.perf_counter()
        for k in (3, 4, 5, 6):
            report = certify(k)
            assert report.valid, report.reasons
            assert report.total_bound == a_n(1 << k)
        coeffs = krawtchouk_expand(3)
        assert (coeffs[0], coeffs[1]) == (Fraction(3, 4), Fraction(-1, 4))
        assert list(coeffs) == triangular_expansion(3)
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, f"took {elapsed:.3f}s"


def test_criterion_5_mod2_identity_at_n16(set16):
    with criterion(
        5,
        "n = 16 witness: every truncated family gives X-bar = I mod 2 with "
        "GF(2) rank 576 = sum_(i<=3) C(15, i); < 30 s",
    ):
        start = time.perf_counter()
        expected = sum(math.comb(15, i) for i in range(4))
        assert expected == 576
        split = split_truncate(set16)
        for label, fam in split.items():
            assert len(fam) == 576, label
            entries = build_restricted_X(fam, 4)
            for i, row in enumerate(entries):
                for j, v in enumerate(row):
                    assert v % 2 == (1 if i == j else 0), (label, i, j)
            rank = gf2_rank(Gf2Matrix.from_integer_matrix(entries))
            assert rank == 576, label
        report = certify(4, set16)
        assert report.valid and report.witness.equality
        elapsed = time.perf_counter() - start
        assert elapsed < 30.0, f"took {elapsed:.3f}s"


def test_criterion_6_spectral_identities():
    with criterion(
        6,
        "spectral_check exact at m = 3, 5, 7 (sum, products, expansion, "
        "traces); k = 3 identity X = 2^7 (c0 E0 + c1 E1) holds entrywise",
    ):
        for m in (3, 5, 7):
            report = spectral_check(m)
            assert report.ok, report.failures
            assert report.identities["projection_traces"]
        m = 7
        coeffs = krawtchouk_expand(3)
        x = distance_matrix(0, m).scaled(phi_eval_rational(0, 3))
        for j in range(1, m + 1):
            x = x + distance_matrix(j, m).scaled(phi_eval_rational(j, 3))
        rhs = (
            projection_matrix(0, m).scaled(coeffs[0])
            + projection_matrix(1, m).scaled(coeffs[1])
        ).scaled(1 << m)
        assert x == rhs


def test_criterion_7_property_suites():
    with criterion(
        7,
        "dual orthogonality for m <= 12; Lucas parity vs big-integer parity "
        "exhaustive to 1024; random independent-set family spectra admissible",
    ):
        for m in range(1, 13):
            table = krawtchouk_table(m)
            for i in range(m + 1):
                for l in range(m + 1):
                    total = sum(
                        table.entry(j, i) * table.entry(l, j) for j in range(m + 1)
                    )
                    assert total == ((1 << m) if i == l else 0)

        for a in range(1025):
            for b in range(a + 1):
                assert binom_mod2(a, b) == math.comb(a, b) % 2

        for n, seed in ((8, 101), (8, 102), (16, 103), (16, 104)):
            rng = random.Random(seed)
            chosen: list[int] = []
            for _ in range(400):
                cand = rng.randrange(1 << n)
                if cand in chosen:
                    continue
                if any(bin(cand ^ c).count("1") == n // 2 for c in chosen):
                    continue
                chosen.append(cand)
            s = VertexSet.from_masks(n, chosen)
            assert verify_independent(s).ok
            allowed = {2 * t for t in range(n // 2) if t != n // 4}
            for _, fam in split_truncate(s).items():
                assert distance_spectrum(fam) <= allowed


def test_criterion_8_chromatic_remark():
    with criterion(8, "chromatic lower bound at n = 16 is 29 = ceil(2^16 / 2304)"):
        assert chromatic_lower_bound(16) == 29
        assert 29 == -(-(1 << 16) // 2304)
