import math
from fractions import Fraction

import pytest

from orthocert import (
    ExactRationalMatrix,
    GuardExceeded,
    RatioBoundVoid,
    distance_matrix,
    krawtchouk,
    projection_entry,
    projection_matrix,
    ratio_bound,
    spectral_check,
    spectral_identities,
)
from orthocert.bose_mesner import _pairwise_distances

from oracles import krawtchouk_poly, poly_eval


class TestExactRationalMatrix:
    def test_entry_and_trace(self):
        m = ExactRationalMatrix([[1, 2], [3, 4]], den=2)
        assert m.entry(0, 1) == Fraction(1)
        assert m.entry(1, 0) == Fraction(3, 2)
        assert m.trace() == Fraction(5, 2)

    def test_add_aligns_denominators(self):
        a = ExactRationalMatrix([[1]], den=2)
        b = ExactRationalMatrix([[1]], den=3)
        assert (a + b).entry(0, 0) == Fraction(5, 6)

    def test_matmul_small(self):
        a = ExactRationalMatrix([[1, 2], [0, 1]], den=2)
        b = ExactRationalMatrix([[1, 0], [1, 1]], den=3)
        c = a @ b
        assert c.entry(0, 0) == Fraction(3, 6)
        assert c.entry(0, 1) == Fraction(2, 6)

    def test_matmul_bigint_fallback_is_exact(self):
        big = 1 << 70  # far beyond the int64 fast path
        a = ExactRationalMatrix([[big, 1], [0, big]])
        b = ExactRationalMatrix([[big, 0], [1, 1]])
        c = a @ b
        assert c.entry(0, 0) == big * big + 1
        assert c.entry(1, 1) == big

    def test_scaled_by_fraction(self):
        m = ExactRationalMatrix([[2, 4]], den=3)
        s = m.scaled(Fraction(3, 2))
        assert s.entry(0, 0) == Fraction(1)
        assert s.entry(0, 1) == Fraction(2)

    def test_equality_across_denominators(self):
        assert ExactRationalMatrix([[2]], den=4) == ExactRationalMatrix([[1]], den=2)
        assert ExactRationalMatrix([[1]], den=2) != ExactRationalMatrix([[1]], den=3)

    def test_negative_denominator_normalized(self):
        m = ExactRationalMatrix([[3]], den=-6)
        assert m.entry(0, 0) == Fraction(-1, 2)

    def test_transpose(self):
        m = ExactRationalMatrix([[1, 2], [3, 4]])
        assert m.transpose().entry(0, 1) == 3

    def test_reduced(self):
        m = ExactRationalMatrix([[2, 4], [6, 8]], den=4).reduced()
        assert m.den == 2
        assert m.entry(0, 0) == Fraction(1, 2)

    def test_rank(self):
        assert ExactRationalMatrix.identity(5).rank() == 5
        assert ExactRationalMatrix.zeros(3, 4).rank() == 0
        assert ExactRationalMatrix([[1, 2], [2, 4]]).rank() == 1
        assert ExactRationalMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]]).rank() == 3


class TestDistanceMatrix:
    def test_j0_is_identity(self):
        for m in (1, 3):
            assert distance_matrix(0, m) == ExactRationalMatrix.identity(1 << m)

    def test_m1_j1(self):
        assert distance_matrix(1, 1).to_fraction_rows() == [[0, 1], [1, 0]]

    def test_row_sums(self):
        m = 4
        for j in range(m + 1):
            mat = distance_matrix(j, m)
            for row in mat.to_fraction_rows():
                assert sum(row) == math.comb(m, j)

    def test_guards(self):
        with pytest.raises(GuardExceeded):
            distance_matrix(0, 14)
        with pytest.raises(ValueError):
            distance_matrix(5, 4)


class TestProjection:
    def test_entry_i0(self):
        for m in (3, 7):
            for j in range(m + 1):
                assert projection_entry(0, j, m) == Fraction(1, 1 << m)

    def test_entry_at_distance_zero(self):
        for m in (4, 7):
            for i in range(m + 1):
                assert projection_entry(i, 0, m) == Fraction(math.comb(m, i), 1 << m)

    def test_entry_example(self):
        assert projection_entry(1, 1, 7) == Fraction(5, 128)

    def test_entry_guards(self):
        with pytest.raises(ValueError):
            projection_entry(8, 0, 7)
        with pytest.raises(ValueError):
            projection_entry(0, -1, 7)

    def test_matrix_trace(self):
        for m, i in [(5, 2), (7, 1), (7, 3)]:
            assert projection_matrix(i, m).trace() == math.comb(m, i)

    def test_matrix_symmetric_idempotent(self):
        m = 5
        for i in range(m + 1):
            e = projection_matrix(i, m)
            assert e == e.transpose()
            assert e @ e == e

    def test_resolution_of_identity(self):
        m = 5
        total = projection_matrix(0, m)
        for i in range(1, m + 1):
            total = total + projection_matrix(i, m)
        assert total == ExactRationalMatrix.identity(1 << m)

    def test_rank_equals_trace(self):
        for m in (3, 5, 6):
            for i in range(m + 1):
                e = projection_matrix(i, m)
                assert e.rank() == math.comb(m, i) == e.trace()

    def test_rank_equals_trace_m7_spot(self):
        for i in (0, 1, 6, 7):
            assert projection_matrix(i, 7).rank() == math.comb(7, i)

    def test_rank_equals_trace_m9_spot(self):
        assert projection_matrix(1, 9).rank() == 9

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            projection_matrix(0, 12)


class TestSpectralCheck:
    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    def test_passes(self, m):
        report = spectral_check(m)
        assert report.ok
        assert all(report.identities.values())
        assert report.failures == []

    def test_failure_injection_reports_identity_and_index(self):
        m = 3
        a_mats = [distance_matrix(j, m) for j in range(m + 1)]
        e_mats = [projection_matrix(i, m) for i in range(m + 1)]
        rows = e_mats[2].to_fraction_rows()
        rows[0][0] += Fraction(1, 1 << m)
        e_mats[2] = ExactRationalMatrix.from_fractions(rows)
        report = spectral_identities(a_mats, e_mats, m)
        assert not report.ok
        assert any("E_2" in f for f in report.failures)
        assert not report.identities["orthogonal_idempotents"]

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            spectral_check(10)


class TestRatioBound:
    def test_n4_exact(self):
        # eigenvalues of the distance-2 graph on 4 bits: {6, 0, -2};
        # 16 * 2 / (6 + 2) = 4
        assert ratio_bound(4, 2) == 4
        eigs = [poly_eval(krawtchouk_poly(2, 4), i) for i in range(5)]
        assert min(eigs) == -2 and max(eigs) == 6

    def test_n8_matches_construction_size(self):
        assert ratio_bound(8, 4) == 32

    def test_upper_bounds_known_alpha(self):
        from orthocert import a_n

        for n in (4, 8, 16):
            bound = ratio_bound(n, n // 2)
            assert bound >= a_n(n)

    def test_bipartite_case_tight(self):
        # odd j makes the eigenvalue set symmetric, so the bound is 2^(n-1)
        assert ratio_bound(6, 3) == 32

    def test_void_signaled(self):
        with pytest.raises(RatioBoundVoid):
            ratio_bound(5, 0)


def test_pairwise_distance_table_blocks_consistent():
    table = _pairwise_distances(4)
    for x in range(16):
        for y in range(16):
            assert table[x, y] == bin(x ^ y).count("1")


def test_krawtchouk_eigenvalue_relation():
    # A_j E_i = K_j(i) E_i: the defining eigenvalue property, m = 4
    m = 4
    for j in range(m + 1):
        a = distance_matrix(j, m)
        for i in range(m + 1):
            e = projection_matrix(i, m)
            assert a @ e == e.scaled(krawtchouk(j, i, m))
