import math

import pytest

from orthocert import GuardExceeded, binom, binom_mod2, krawtchouk, krawtchouk_table

from oracles import falling_factorial_binom, krawtchouk_poly, poly_eval


def test_binom_basic_values():
    assert binom(7, 2) == 21
    assert binom(5, 5) == 1
    assert binom(4, 7) == 0


@pytest.mark.parametrize("t", [-9, -1, 0, 3, 100])
def test_binom_zero_lower_index(t):
    assert binom(t, 0) == 1


def test_binom_negative_upper_index():
    # (-1)(-2)(-3) / 3! = -1
    assert binom(-1, 3) == -1
    assert binom(-2, 2) == 3
    assert binom(-1, 1) == -1


def test_binom_matches_falling_factorial_oracle():
    for t in range(-25, 26):
        for r in range(0, 9):
            assert binom(t, r) == falling_factorial_binom(t, r)


def test_binom_rejects_negative_lower_index():
    with pytest.raises(ValueError):
        binom(5, -1)


def test_binom_mod2_values():
    assert binom_mod2(5, 2) == 0  # C(5,2) = 10
    assert binom_mod2(7, 3) == 1  # C(7,3) = 35
    assert binom_mod2(0, 0) == 1
    for a in range(10):
        assert binom_mod2(a, 0) == 1


def test_binom_mod2_matches_bigint_parity_small():
    for a in range(257):
        for b in range(a + 1):
            assert binom_mod2(a, b) == math.comb(a, b) % 2


def test_binom_mod2_rejects_negative():
    with pytest.raises(ValueError):
        binom_mod2(-1, 0)
    with pytest.raises(ValueError):
        binom_mod2(3, -2)


def test_krawtchouk_at_zero_is_binomial():
    for m in (3, 7, 11):
        for j in range(m + 1):
            assert krawtchouk(j, 0, m) == math.comb(m, j)
    assert krawtchouk(3, 0, 7) == 35


def test_krawtchouk_degree_one_is_linear():
    for m in (4, 7, 9):
        for i in range(m + 1):
            assert krawtchouk(1, i, m) == m - 2 * i
    assert krawtchouk(1, 2, 7) == 3


def test_krawtchouk_known_zero():
    assert krawtchouk(2, 1, 4) == 0


def test_krawtchouk_rejects_bad_degree():
    with pytest.raises(ValueError):
        krawtchouk(-1, 0, 5)
    with pytest.raises(ValueError):
        krawtchouk(6, 0, 5)


def test_krawtchouk_polynomial_extension_matches_oracle():
    # evaluation outside 0..m must agree with the symbolic polynomial
    for m in (3, 6):
        for j in range(m + 1):
            poly = krawtchouk_poly(j, m)
            for i in (-4, -1, m + 1, m + 5):
                assert krawtchouk(j, i, m) == poly_eval(poly, i)


def test_table_m1():
    table = krawtchouk_table(1)
    assert table.values == ((1, 1), (1, -1))


def test_table_matches_pointwise():
    for m in (2, 5, 8):
        table = krawtchouk_table(m)
        for i in range(m + 1):
            for j in range(m + 1):
                assert table.entry(i, j) == krawtchouk(j, i, m)


def test_table_row_zero_and_column_zero():
    for m in (3, 6, 10):
        table = krawtchouk_table(m)
        for j in range(m + 1):
            assert table.entry(0, j) == math.comb(m, j)
        for i in range(m + 1):
            assert table.entry(i, 0) == 1


def test_three_term_recurrence():
    # (j+1) K_{j+1}(i) = (m - 2i) K_j(i) - (m - j + 1) K_{j-1}(i)
    for m in (4, 7, 10):
        table = krawtchouk_table(m)
        for i in range(m + 1):
            for j in range(1, m):
                lhs = (j + 1) * table.entry(i, j + 1)
                rhs = (m - 2 * i) * table.entry(i, j) - (m - j + 1) * table.entry(i, j - 1)
                assert lhs == rhs


def test_symmetry_identity():
    # C(m, i) K_j(i) = C(m, j) K_i(j): binomial weight of the evaluation point
    for m in (4, 9):
        table = krawtchouk_table(m)
        for i in range(m + 1):
            for j in range(m + 1):
                assert math.comb(m, i) * table.entry(i, j) == math.comb(m, j) * table.entry(j, i)


def test_dual_orthogonality_small():
    for m in (1, 4, 8):
        table = krawtchouk_table(m)
        for i in range(m + 1):
            for l in range(m + 1):
                total = sum(table.entry(j, i) * table.entry(l, j) for j in range(m + 1))
                assert total == ((1 << m) if i == l else 0)


def test_table_guards():
    with pytest.raises(GuardExceeded):
        krawtchouk_table(0)
    with pytest.raises(GuardExceeded):
        krawtchouk_table(65)


def test_table_is_cached():
    assert krawtchouk_table(5) is krawtchouk_table(5)
