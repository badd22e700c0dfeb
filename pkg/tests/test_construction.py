import math

import numpy as np
import pytest

from orthocert import (
    ExtremalSetSpec,
    a_n,
    build_extremal_set,
    chromatic_lower_bound,
    split_truncate,
    verify_independent,
)


def test_spec_parameters():
    spec = ExtremalSetSpec.for_dimension(16)
    assert spec.radius == 3
    assert spec.center_pair == (0, (1 << 15) - 1)
    with pytest.raises(ValueError):
        ExtremalSetSpec(n=8, center_pair=(0, 127), radius=4)  # balls overlap
    with pytest.raises(ValueError):
        ExtremalSetSpec.for_dimension(10)


def test_a_n_values():
    assert a_n(4) == 4
    assert a_n(8) == 32
    assert a_n(12) == 268
    assert a_n(16) == 2304
    assert a_n(20) == 20144
    assert a_n(24) == 178208
    assert a_n(32) == 14288896


def test_a_n_rejects_bad_dimension():
    for n in (0, -4, 6, 15):
        with pytest.raises(ValueError):
            a_n(n)


def test_build_n4_exact_vertices():
    # radius-0 balls around +++ and ---, both last signs
    s = build_extremal_set(4)
    assert [x.mask for x in s] == [0b0000, 0b0111, 0b1000, 0b1111]


@pytest.mark.parametrize("n", [4, 8, 12, 16])
def test_build_size_and_independence(n):
    s = build_extremal_set(n)
    assert len(s) == a_n(n)
    assert verify_independent(s).ok


def test_build_size_matches_formula_larger():
    for n in (20, 24, 28):
        assert len(build_extremal_set(n)) == a_n(n)


def test_negation_closure(set8, set16):
    for s in (set8, set16):
        full = np.uint64((1 << s.dim) - 1)
        assert np.array_equal(np.sort(s.masks ^ full), s.masks)


@pytest.mark.parametrize("n", [8, 16])
def test_family_sizes_meet_rank_bound(n):
    expected = sum(math.comb(n - 1, i) for i in range(n // 4))
    split = split_truncate(build_extremal_set(n))
    for _, fam in split.items():
        assert len(fam) == expected


def test_build_rejects_bad_dimension():
    with pytest.raises(ValueError):
        build_extremal_set(6)
    with pytest.raises(ValueError):
        build_extremal_set(68)


def test_chromatic_lower_bound_values():
    assert chromatic_lower_bound(4) == 4
    assert chromatic_lower_bound(8) == 8
    assert chromatic_lower_bound(16) == 29


def test_chromatic_lower_bound_guards():
    for n in (2, 12, 24):
        with pytest.raises(ValueError):
            chromatic_lower_bound(n)
