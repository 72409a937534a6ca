from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from battery_syt.shapes import (
    BatteryShape,
    SkewShape,
    TruncatedShape,
    as_partition,
    conjugate,
    hook_lengths,
    rect_minus_ratio,
    rotated_complement,
    syt_count_straight,
    validate_battery,
)
from conftest import all_partitions_up_to, subdiagrams


@st.composite
def partition_strategy(draw, max_n=14):
    n = draw(st.integers(min_value=0, max_value=max_n))
    bins = draw(st.integers(min_value=1, max_value=max(n, 1)))
    counts = Counter(draw(st.lists(st.integers(0, bins - 1), min_size=n, max_size=n)))
    return tuple(sorted(counts.values(), reverse=True))


def test_as_partition_canonicalizes():
    assert as_partition([3, 2, 1, 0, 0]) == (3, 2, 1)
    assert as_partition([]) == ()
    with pytest.raises(ValueError):
        as_partition([2, 3])
    with pytest.raises(ValueError):
        as_partition([3, -1])
    with pytest.raises(ValueError):
        as_partition([3, 0, 1])


def test_conjugate_known_values():
    assert conjugate((3, 2, 1)) == (3, 2, 1)
    assert conjugate((5, 3, 1)) == (3, 2, 2, 1, 1)
    assert conjugate(()) == ()


def test_conjugate_is_involution_exhaustive():
    for p in all_partitions_up_to(12):
        assert conjugate(conjugate(p)) == p


@given(partition_strategy())
def test_conjugate_is_involution_random(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


def test_hook_lengths_known_values():
    assert Counter(hook_lengths((3, 2, 1))) == Counter([5, 3, 1, 3, 1, 1])
    assert hook_lengths((1,)) == (1,)
    assert Counter(hook_lengths((2, 2))) == Counter([3, 2, 2, 1])


def test_hook_multiset_invariant_under_conjugation():
    for p in all_partitions_up_to(12):
        assert Counter(hook_lengths(p)) == Counter(hook_lengths(conjugate(p)))


def test_syt_count_known_values():
    assert syt_count_straight((3, 2, 1)) == 16
    assert syt_count_straight((1,)) == 1
    assert syt_count_straight(()) == 1
    # frozen from the linear-extension oracle (Catalan number for two equal rows)
    assert syt_count_straight((5, 5)) == 42


def test_syt_count_invariant_under_conjugation():
    for p in all_partitions_up_to(12):
        assert syt_count_straight(p) == syt_count_straight(conjugate(p))


def test_rect_minus_ratio_known_values():
    assert rect_minus_ratio(2, 2, 1) == 1
    assert rect_minus_ratio(3, 2, 2) == Fraction(2, 5)
    for m in range(1, 5):
        for n in range(1, 5):
            assert rect_minus_ratio(m, n, 0) == 1
    with pytest.raises(ValueError):
        rect_minus_ratio(3, 2, 3)


def test_rect_minus_ratio_matches_hook_length_counts():
    for m in range(1, 7):
        for n in range(1, 7):
            rect = syt_count_straight((m,) * n)
            for t in range(0, n + 1):
                removed = tuple(x for x in (m,) * (n - t) + (m - 1,) * t if x > 0)
                assert rect_minus_ratio(m, n, t) * rect == syt_count_straight(removed)


def test_rotated_complement_known_values():
    assert rotated_complement(3, 2, (2,)) == (3, 1)
    assert rotated_complement(3, 2, ()) == (3, 3)
    assert rotated_complement(3, 2, (3, 3)) == ()
    with pytest.raises(ValueError):
        rotated_complement(3, 2, (4,))
    with pytest.raises(ValueError):
        rotated_complement(3, 2, (2, 2, 2))


def test_rotated_complement_is_involution():
    for m in range(1, 6):
        for n in range(1, 6):
            for mu in subdiagrams(m, n):
                image = rotated_complement(m, n, mu)
                assert sum(image) == m * n - sum(mu)
                assert rotated_complement(m, n, image) == mu


def test_skew_shape_validation():
    s = SkewShape((4, 3, 2), (2, 1))
    assert s.size == 6
    assert s.row_spans() == ((2, 4), (1, 3), (0, 2))
    with pytest.raises(ValueError):
        SkewShape((3, 2), (4,))
    with pytest.raises(ValueError):
        SkewShape((3,), (1, 1))


def test_truncated_shape_validation():
    t = TruncatedShape(SkewShape((5, 5, 2, 1)), (2,))
    assert t.size == 11
    assert t.row_spans() == ((0, 3), (0, 5), (0, 2), (0, 1))
    # deleting too much from one row leaves column 2 split across rows 1 and 3
    with pytest.raises(ValueError):
        TruncatedShape(SkewShape((6, 4, 4)), (3, 3))
    with pytest.raises(ValueError):
        TruncatedShape(SkewShape((3, 2)), (4,))


def test_battery_shape_validation():
    ok = BatteryShape((4, 4, 4), 3, 2)
    assert ok.size == 15
    validate_battery(ok)
    # column 3 exists because the first row has length 3
    assert BatteryShape((3, 1), 1, 3).size == 5
    with pytest.raises(ValueError):
        BatteryShape((2, 2), 2, 3)
    with pytest.raises(ValueError):
        BatteryShape((2, 2), -1, 1)
    with pytest.raises(ValueError):
        BatteryShape((2, 2), 1, 0)
    with pytest.raises(ValueError):
        BatteryShape((), 1, 1)
    assert BatteryShape((), 0, 1).size == 0
    assert BatteryShape((2, 2), 0, 2).size == 4


def test_battery_shape_helpers():
    shape = BatteryShape((3, 3), 2, 2)
    assert shape.is_rectangle()
    assert not BatteryShape((3, 1), 0, 1).is_rectangle()
    assert shape.row_spans() == ((1, 2), (1, 2), (0, 3), (0, 3))
