import pytest
from hypothesis import given, strategies as st

from oracles import p_pentagonal, partitions_naive
from sptcrank.partitions import (
    COUNT_MAX,
    EMPTY,
    INFINITY,
    bounded_partitions,
    checked_count,
    conjugate,
    count_partitions,
    distinct_partitions,
    enumerate_partitions,
    format_partition,
    is_partition,
    make_partition,
    parse_partition,
    smallest_part,
)


def test_empty_partition():
    assert list(enumerate_partitions(0)) == [EMPTY]
    assert count_partitions(0) == 1
    assert smallest_part(EMPTY) == INFINITY


def test_partitions_of_four_in_order():
    assert list(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_nine_has_thirty():
    assert sum(1 for _ in enumerate_partitions(9)) == 30 == count_partitions(9)


@pytest.mark.parametrize("n", range(0, 26))
def test_enumeration_matches_naive_listing(n):
    assert list(enumerate_partitions(n)) == list(partitions_naive(n))


def test_enumeration_count_matches_dp_up_to_40():
    for n in range(41):
        assert sum(1 for _ in enumerate_partitions(n)) == count_partitions(n)


def test_p50_against_pentagonal_recurrence():
    assert count_partitions(50) == p_pentagonal(50) == 204226


def test_dp_matches_pentagonal_up_to_300():
    for n in range(301):
        assert count_partitions(n) == p_pentagonal(n)


def test_overflow_is_detected():
    assert count_partitions(405) <= COUNT_MAX
    with pytest.raises(OverflowError):
        count_partitions(406)
    with pytest.raises(OverflowError):
        checked_count(COUNT_MAX + 1)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))
    with pytest.raises(ValueError):
        count_partitions(-3)


def test_bounded_and_distinct():
    assert sorted(bounded_partitions(6, smallest=2)) == sorted([(6,), (4, 2), (3, 3), (2, 2, 2)])
    assert sorted(distinct_partitions(6)) == sorted([(6,), (5, 1), (4, 2), (3, 2, 1)])
    assert sorted(distinct_partitions(7, smallest=2)) == sorted([(7,), (5, 2), (4, 3)])
    for n in range(15):
        naive = [la for la in partitions_naive(n) if len(set(la)) == len(la)]
        assert sorted(distinct_partitions(n)) == sorted(naive)


def test_is_partition():
    assert is_partition(())
    assert is_partition((3, 3, 1))
    assert not is_partition((1, 3))
    assert not is_partition((2, 0))
    assert not is_partition([2, 1])
    with pytest.raises(ValueError):
        make_partition([1, 2])


@given(st.lists(st.integers(1, 12), max_size=12))
def test_conjugate_is_an_involution(parts):
    la = tuple(sorted(parts, reverse=True))
    mu = conjugate(la)
    assert is_partition(mu)
    assert sum(mu) == sum(la)
    assert conjugate(mu) == la
    assert len(mu) == (la[0] if la else 0)


def test_parse_partition():
    assert parse_partition("5,4,2,1") == ((5, 4, 2, 1), False)
    assert parse_partition("1,2,2") == ((2, 2, 1), True)
    assert parse_partition("(3, 1)") == ((3, 1), False)
    for empty in ("", "-", "0", "()", "∅"):
        assert parse_partition(empty) == (EMPTY, False)
    with pytest.raises(ValueError):
        parse_partition("3,x")
    with pytest.raises(ValueError):
        parse_partition("3,-1")


def test_format_partition():
    assert format_partition((5, 5, 1)) == "(5,5,1)"
    assert format_partition(()) == "()"
