import pytest
from hypothesis import given, strategies as st

from oracles import crank_naive, p_pentagonal, partitions_naive, rank_set_naive
from sptcrank import stats
from sptcrank.partitions import count_partitions, enumerate_partitions


def test_rank_examples():
    assert stats.rank((7, 7, 6, 4, 3, 3, 2, 2, 2)) == -2
    assert stats.rank((1,)) == 0
    assert stats.rank((4,)) == 3
    with pytest.raises(ValueError):
        stats.rank(())


def test_crank_examples():
    assert stats.crank((4,)) == 4
    assert stats.crank((1,)) == -1
    # two ones, no part above 2: 0 - 2
    assert stats.crank((2, 1, 1)) == -2 == crank_naive((2, 1, 1))
    assert stats.crank((3, 1)) == 0
    with pytest.raises(ValueError):
        stats.crank(())


def test_crank_against_definition():
    for n in range(1, 18):
        for la in partitions_naive(n):
            assert stats.crank(la) == crank_naive(la)


def test_rank_set_example():
    la = (5, 5, 4, 3, 1)
    assert stats.rank_set_prefix(la) == [-5, -4, -2, 0, 3]
    assert rank_set_naive(la, 8) == [-5, -4, -2, 0, 3, 5, 6, 7, 8]
    assert stats.rank_set_contains(la, 0)
    assert not stats.rank_set_contains(la, 1)
    assert stats.rank_set_contains(la, 5)
    assert not stats.rank_set_contains(la, 4)


def test_rank_set_of_empty_partition():
    assert all(stats.rank_set_contains((), m) for m in range(5))
    assert not any(stats.rank_set_contains((), m) for m in range(-5, 0))


def test_rank_set_membership_against_listing():
    for n in range(0, 16):
        for la in partitions_naive(n):
            listed = set(rank_set_naive(la, n + 3))
            for m in range(-n - 1, n + 3):
                assert stats.rank_set_contains(la, m) == (m in listed), (la, m)


def test_q_of_one_four():
    assert stats.q_count(1, 4) == 3
    hits = [la for la in enumerate_partitions(4) if stats.rank_set_contains(la, 1)]
    assert hits == [(4,), (2, 1, 1), (1, 1, 1, 1)]


def test_q_and_p_rank_small_values():
    assert stats.q_count(0, 0) == 1
    assert stats.p_rank_at_least(0, 0) == 1
    assert stats.p_rank_at_least(0, 1) == 1
    # ranks of partitions of 4: 3, 1, 0, -1, -3
    assert stats.p_rank_at_least(1, 4) == 4
    assert stats.q_count(0, 6) == sum(1 for la in partitions_naive(6) if 0 in rank_set_naive(la, 6))


@pytest.mark.parametrize("n", range(0, 26))
def test_counts_against_brute_force(n):
    parts = list(partitions_naive(n))
    for m in range(0, n + 2):
        q = sum(1 for la in parts if m in rank_set_naive(la, m))
        pr = sum(1 for la in parts if not la or la[0] - len(la) >= -m)
        assert stats.q_count(m, n) == q
        assert stats.p_rank_at_least(m, n) == pr
        if n >= 1:
            assert stats.crank_at_most(m, n) == sum(1 for la in parts if crank_naive(la) <= m)


def test_n1_crank_convention():
    assert stats.M(0, 1) == -1
    assert stats.M(1, 1) == stats.M(-1, 1) == 1
    assert stats.M(0, 1, convention=False) == 0
    assert stats.M(-1, 1, convention=False) == 1
    assert stats.M_leq(0, 1) == -1
    assert stats.M_leq(1, 1) == 1


def test_n0_convention():
    assert stats.N(0, 0) == 1
    assert stats.M(0, 0) == 1
    assert stats.N_leq(0, 0) == stats.M_leq(0, 0) == 1


def test_leq_top_values():
    for n in range(2, 30):
        p = count_partitions(n)
        assert stats.N_leq(n - 1, n) == p
        assert stats.M_leq(n - 1, n) == p - 2


def test_N_leq_zero_four():
    ranks = [la[0] - len(la) for la in partitions_naive(4)]
    assert stats.N_leq(0, 4) == ranks.count(0) == 1


def test_rank_crank_table():
    t = stats.rank_crank_table(4)
    assert t.n == 4
    assert sum(t.rank_counts.values()) == 5
    assert sum(t.crank_counts.values()) == 5
    assert t.N(3) == 1 and t.N(-3) == 1
    assert t.convention_flag


@pytest.mark.parametrize("n", range(2, 41))
def test_identities_up_to_40(n):
    p = count_partitions(n)
    assert p == p_pentagonal(n)
    assert sum(stats.N(r, n) for r in range(-n, n + 1)) == p
    assert sum(stats.M(r, n) for r in range(-n, n + 1)) == p
    for m in range(0, n + 1):
        assert stats.N(m, n) == stats.N(-m, n)
        assert stats.M(m, n) == stats.M(-m, n)
        q, pr = stats.q_count(m, n), stats.p_rank_at_least(m, n)
        assert stats.crank_at_most(m, n) == q
        assert stats.N_leq(m, n) == 2 * pr - p
        assert stats.M_leq(m, n) == 2 * q - p
        assert stats.N_leq(m, n) - stats.M_leq(m, n) == 2 * (pr - q)


def test_moments_small():
    # ranks of partitions of 4: 3, 1, 0, -1, -3
    assert stats.rank_moment(2, 4) == 9 + 1 + 0 + 1 + 9
    assert stats.positive_rank_moment(2, 4) == 10
    assert stats.positive_rank_moment(1, 1) == 0
    assert stats.positive_crank_moment(1, 1) == 1
    for n in range(1, 30):
        assert stats.rank_moment(1, n) == 0


def test_moment_domain():
    with pytest.raises(ValueError):
        stats.rank_moment(0, 3)
    with pytest.raises(ValueError):
        stats.crank_moment(2, 0)


def test_moments_are_not_capped():
    # order-12 crank moment at 40 is past 2**63 and must stay exact
    assert stats.crank_moment(12, 40) > 2**63
    direct = sum(stats.crank(la) ** 12 for la in enumerate_partitions(40))
    assert stats.crank_moment(12, 40) == direct


@given(st.integers(1, 30), st.integers(1, 6))
def test_moment_formulas(n, k):
    assert stats.positive_rank_moment_via_N_leq(k, n) == stats.positive_rank_moment(k, n)
    assert stats.positive_crank_moment_via_M_leq(k, n) == stats.positive_crank_moment(k, n)
    gap = stats.positive_crank_moment(k, n) - stats.positive_rank_moment(k, n)
    assert stats.positive_moment_gap(k, n) == gap
    assert gap > 0
    assert stats.crank_moment(2 * k, n) > stats.rank_moment(2 * k, n)


def test_negative_m_rejected():
    with pytest.raises(ValueError):
        stats.q_count(-1, 3)
    with pytest.raises(ValueError):
        stats.N_leq(-1, 3)
