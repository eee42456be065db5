import pytest
from hypothesis import given, strategies as st

from oracles import durfee_rectangle_naive, partitions_naive
from sptcrank.durfee import (
    DurfeeSymbol,
    durfee_index,
    from_symbol,
    is_valid_symbol,
    parse_symbol,
    symbol_problems,
    to_symbol,
)
from sptcrank.partitions import enumerate_partitions
from sptcrank.stats import rank, rank_set_contains

LAMBDA = (7, 7, 6, 4, 3, 3, 2, 2, 2)


def test_durfee_index_examples():
    assert durfee_index(LAMBDA, 0) == 4
    assert durfee_index(LAMBDA, 2) == 3
    assert durfee_index((5, 5, 1), 3) == 0
    assert durfee_index((), 0) == 0


def test_symbols_of_the_running_example():
    sym0 = to_symbol(LAMBDA, 0)
    assert (sym0.alpha, sym0.beta, sym0.j) == ((3, 3, 2), (3, 3, 2, 2, 2), 4)
    sym2 = to_symbol(LAMBDA, 2)
    assert (sym2.alpha, sym2.beta, sym2.j) == ((4, 3, 3, 2), (3, 2, 2, 2), 3)
    assert str(sym2) == "(4,3,3,2 / 3,2,2,2)_{5x3}"
    assert sym2.weight == sum(LAMBDA) == 36
    # rank = len(alpha) - len(beta) at m = 0
    assert len(sym0.alpha) - len(sym0.beta) == rank(LAMBDA) == -2


def test_no_rectangle_case():
    sym = to_symbol((5, 5, 1), 3)
    assert sym == DurfeeSymbol((3, 2, 2, 2, 2), (), 3, 0)
    assert from_symbol(sym) == (5, 5, 1)


def test_empty_partition():
    for m in range(4):
        sym = to_symbol((), m)
        assert sym == DurfeeSymbol((), (), m, 0)
        assert sym.weight == 0
        assert from_symbol(sym) == ()


def test_from_symbol_example():
    assert from_symbol(parse_symbol("4,3,3,2 / 3,2,2,2", 2, 3)) == LAMBDA


def test_accessors():
    sym = parse_symbol("4,3,3,2 / 3,2,2,2", 2, 3)
    assert sym.height == 5
    assert sym.a(1) == 4 and sym.a(4) == 2 and sym.a(5) == 0
    assert sym.b(1) == 3 and sym.b(9) == 0
    assert sym.to_dict() == {"alpha": [4, 3, 3, 2], "beta": [3, 2, 2, 2], "m": 2, "j": 3}


@pytest.mark.parametrize(
    "sym",
    [
        DurfeeSymbol((6,), (), 2, 3),  # alpha_1 > m + j
        DurfeeSymbol((), (4,), 2, 3),  # beta_1 > j
        DurfeeSymbol((), (1,), 2, 0),  # j = 0 but beta nonempty
        DurfeeSymbol((1, 2), (), 2, 3),  # alpha not a partition
        DurfeeSymbol((), (), -1, 0),
    ],
)
def test_invalid_symbols_rejected(sym):
    assert symbol_problems(sym)
    assert not is_valid_symbol(sym)
    with pytest.raises(ValueError):
        from_symbol(sym)


@pytest.mark.parametrize("m", range(0, 11))
def test_round_trip_exhaustive(m):
    for n in range(0, 31):
        for la in enumerate_partitions(n):
            sym = to_symbol(la, m)
            assert sym.weight == n
            assert from_symbol(sym) == la


def test_durfee_index_against_diagram():
    for n in range(0, 18):
        for la in partitions_naive(n):
            for m in range(0, 6):
                assert durfee_index(la, m) == durfee_rectangle_naive(la, m)


@st.composite
def symbols(draw):
    m = draw(st.integers(0, 6))
    j = draw(st.integers(0, 6))
    alpha = sorted(draw(st.lists(st.integers(1, m + j), max_size=8)), reverse=True) if m + j else []
    beta = sorted(draw(st.lists(st.integers(1, j), max_size=8)), reverse=True) if j else []
    return DurfeeSymbol(tuple(alpha), tuple(beta), m, j)


@given(symbols())
def test_valid_symbols_come_back(sym):
    la = from_symbol(sym)
    assert sum(la) == sym.weight
    assert to_symbol(la, sym.m) == sym


@pytest.mark.parametrize("m", range(0, 8))
def test_membership_criteria(m):
    for n in range(0, 26):
        for la in enumerate_partitions(n):
            sym = to_symbol(la, m)
            in_q = sym.j == 0 or sym.beta[:1] == (sym.j,)
            in_p = sym.j == 0 or len(sym.beta) <= len(sym.alpha)
            assert rank_set_contains(la, m) == in_q
            assert (not la or rank(la) >= -m) == in_p


def test_parse_symbol():
    assert parse_symbol("3,3,2 / 3,3,2,2,2", 0, 4) == DurfeeSymbol((3, 3, 2), (3, 3, 2, 2, 2), 0, 4)
    assert parse_symbol("3,2,2,2,2 / ", 3, 0).beta == ()
