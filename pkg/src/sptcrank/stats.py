"""Rank, crank, rank-set and the counting functions built on them.

Every aggregate is an exhaustive count over :func:`enumerate_partitions`.
One pass per ``n`` fills a :class:`_Census`, which is cached; the
individual functions read from it.

Conventions:

* ``rank`` and ``crank`` of the empty partition raise ``ValueError``.
* For n = 0 the empty partition is counted once at statistic 0, so
  ``N(0, 0) = M(0, 0) = 1`` and ``p(-m, 0) = q(m, 0) = 1``.
* For n = 1 the crank counts used by ``M_leq`` and the crank moments are
  overridden to ``M(0,1) = -1, M(+-1,1) = 1``.  ``crank((1,))`` itself
  stays -1.
* Counts are capped at 2**63 - 1 (``OverflowError`` past it).  Moments are
  weighted sums and stay exact Python ints without a cap.
* Moment sums run over ``|m| <= n``; ranks and cranks of partitions of n
  never leave that window, so the truncation is exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import Partition, checked_count, count_partitions, enumerate_partitions

#: Crank counts at n = 1 once the override is applied.
CRANK_OVERRIDE_N1 = {-1: 1, 0: -1, 1: 1}


def rank(la: Partition) -> int:
    if not la:
        raise ValueError("rank of the empty partition is undefined")
    return la[0] - len(la)


def crank(la: Partition) -> int:
    if not la:
        raise ValueError("crank of the empty partition is undefined")
    ones = la.count(1)
    if ones == 0:
        return la[0]
    return sum(1 for p in la if p > ones) - ones


def rank_set_prefix(la: Partition) -> list[int]:
    """The finite part ``[j - la[j] for j < len(la)]`` of the rank-set.

    The rank-set continues with ``len(la), len(la) + 1, ...``.
    """
    return [j - p for j, p in enumerate(la)]


def rank_set_contains(la: Partition, m: int) -> bool:
    length = len(la)
    if m >= length:
        return True
    # j - la[j] is strictly increasing in j and stays below len(la)
    return any(j - la[j] == m for j in range(length))


@dataclass(frozen=True)
class RankCrankTable:
    n: int
    rank_counts: dict = field(default_factory=dict)
    crank_counts: dict = field(default_factory=dict)
    convention_flag: bool = True

    def N(self, m: int) -> int:
        return self.rank_counts.get(m, 0)

    def M(self, m: int) -> int:
        return self.crank_counts.get(m, 0)


@dataclass(frozen=True)
class _Census:
    n: int
    total: int
    rank_hist: dict
    crank_hist: dict
    # q(m, n) = #{la : len(la) <= m} + #{(la, j) : j - la[j] == m}
    length_hist: dict
    rank_set_hist: dict


@lru_cache(maxsize=None)
def census(n: int) -> _Census:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return _Census(0, 1, {0: 1}, {0: 1}, {0: 1}, {})
    ranks: Counter = Counter()
    cranks: Counter = Counter()
    lengths: Counter = Counter()
    rank_set: Counter = Counter()
    total = 0
    for la in enumerate_partitions(n):
        total += 1
        length = len(la)
        lengths[length] += 1
        ranks[la[0] - length] += 1
        ones = la.count(1)
        if ones == 0:
            cranks[la[0]] += 1
        else:
            cranks[sum(1 for p in la if p > ones) - ones] += 1
        for j, p in enumerate(la):
            if j >= p:
                rank_set[j - p] += 1
    return _Census(n, total, dict(ranks), dict(cranks), dict(lengths), dict(rank_set))


def rank_crank_table(n: int, convention: bool = True) -> RankCrankTable:
    c = census(n)
    cranks = dict(c.crank_hist)
    if convention and n == 1:
        cranks = dict(CRANK_OVERRIDE_N1)
    return RankCrankTable(n, dict(c.rank_hist), cranks, convention)


def N(m: int, n: int) -> int:
    """Number of partitions of n with rank m."""
    return census(n).rank_hist.get(m, 0)


def M(m: int, n: int, convention: bool = True) -> int:
    """Number of partitions of n with crank m (n = 1 override by default)."""
    if convention and n == 1:
        return CRANK_OVERRIDE_N1.get(m, 0)
    return census(n).crank_hist.get(m, 0)


def q_count(m: int, n: int) -> int:
    """Number of partitions of n whose rank-set contains m."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    c = census(n)
    short = sum(v for length, v in c.length_hist.items() if length <= m)
    return short + c.rank_set_hist.get(m, 0)


def p_rank_at_least(m: int, n: int) -> int:
    """Number of partitions of n with rank >= -m, written p(-m, n)."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return sum(v for r, v in census(n).rank_hist.items() if r >= -m)


def crank_at_most(m: int, n: int) -> int:
    """Number of partitions of n with crank <= m (raw cranks)."""
    return sum(v for r, v in census(n).crank_hist.items() if r <= m)


def N_leq(m: int, n: int) -> int:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    return sum(v for r, v in census(n).rank_hist.items() if abs(r) <= m)


def M_leq(m: int, n: int) -> int:
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    cranks = CRANK_OVERRIDE_N1 if n == 1 else census(n).crank_hist
    return sum(v for r, v in cranks.items() if abs(r) <= m)


def _moment(counts: dict, k: int, positive_only: bool) -> int:
    # weighted sums, not counts: exact ints with no 64-bit cap
    # (M_12(40) is already past 2**63)
    return sum(m**k * v for m, v in counts.items() if m >= 1 or not positive_only)


def _moment_args(k: int, n: int):
    if k < 1:
        raise ValueError(f"moment order must be positive, got {k}")
    if n < 1:
        raise ValueError(f"moments are defined for n >= 1, got {n}")


def rank_moment(k: int, n: int) -> int:
    _moment_args(k, n)
    return _moment(census(n).rank_hist, k, False)


def crank_moment(k: int, n: int) -> int:
    _moment_args(k, n)
    return _moment(rank_crank_table(n).crank_counts, k, False)


def positive_rank_moment(k: int, n: int) -> int:
    _moment_args(k, n)
    return _moment(census(n).rank_hist, k, True)


def positive_crank_moment(k: int, n: int) -> int:
    _moment_args(k, n)
    return _moment(rank_crank_table(n).crank_counts, k, True)


def _half(total: int) -> int:
    if total % 2:
        raise ArithmeticError(f"expected an even sum, got {total}")
    return total // 2


def positive_rank_moment_via_N_leq(k: int, n: int) -> int:
    """Positive rank moment rebuilt from the symmetric counts N_{<=m}.

    ``(1/2) * sum_{m=1}^{n} (m^k - (m-1)^k) * (p(n) - N_{<=m-1}(n))``.
    """
    _moment_args(k, n)
    p = count_partitions(n)
    return _half(sum((m**k - (m - 1) ** k) * (p - N_leq(m - 1, n)) for m in range(1, n + 1)))


def positive_crank_moment_via_M_leq(k: int, n: int) -> int:
    _moment_args(k, n)
    p = count_partitions(n)
    return _half(sum((m**k - (m - 1) ** k) * (p - M_leq(m - 1, n)) for m in range(1, n + 1)))


def positive_moment_gap(k: int, n: int) -> int:
    """``Mbar_k(n) - Nbar_k(n)`` written through N_{<=m} - M_{<=m}.

    The m = n term is replaced by its closed value ``n^k - (n-1)^k``.
    """
    _moment_args(k, n)
    body = sum((m**k - (m - 1) ** k) * (N_leq(m - 1, n) - M_leq(m - 1, n)) for m in range(1, n))
    return _half(body) + n**k - (n - 1) ** k
