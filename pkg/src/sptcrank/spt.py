"""S-partitions, the spt-crank and the smallest parts function.

An S-partition of n is a triple ``(pi1, pi2, pi3)`` of total weight n where
``pi1`` is a nonempty partition into distinct parts and every part of
``pi2`` and ``pi3`` is at least the smallest part of ``pi1``.  Its sign is
``(-1) ** (len(pi1) - 1)`` and its spt-crank is ``len(pi2) - len(pi3)``.

``N_S(m, n)`` is the signed count of S-partitions of n with spt-crank m,
summed over :func:`enumerate_S` (about 4 s at n = 26).
:func:`ns_table_factored` is a second route to the same numbers: for each
smallest part s it enumerates the admissible ``pi1`` and the partitions
with parts >= s separately, keeps only weights and lengths, and combines
the three factors by summation.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .partitions import (
    Partition,
    bounded_partitions,
    checked_count,
    distinct_partitions,
    enumerate_partitions,
    smallest_part,
)


@dataclass(frozen=True)
class SPartition:
    pi1: Partition
    pi2: Partition
    pi3: Partition

    def __post_init__(self):
        if not self.pi1:
            raise ValueError("pi1 must be nonempty")
        if any(self.pi1[i] <= self.pi1[i + 1] for i in range(len(self.pi1) - 1)):
            raise ValueError(f"pi1 {self.pi1} must have distinct parts")
        if self.pi1[-1] > min(smallest_part(self.pi2), smallest_part(self.pi3)):
            raise ValueError(f"{self} violates the smallest-part condition")

    @property
    def weight(self) -> int:
        return sum(self.pi1) + sum(self.pi2) + sum(self.pi3)

    @property
    def sign(self) -> int:
        return -1 if len(self.pi1) % 2 == 0 else 1

    @property
    def spt_crank(self) -> int:
        return len(self.pi2) - len(self.pi3)


def enumerate_S(n: int) -> Iterator[SPartition]:
    """Every S-partition of ``n``.

    Order: smallest part s of ``pi1`` ascending; then the weight of ``pi1``
    descending and ``pi1`` itself lexicographically decreasing; then the
    same for ``pi2``; finally ``pi3``.
    """
    if n < 1:
        raise ValueError(f"S-partitions are defined for n >= 1, got {n}")
    for s in range(1, n + 1):
        for w1 in range(n, s - 1, -1):
            # distinct partitions of w1 whose smallest part is exactly s
            heads = [p for p in distinct_partitions(w1, smallest=s) if p[-1] == s]
            if not heads:
                continue
            rest = n - w1
            for pi1 in heads:
                for w2 in range(rest, -1, -1):
                    for pi2 in bounded_partitions(w2, smallest=s):
                        for pi3 in bounded_partitions(rest - w2, smallest=s):
                            yield SPartition(pi1, pi2, pi3)


@lru_cache(maxsize=None)
def _ns_items(n: int) -> tuple:
    table: Counter = Counter()
    for pi in enumerate_S(n):
        table[pi.spt_crank] += pi.sign
    return tuple((m, checked_count(v)) for m, v in sorted(table.items()) if v)


def ns_table(n: int) -> dict:
    """``{m: N_S(m, n)}`` for every m with a nonzero signed count."""
    return dict(_ns_items(n))


@lru_cache(maxsize=None)
def _tail_lengths(s: int, w: int) -> tuple:
    """Length histogram of partitions of w with every part >= s."""
    hist = Counter(len(p) for p in bounded_partitions(w, smallest=s))
    return tuple(sorted(hist.items()))


def ns_table_factored(n: int) -> dict:
    if n < 1:
        raise ValueError(f"S-partitions are defined for n >= 1, got {n}")
    table: Counter = Counter()
    for s in range(1, n + 1):
        # signed count of admissible pi1 by weight
        signed = defaultdict(int)
        for w1 in range(s, n + 1):
            for pi1 in distinct_partitions(w1, smallest=s):
                if pi1[-1] == s:
                    signed[w1] += -1 if len(pi1) % 2 == 0 else 1
        for w1, sign_sum in signed.items():
            if not sign_sum:
                continue
            rest = n - w1
            for w2 in range(rest + 1):
                for l2, c2 in _tail_lengths(s, w2):
                    for l3, c3 in _tail_lengths(s, rest - w2):
                        table[l2 - l3] += sign_sum * c2 * c3
    return {m: v for m, v in sorted(table.items()) if v}


def N_S(m: int, n: int) -> int:
    return ns_table(n).get(m, 0)


def N_S_mod(k: int, t: int, n: int) -> int:
    """Sum of ``N_S(m, n)`` over m congruent to k modulo t."""
    if t < 1 or not 0 <= k < t:
        raise ValueError(f"need 0 <= k < t, got k={k}, t={t}")
    return sum(v for m, v in ns_table(n).items() if m % t == k)


def spt_bruteforce(n: int) -> int:
    """Total number of smallest parts over all partitions of n."""
    if n < 1:
        raise ValueError(f"spt is defined for n >= 1, got {n}")
    total = 0
    for la in enumerate_partitions(n):
        total += la.count(la[-1])
    return total


@lru_cache(maxsize=None)
def _spt_values(n: int) -> tuple:
    # above[s][r]: partitions of r with every part > s
    above = [[0] * (n + 1) for _ in range(n + 1)]
    above[n][0] = 1
    for s in range(n - 1, -1, -1):
        row = list(above[s + 1])
        part = s + 1
        for r in range(part, n + 1):
            row[r] += row[r - part]
        above[s] = row
    values = [0] * (n + 1)
    for total in range(1, n + 1):
        acc = 0
        for s in range(1, total + 1):
            for k in range(1, total // s + 1):
                acc += k * above[s][total - k * s]
        values[total] = acc
    return tuple(values)


def spt(n: int) -> int:
    """spt(n), counted by smallest part s and its multiplicity k.

    ``spt(n) = sum_{s, k} k * #{partitions of n - k*s with parts > s}``;
    agrees with :func:`spt_bruteforce`.
    """
    if n < 1:
        raise ValueError(f"spt is defined for n >= 1, got {n}")
    return checked_count(_spt_values(n)[n])
