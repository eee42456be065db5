"""Integer partitions as weakly decreasing tuples of positive ints.

A partition is represented by a plain ``tuple``; the empty tuple is the
unique partition of 0.  All enumerators yield partitions in
lexicographically decreasing order, e.g. for 4::

    (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)

Full enumeration is practical up to roughly n = 80 (p(80) is about 1.5e7).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator, Tuple

Partition = Tuple[int, ...]

#: Smallest part of the empty partition.  ``math.inf`` compares totally
#: against every int, so ``smallest_part(p) >= 2`` is always well defined.
INFINITY = math.inf

#: Counts are kept within a signed 64-bit range; anything larger is reported.
COUNT_MAX = 2**63 - 1

EMPTY: Partition = ()


def is_partition(parts) -> bool:
    if not isinstance(parts, tuple):
        return False
    if not parts:
        return True
    if not all(type(p) is int for p in parts) or parts[-1] < 1:
        return False
    return all(a >= b for a, b in zip(parts, parts[1:]))


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return them as a partition tuple.

    Parts must already be weakly decreasing and positive; nothing is sorted
    or dropped here.
    """
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def weight(la: Partition) -> int:
    return sum(la)


def smallest_part(la: Partition):
    """Last part of ``la``, or :data:`INFINITY` for the empty partition."""
    return la[-1] if la else INFINITY


def conjugate(la: Partition) -> Partition:
    if not la:
        return EMPTY
    conj = []
    length = len(la)
    for r in range(1, la[0] + 1):
        while length and la[length - 1] < r:
            length -= 1
        conj.append(length)
    return tuple(conj)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, lexicographically decreasing.

    Uses the Zoghbi-Stojmenovic ZS1 scheme, which rewrites a single buffer in
    place; each yielded tuple is a fresh copy.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        yield EMPTY
        return
    x = [1] * (n + 1)
    x[1] = n
    m = h = 1
    yield (n,)
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1 : m + 1])


def bounded_partitions(n: int, smallest: int = 1, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` with every part in ``[smallest, largest]``.

    Same lexicographically decreasing order as :func:`enumerate_partitions`.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if largest is None:
        largest = n
    yield from _bounded(n, smallest, min(largest, n))


def _bounded(n, smallest, largest):
    if n == 0:
        yield EMPTY
        return
    for first in range(largest, smallest - 1, -1):
        rest = n - first
        if rest == 0:
            yield (first,)
        elif rest >= smallest:
            for tail in _bounded(rest, smallest, min(first, rest)):
                yield (first,) + tail


def distinct_partitions(n: int, smallest: int = 1) -> Iterator[Partition]:
    """Partitions of ``n`` into distinct parts, each at least ``smallest``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    yield from _distinct(n, smallest, n)


def _distinct(n, smallest, largest):
    if n == 0:
        yield EMPTY
        return
    for first in range(min(largest, n), smallest - 1, -1):
        rest = n - first
        if rest == 0:
            yield (first,)
        elif rest >= smallest:
            for tail in _distinct(rest, smallest, first - 1):
                yield (first,) + tail


def checked_count(value: int) -> int:
    if value > COUNT_MAX or value < -COUNT_MAX - 1:
        raise OverflowError(f"count {value} does not fit in a signed 64-bit integer")
    return value


@lru_cache(maxsize=None)
def _partition_numbers(n: int) -> tuple:
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return tuple(table)


def count_partitions(n: int) -> int:
    """p(n) by the standard coin-change recurrence; no enumeration.

    Raises OverflowError once p(n) leaves the 64-bit range (n > 405).
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return checked_count(_partition_numbers(n)[n])


def format_partition(la: Partition) -> str:
    return "(" + ",".join(map(str, la)) + ")"


def parse_partition(text: str) -> tuple[Partition, bool]:
    """Parse a comma separated part list.

    Returns the partition sorted into decreasing order and a flag telling
    whether sorting changed the input.  Empty input, ``()``, ``-`` and
    ``0`` all denote the empty partition.
    """
    text = text.strip().strip("()[]").strip()
    if text in ("", "-", "0", "∅"):
        return EMPTY, False
    try:
        parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise ValueError(f"parts must be integers: {text!r}") from None
    if any(p < 1 for p in parts):
        raise ValueError(f"parts must be positive: {text!r}")
    ordered = tuple(sorted(parts, reverse=True))
    return ordered, ordered != tuple(parts)
