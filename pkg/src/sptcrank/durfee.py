"""m-Durfee rectangle symbols.

The m-Durfee rectangle of a partition is the largest (m+j) x j rectangle
fitting in its Ferrers diagram.  The symbol records the columns to the
right of the rectangle (``alpha``, column lengths) and the rows below it
(``beta``).  When the partition has at most m parts no rectangle fits, j is
0 and the symbol is (conjugate, empty).
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import EMPTY, Partition, conjugate, is_partition


@dataclass(frozen=True)
class DurfeeSymbol:
    alpha: Partition
    beta: Partition
    m: int
    j: int

    @property
    def height(self) -> int:
        return self.m + self.j

    @property
    def weight(self) -> int:
        return sum(self.alpha) + sum(self.beta) + self.j * (self.m + self.j)

    def a(self, i: int) -> int:
        """``alpha_i`` (1-based), 0 past the end."""
        return self.alpha[i - 1] if 0 < i <= len(self.alpha) else 0

    def b(self, i: int) -> int:
        """``beta_i`` (1-based), 0 past the end."""
        return self.beta[i - 1] if 0 < i <= len(self.beta) else 0

    def __str__(self) -> str:
        top = ",".join(map(str, self.alpha))
        bottom = ",".join(map(str, self.beta))
        return f"({top} / {bottom})_{{{self.m + self.j}x{self.j}}}"

    def to_dict(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta), "m": self.m, "j": self.j}


def durfee_index(la: Partition, m: int) -> int:
    """Width j of the m-Durfee rectangle of ``la``."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    j = min(la[0] if la else 0, len(la) - m)
    while j > 0 and la[m + j - 1] < j:
        j -= 1
    return max(j, 0)


def to_symbol(la: Partition, m: int) -> DurfeeSymbol:
    j = durfee_index(la, m)
    if j == 0:
        return DurfeeSymbol(conjugate(la), EMPTY, m, 0)
    top = la[: m + j]
    alpha = tuple(sum(1 for p in top if p >= j + c) for c in range(1, la[0] - j + 1))
    return DurfeeSymbol(alpha, tuple(la[m + j :]), m, j)


def symbol_problems(sym: DurfeeSymbol) -> list[str]:
    """Reasons ``sym`` is not the m-Durfee symbol of any partition."""
    problems = []
    if sym.m < 0 or sym.j < 0:
        problems.append(f"negative rectangle parameters m={sym.m}, j={sym.j}")
        return problems
    if not is_partition(sym.alpha):
        problems.append(f"alpha {sym.alpha!r} is not a partition")
    if not is_partition(sym.beta):
        problems.append(f"beta {sym.beta!r} is not a partition")
    if problems:
        return problems
    if sym.alpha and sym.alpha[0] > sym.m + sym.j:
        problems.append(f"alpha_1={sym.alpha[0]} exceeds rectangle height {sym.m + sym.j}")
    if sym.beta and sym.beta[0] > sym.j:
        problems.append(f"beta_1={sym.beta[0]} exceeds rectangle width {sym.j}")
    return problems


def _rebuild(sym: DurfeeSymbol) -> Partition:
    extra = conjugate(sym.alpha)
    if sym.j == 0:
        return extra
    rows = tuple(sym.j + c for c in extra) + (sym.j,) * (sym.m + sym.j - len(extra))
    return rows + sym.beta


def from_symbol(sym: DurfeeSymbol) -> Partition:
    """The partition whose m-Durfee symbol is ``sym``.

    Raises ValueError for a symbol that no partition produces.  The bounds
    ``alpha_1 <= m + j`` and ``beta_1 <= j`` are enough: row m + j + 1 is
    ``beta_1 <= j`` long, so no wider rectangle can fit.
    """
    problems = symbol_problems(sym)
    if problems:
        raise ValueError(f"invalid Durfee symbol {sym}: " + "; ".join(problems))
    return _rebuild(sym)


def is_valid_symbol(sym: DurfeeSymbol) -> bool:
    return not symbol_problems(sym)


def parse_symbol(text: str, m: int, j: int) -> DurfeeSymbol:
    """Build a symbol from ``"a1,a2,... / b1,b2,..."``."""
    top, _, bottom = text.partition("/")

    def row(s):
        s = s.strip().strip("()")
        return tuple(int(x) for x in s.split(",") if x.strip())

    return DurfeeSymbol(row(top), row(bottom), m, j)
