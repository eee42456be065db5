"""Membership in Q(m,n) / P(-m,n) and their decomposition into classes.

Q(m,n): partitions of n whose rank-set contains m.
P(-m,n): partitions of n with rank at least -m.

Both are read through m-Durfee symbols.  Each class is a predicate; the
classifiers try them in order and return the first match.  With
``strict=True`` every predicate is evaluated and more or less than one
match raises ``AssertionError``.

For m = 0 the labels Q5/Q6 are replaced by QBAR1..QBAR5 and P5/P6 by
PBAR1..PBAR3.
"""

from __future__ import annotations

import enum

from .durfee import DurfeeSymbol, from_symbol
from .partitions import smallest_part
from .stats import rank, rank_set_contains


class ClassLabel(enum.Enum):
    Q1 = "Q1"
    Q2 = "Q2"
    Q3 = "Q3"
    Q4 = "Q4"
    Q5 = "Q5"
    Q6 = "Q6"
    QBAR1 = "Qbar1"
    QBAR2 = "Qbar2"
    QBAR3 = "Qbar3"
    QBAR4 = "Qbar4"
    QBAR5 = "Qbar5"
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    P6 = "P6"
    P7 = "P7"
    P8 = "P8"
    PBAR1 = "Pbar1"
    PBAR2 = "Pbar2"
    PBAR3 = "Pbar3"

    @property
    def side(self) -> str:
        return self.value[0]

    def __str__(self) -> str:
        return self.value


def in_Q_by_rank_set(sym: DurfeeSymbol) -> bool:
    return rank_set_contains(from_symbol(sym), sym.m)


def in_Q_by_symbol(sym: DurfeeSymbol) -> bool:
    return sym.j == 0 or sym.b(1) == sym.j


def in_P_by_rank(sym: DurfeeSymbol) -> bool:
    la = from_symbol(sym)
    return not la or rank(la) >= -sym.m


def in_P_by_symbol(sym: DurfeeSymbol) -> bool:
    return sym.j == 0 or len(sym.beta) <= len(sym.alpha)


def in_Q(sym: DurfeeSymbol) -> bool:
    """Rank-set membership; asserts agreement with the symbol criterion."""
    direct = in_Q_by_rank_set(sym)
    assert direct == in_Q_by_symbol(sym), f"membership routes disagree on {sym}"
    return direct


def in_P(sym: DurfeeSymbol) -> bool:
    direct = in_P_by_rank(sym)
    assert direct == in_P_by_symbol(sym), f"membership routes disagree on {sym}"
    return direct


# Q-side predicates.  All assume the symbol is already in Q(m,n).

def _q1(x: DurfeeSymbol) -> bool:
    s, t = len(x.alpha), len(x.beta)
    if x.j == 0:
        return True
    return t - s <= -1 or (t == s and x.a(1) == x.height)


def _q2(x):
    return x.j >= 1 and len(x.beta) >= len(x.alpha) and x.a(1) < x.height


def _q_tall(x):
    return x.j >= 1 and len(x.beta) - len(x.alpha) >= 1 and x.a(1) == x.height


def _q3(x):
    return _q_tall(x) and smallest_part(x.beta) == 1


def _q4(x):
    return _q_tall(x) and x.height > x.a(2) and smallest_part(x.beta) >= 2


def _q5(x):
    return _q_tall(x) and x.a(2) == x.height > x.a(3) and smallest_part(x.beta) >= 2


def _q6(x):
    return _q_tall(x) and x.a(3) == x.height and smallest_part(x.beta) >= 2


def _qbar1(x):
    return _q5(x) and smallest_part(x.beta) >= 3


def _qbar2(x):
    return _q6(x) and smallest_part(x.beta) >= 3


def _q56(x):
    return _q5(x) or _q6(x)


def _qbar3(x):
    return _q56(x) and smallest_part(x.alpha) == 1 and smallest_part(x.beta) == 2


def _qbar4(x):
    return _q56(x) and smallest_part(x.alpha) >= 2 and x.b(1) == x.b(2) and smallest_part(x.beta) == 2


def _qbar5(x):
    return _q56(x) and smallest_part(x.alpha) >= 2 and x.b(1) > x.b(2) and smallest_part(x.beta) == 2


# P-side predicates, on symbols already in P(-m,n).  Here alpha plays the
# role of gamma and beta of delta.

def _p1(y):
    s, t = len(y.alpha), len(y.beta)
    if y.j == 0:
        return True
    if y.b(1) != y.j:
        return False
    return t - s <= -1 or (s == t and y.a(1) == y.height)


def _p2(y):
    return y.j >= 1 and y.b(1) == y.j - 1


def _p3(y):
    return y.j >= 2 and y.b(1) <= y.j - 2


def _p_level(y):
    return y.j >= 1 and len(y.alpha) == len(y.beta) and y.b(1) == y.j


def _p4(y):
    return _p_level(y) and y.a(1) == y.height - 1 and 2 in y.beta


def _p5(y):
    return _p_level(y) and y.a(1) <= y.height - 3


def _p6(y):
    return _p_level(y) and y.a(1) == y.height - 2


def _p7(y):
    return _p_level(y) and y.a(1) == y.height - 1 > y.a(2) and 2 not in y.beta


def _p8(y):
    return _p_level(y) and y.a(1) == y.a(2) == y.height - 1 and 2 not in y.beta


def _pbar1(y):
    return _p5(y) and smallest_part(y.beta) >= 2


def _pbar2(y):
    return _p6(y) and smallest_part(y.beta) >= 2


def _pbar3(y):
    return (_p5(y) or _p6(y)) and smallest_part(y.beta) == 1


L = ClassLabel

Q_LADDER = [(L.Q1, _q1), (L.Q2, _q2), (L.Q3, _q3), (L.Q4, _q4), (L.Q5, _q5), (L.Q6, _q6)]
Q_LADDER_M0 = Q_LADDER[:4] + [
    (L.QBAR1, _qbar1), (L.QBAR2, _qbar2), (L.QBAR3, _qbar3), (L.QBAR4, _qbar4), (L.QBAR5, _qbar5),
]
P_LADDER = [
    (L.P1, _p1), (L.P2, _p2), (L.P3, _p3), (L.P4, _p4),
    (L.P5, _p5), (L.P6, _p6), (L.P7, _p7), (L.P8, _p8),
]
P_LADDER_M0 = P_LADDER[:4] + [(L.PBAR1, _pbar1), (L.PBAR2, _pbar2), (L.PBAR3, _pbar3)] + P_LADDER[6:]

PREDICATES = dict(Q_LADDER + Q_LADDER_M0 + P_LADDER + P_LADDER_M0)


def _classify(sym, ladder, strict):
    if strict:
        hits = [label for label, pred in ladder if pred(sym)]
        if len(hits) != 1:
            raise AssertionError(f"{sym} matches {len(hits)} classes: {[str(h) for h in hits]}")
        return hits[0]
    for label, pred in ladder:
        if pred(sym):
            return label
    raise AssertionError(f"{sym} matches no class")


def classify_Q(sym: DurfeeSymbol, strict: bool = False) -> ClassLabel:
    if not in_Q(sym):
        raise ValueError(f"{sym} is not in Q({sym.m}, {sym.weight})")
    return _classify(sym, Q_LADDER_M0 if sym.m == 0 else Q_LADDER, strict)


def classify_P(sym: DurfeeSymbol, strict: bool = False) -> ClassLabel:
    if not in_P(sym):
        raise ValueError(f"{sym} is not in P(-{sym.m}, {sym.weight})")
    return _classify(sym, P_LADDER_M0 if sym.m == 0 else P_LADDER, strict)


def has_label(sym: DurfeeSymbol, label: ClassLabel) -> bool:
    """Membership in one class, without classifying against the others."""
    if label.side == "Q":
        return in_Q(sym) and PREDICATES[label](sym)
    return in_P(sym) and PREDICATES[label](sym)
