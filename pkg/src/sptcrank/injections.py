"""Injections from Q(m,n) into P(-m,n), class by class.

Every map takes and returns m-Durfee symbols, wrapped in a
:class:`MappingTrace` that also records which auxiliary index the
construction picked.  Indices in comments and traces are 1-based, as in
the usual two-row notation; ``sym.a(i)`` / ``sym.b(i)`` read ``alpha_i`` /
``beta_i`` with 0 past the end.

Forward maps raise ``ValueError`` on input outside their domain class.
Inverse maps accept any symbol of the target class but raise
``ValueError`` when the input is not an image of the forward map in a way
they can detect (the rebuilt symbol is malformed or lands outside the
domain class).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .classify import ClassLabel as L
from .classify import classify_Q, has_label
from .durfee import DurfeeSymbol, symbol_problems


@dataclass(frozen=True)
class MappingTrace:
    name: str
    source: DurfeeSymbol
    image: DurfeeSymbol
    source_class: L
    image_class: L
    indices: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "map": self.name,
            "source": str(self.source),
            "image": str(self.image),
            "source_class": str(self.source_class),
            "image_class": str(self.image_class),
            "indices": dict(self.indices),
        }


def _shape(values, what):
    """Turn a list of parts into a partition, dropping trailing zeros only."""
    parts = list(values)
    while parts and parts[-1] == 0:
        parts.pop()
    if any(p < 1 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{what} {parts} is not a partition")
    return tuple(parts)


def _symbol(top, bottom, m, j, name):
    sym = DurfeeSymbol(_shape(top, f"{name}: top row"), _shape(bottom, f"{name}: bottom row"), m, j)
    problems = symbol_problems(sym)
    if problems:
        raise ValueError(f"{name} built an invalid symbol {sym}: " + "; ".join(problems))
    return sym


def _require(sym, label, name):
    if not has_label(sym, label):
        raise ValueError(f"{name} expects a symbol in {label}, got {sym}")


def _finish_inverse(sym, label, name):
    if not has_label(sym, label):
        raise ValueError(f"{name}: input is not in the image (result {sym} is outside {label})")
    return sym


def _run(index, values):
    return [values(i) for i in index]


# Q1 -> P1 ---------------------------------------------------------------

def phi1(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.Q1, "phi1")
    return MappingTrace("phi1", sym, sym, L.Q1, L.P1)


def phi1_inv(mu: DurfeeSymbol) -> MappingTrace:
    _require(mu, L.P1, "phi1_inv")
    return MappingTrace("phi1_inv", mu, _finish_inverse(mu, L.Q1, "phi1_inv"), L.P1, L.Q1)


# Q2 -> P2 ---------------------------------------------------------------

def phi2(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.Q2, "phi2")
    s, t = len(sym.alpha), len(sym.beta)
    gamma = [a + 1 for a in sym.alpha] + [1] * (t - s)
    delta = [b - 1 for b in sym.beta]
    image = _symbol(gamma, delta, sym.m, sym.j, "phi2")
    return MappingTrace("phi2", sym, image, L.Q2, L.P2)


def phi2_inv(mu: DurfeeSymbol) -> MappingTrace:
    """Undo :func:`phi2`.

    The one symbol of P2 outside the image, ``(empty / empty)`` on an
    (m+1) x 1 rectangle, is rejected.
    """
    _require(mu, L.P2, "phi2_inv")
    s, t = len(mu.alpha), len(mu.beta)
    alpha = [g - 1 for g in mu.alpha]
    beta = [d + 1 for d in mu.beta] + [1] * (s - t)
    sym = _symbol(alpha, beta, mu.m, mu.j, "phi2_inv")
    return MappingTrace("phi2_inv", mu, _finish_inverse(sym, L.Q2, "phi2_inv"), L.P2, L.Q2)


# Q3 <-> P3 (bijection) --------------------------------------------------

def phi3(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.Q3, "phi3")
    s, t = len(sym.alpha), len(sym.beta)
    gamma = [a + 1 for a in sym.alpha[1:]] + [1] * (t - s - 1)
    delta = [b - 1 for b in sym.beta[1:]]
    image = _symbol(gamma, delta, sym.m, sym.j + 1, "phi3")
    return MappingTrace("phi3", sym, image, L.Q3, L.P3)


def phi3_inv(mu: DurfeeSymbol) -> MappingTrace:
    _require(mu, L.P3, "phi3_inv")
    j = mu.j - 1
    t = len(mu.alpha) + 2
    alpha = [mu.m + j] + [g - 1 for g in mu.alpha]
    beta = [j] + [d + 1 for d in mu.beta] + [1] * (t - 1 - len(mu.beta))
    sym = _symbol(alpha, beta, mu.m, j, "phi3_inv")
    return MappingTrace("phi3_inv", mu, _finish_inverse(sym, L.Q3, "phi3_inv"), L.P3, L.Q3)


# Q4 -> P4 ---------------------------------------------------------------

def phi4_k_candidates(sym: DurfeeSymbol) -> list[int]:
    """All k in [1, s] with alpha_{k+1} <= beta_k - 1 and alpha_k >= beta_{k+1} - 1."""
    x = sym
    return [k for k in range(1, len(x.alpha) + 1) if x.a(k + 1) <= x.b(k) - 1 and x.a(k) >= x.b(k + 1) - 1]


def phi4(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.Q4, "phi4")
    x = sym
    s, t = len(x.alpha), len(x.beta)
    candidates = phi4_k_candidates(x)
    assert candidates, f"no admissible k for {x}"
    k = candidates[0]
    gamma = [x.a(1) - 1] + _run(range(2, k + 1), x.a) + [x.b(i) - 1 for i in range(k + 1, t + 1)]
    delta = _run(range(1, k + 1), x.b) + [x.a(i) + 1 for i in range(k + 1, s + 1)] + [2] + [1] * (t - s - 1)
    image = _symbol(gamma, delta, x.m, x.j, "phi4")
    return MappingTrace("phi4", sym, image, L.Q4, L.P4, {"k": k})


def phi4_inv_k_candidates(mu: DurfeeSymbol) -> list[int]:
    y = mu
    return [
        k for k in range(1, len(y.alpha))
        if y.b(k) - 1 >= y.a(k + 1) and y.a(k) >= y.b(k + 1) - 1 >= 1
    ]


def phi4_inv(mu: DurfeeSymbol) -> MappingTrace:
    _require(mu, L.P4, "phi4_inv")
    y = mu
    candidates = phi4_inv_k_candidates(y)
    if not candidates:
        raise ValueError(f"phi4_inv: no admissible k' for {mu}")
    k = candidates[0]
    last_two = max(i for i in range(1, len(y.beta) + 1) if y.b(i) == 2)
    t = len(y.alpha)
    alpha = [y.a(1) + 1] + _run(range(2, k + 1), y.a) + [y.b(i) - 1 for i in range(k + 1, last_two)]
    beta = _run(range(1, k + 1), y.b) + [y.a(i) + 1 for i in range(k + 1, t + 1)]
    sym = _symbol(alpha, beta, y.m, y.j, "phi4_inv")
    return MappingTrace(
        "phi4_inv", mu, _finish_inverse(sym, L.Q4, "phi4_inv"), L.P4, L.Q4, {"k'": k, "s'": last_two}
    )


# Q5 -> P5 (m >= 1), and Qbar1 -> Pbar1 (m = 0) ---------------------------

def phi5_k_candidates(sym: DurfeeSymbol) -> list[int]:
    x, m = sym, sym.m
    return [k for k in range(1, len(x.beta)) if x.a(k) - m + 2 >= x.b(k + 1) - 1]


def _phi5_core(x: DurfeeSymbol, name: str):
    m, t = x.m, len(x.beta)
    k = max(phi5_k_candidates(x))
    assert k >= 2, f"{name}: k={k} < 2 for {x}"
    gamma = [x.b(i) + m - 2 for i in range(2, k + 1)] + [x.a(i) + 1 for i in range(k + 1, t + 1)]
    if k == 2:
        delta = [x.a(2) + 1 - m] + [x.b(i) - 1 for i in range(3, t + 1)]
    else:
        delta = (
            [x.a(2) + 1 - m]
            + [x.a(i) + 2 - m for i in range(3, k + 1)]
            + [x.b(i) - 1 for i in range(k + 1, t + 1)]
        )
    return _symbol(gamma, delta, m, x.j + 1, name), k


def phi5_inv_k_candidates(mu: DurfeeSymbol) -> list[int]:
    y, m = mu, mu.m
    return [k for k in range(1, len(y.alpha)) if y.a(k) - m + 1 >= y.b(k + 1)]


def _phi5_inv_core(y: DurfeeSymbol, name: str):
    m, j, t = y.m, y.j, len(y.alpha)
    if len(y.beta) != t:
        raise ValueError(f"{name}: rows of {y} differ in length")
    candidates = phi5_inv_k_candidates(y)
    if not candidates:
        raise ValueError(f"{name}: no admissible k' for {y}")
    k = max(candidates)
    alpha = (
        [j + m - 1, y.b(1) - 1 + m]
        + [y.b(i) - 2 + m for i in range(2, k + 1)]
        + [y.a(i) - 1 for i in range(k + 1, t + 1)]
    )
    beta = [j - 1] + [y.a(i) + 2 - m for i in range(1, k + 1)] + [y.b(i) + 1 for i in range(k + 1, t + 1)]
    return _symbol(alpha, beta, m, j - 1, name), k


def phi5(sym: DurfeeSymbol) -> MappingTrace:
    if sym.m < 1:
        raise ValueError("phi5 is only defined for m >= 1; use psi1 for m = 0")
    _require(sym, L.Q5, "phi5")
    image, k = _phi5_core(sym, "phi5")
    return MappingTrace("phi5", sym, image, L.Q5, L.P5, {"k": k})


def phi5_inv(mu: DurfeeSymbol) -> MappingTrace:
    if mu.m < 1:
        raise ValueError("phi5_inv is only defined for m >= 1; use psi1_inv for m = 0")
    _require(mu, L.P5, "phi5_inv")
    sym, k = _phi5_inv_core(mu, "phi5_inv")
    return MappingTrace("phi5_inv", mu, _finish_inverse(sym, L.Q5, "phi5_inv"), L.P5, L.Q5, {"k'": k})


def psi1(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.QBAR1, "psi1")
    if sym.m != 0:
        raise ValueError("psi1 is only defined for m = 0")
    image, k = _phi5_core(sym, "psi1")
    return MappingTrace("psi1", sym, image, L.QBAR1, L.PBAR1, {"k": k})


def psi1_inv(mu: DurfeeSymbol) -> MappingTrace:
    if mu.m != 0:
        raise ValueError("psi1_inv is only defined for m = 0")
    _require(mu, L.PBAR1, "psi1_inv")
    sym, k = _phi5_inv_core(mu, "psi1_inv")
    return MappingTrace("psi1_inv", mu, _finish_inverse(sym, L.QBAR1, "psi1_inv"), L.PBAR1, L.QBAR1, {"k'": k})


# Q6 -> P6 (m >= 1), and Qbar2 -> Pbar2 (m = 0) ---------------------------

def phi6_k_candidates(sym: DurfeeSymbol) -> list[int]:
    x, m = sym, sym.m
    return [k for k in range(1, len(x.alpha) + 1) if x.a(k) - m + 1 >= x.b(k) - 1]


def _phi6_core(x: DurfeeSymbol, name: str):
    m, s, t = x.m, len(x.alpha), len(x.beta)
    k = max(phi6_k_candidates(x))
    assert k >= 3, f"{name}: k={k} < 3 for {x}"
    if k == s:
        gamma = [x.b(i) + m - 1 for i in range(1, s)] + [2] + [1] * (t - s - 1)
    else:
        gamma = (
            [x.b(i) + m - 1 for i in range(1, k)]
            + [x.a(i) + 1 for i in range(k + 1, s + 1)]
            + [2]
            + [1] * (t - s - 1)
        )
    delta = [x.a(i) + 1 - m for i in range(3, k + 1)] + [x.b(i) - 1 for i in range(k, t + 1)]
    return _symbol(gamma, delta, m, x.j + 1, name), k


def phi6_inv_k_candidates(mu: DurfeeSymbol) -> list[int]:
    y, m = mu, mu.m
    return [k for k in range(1, len(y.alpha)) if y.a(k) - m >= y.b(k) and y.a(k + 1) >= 2]


def _phi6_inv_core(y: DurfeeSymbol, name: str):
    m, j, t = y.m, y.j, len(y.alpha)
    if len(y.beta) != t:
        raise ValueError(f"{name}: rows of {y} differ in length")
    candidates = phi6_inv_k_candidates(y)
    if not candidates or 2 not in y.alpha:
        raise ValueError(f"{name}: no admissible k' for {y}")
    k = max(candidates)
    last_two = max(i for i in range(1, t + 1) if y.a(i) == 2)
    alpha = (
        [j + m - 1, j + m - 1]
        + [y.b(i) - 1 + m for i in range(1, k)]
        + [y.a(i) - 1 for i in range(k + 1, last_two)]
    )
    beta = [y.a(i) + 1 - m for i in range(1, k + 1)] + [y.b(i) + 1 for i in range(k, t + 1)]
    return _symbol(alpha, beta, m, j - 1, name), k, last_two


def phi6(sym: DurfeeSymbol) -> MappingTrace:
    if sym.m < 1:
        raise ValueError("phi6 is only defined for m >= 1; use psi2 for m = 0")
    _require(sym, L.Q6, "phi6")
    image, k = _phi6_core(sym, "phi6")
    return MappingTrace("phi6", sym, image, L.Q6, L.P6, {"k": k})


def phi6_inv(mu: DurfeeSymbol) -> MappingTrace:
    if mu.m < 1:
        raise ValueError("phi6_inv is only defined for m >= 1; use psi2_inv for m = 0")
    _require(mu, L.P6, "phi6_inv")
    sym, k, last_two = _phi6_inv_core(mu, "phi6_inv")
    return MappingTrace(
        "phi6_inv", mu, _finish_inverse(sym, L.Q6, "phi6_inv"), L.P6, L.Q6, {"k'": k, "s'": last_two}
    )


def psi2(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.QBAR2, "psi2")
    if sym.m != 0:
        raise ValueError("psi2 is only defined for m = 0")
    image, k = _phi6_core(sym, "psi2")
    return MappingTrace("psi2", sym, image, L.QBAR2, L.PBAR2, {"k": k})


def psi2_inv(mu: DurfeeSymbol) -> MappingTrace:
    if mu.m != 0:
        raise ValueError("psi2_inv is only defined for m = 0")
    _require(mu, L.PBAR2, "psi2_inv")
    sym, k, last_two = _phi6_inv_core(mu, "psi2_inv")
    return MappingTrace(
        "psi2_inv", mu, _finish_inverse(sym, L.QBAR2, "psi2_inv"), L.PBAR2, L.QBAR2, {"k'": k, "s'": last_two}
    )


# Qbar3 -> Pbar3 ---------------------------------------------------------

def psi3(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.QBAR3, "psi3")
    x = sym
    s, t = len(x.alpha), len(x.beta)
    gamma = [b - 1 for b in x.beta[1:]]
    delta = [x.a(i) + 1 for i in range(2, s)] + [1] * (t - s + 1)
    image = _symbol(gamma, delta, 0, x.j + 1, "psi3")
    return MappingTrace("psi3", sym, image, L.QBAR3, L.PBAR3)


def psi3_inv(mu: DurfeeSymbol) -> MappingTrace:
    if mu.m != 0:
        raise ValueError("psi3_inv is only defined for m = 0")
    _require(mu, L.PBAR3, "psi3_inv")
    y = mu
    big = [i for i in range(1, len(y.beta) + 1) if y.b(i) > 1]
    h = max(big) if big else 0
    alpha = [y.j - 1] + [y.b(i) - 1 for i in range(1, h + 1)] + [1]
    beta = [y.j - 1] + [g + 1 for g in y.alpha]
    sym = _symbol(alpha, beta, 0, y.j - 1, "psi3_inv")
    return MappingTrace("psi3_inv", mu, _finish_inverse(sym, L.QBAR3, "psi3_inv"), L.PBAR3, L.QBAR3, {"h'": h})


# Qbar4 <-> P7 (bijection, m = 0) ----------------------------------------

def psi4(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.QBAR4, "psi4")
    x = sym
    s, t = len(x.alpha), len(x.beta)
    gamma = [x.a(2)] + [x.b(i) - 1 for i in range(3, t)]
    delta = [x.b(2) + 1] + [x.a(i) + 1 for i in range(3, s + 1)] + [1] * (t - s - 1)
    image = _symbol(gamma, delta, 0, x.j + 1, "psi4")
    return MappingTrace("psi4", sym, image, L.QBAR4, L.P7)


def psi4_inv(mu: DurfeeSymbol) -> MappingTrace:
    if mu.m != 0:
        raise ValueError("psi4_inv is only defined for m = 0")
    _require(mu, L.P7, "psi4_inv")
    y = mu
    j = y.j - 1
    alpha = [j, y.a(1)] + [d - 1 for d in y.beta[1:] if d > 1]
    beta = [j, y.b(1) - 1] + [g + 1 for g in y.alpha[1:]] + [2]
    sym = _symbol(alpha, beta, 0, j, "psi4_inv")
    return MappingTrace("psi4_inv", mu, _finish_inverse(sym, L.QBAR4, "psi4_inv"), L.P7, L.QBAR4)


# Qbar5 -> P8 (m = 0) ----------------------------------------------------

def psi5(sym: DurfeeSymbol) -> MappingTrace:
    _require(sym, L.QBAR5, "psi5")
    x = sym
    s, t, j = len(x.alpha), len(x.beta), x.j
    k = max(i for i in range(1, s + 1) if x.a(i) == j)
    h = min(i for i in range(1, t + 1) if x.b(i) == 2)
    gamma = (
        [x.a(i) - 1 for i in range(1, k + 1)]
        + [x.b(i) - 1 for i in range(2, h)]
        + [x.b(h)]
        + [1] * (t - h)
    )
    delta = [x.b(1)] + [x.a(i) + 1 for i in range(k + 1, s + 1)] + [1] * (2 * k - 2 + t - s)
    image = _symbol(gamma, delta, 0, j, "psi5")
    return MappingTrace("psi5", sym, image, L.QBAR5, L.P8, {"k": k, "h": h})


def psi5_inv(mu: DurfeeSymbol) -> MappingTrace:
    if mu.m != 0:
        raise ValueError("psi5_inv is only defined for m = 0")
    _require(mu, L.P8, "psi5_inv")
    y = mu
    j, t = y.j, len(y.alpha)
    k = sum(1 for g in y.alpha if g == j - 1)
    twos = [i for i in range(1, t + 1) if y.a(i) == 2]
    h = max(twos) if twos else 0
    r = sum(1 for d in y.beta if d == 1)
    indices = {"k'": k, "h'": h, "r'": r}
    if j >= 4:
        if h <= k:
            raise ValueError(f"psi5_inv: {mu} has no part 2 after its parts {j - 1}")
        alpha = [y.a(i) + 1 for i in range(1, k + 1)] + [y.b(i) - 1 for i in range(2, t + 1)]
        beta = (
            [y.b(1)]
            + [y.a(i) + 1 for i in range(k + 1, h)]
            + [y.a(h)]
            + [y.a(i) + 1 for i in range(h + 1, t + 1)]
        )
    elif j == 3:
        if k < 1 or t - r - 1 < 0:
            raise ValueError(f"psi5_inv: {mu} is not in the image")
        alpha = [3] * (k - 1) + [2] * (t - r - 1)
        beta = [3] + [2] * (t - k + 1)
    else:
        raise ValueError(f"psi5_inv: j'={j} < 3 cannot come from psi5")
    sym = _symbol(alpha, beta, 0, j, "psi5_inv")
    return MappingTrace("psi5_inv", mu, _finish_inverse(sym, L.QBAR5, "psi5_inv"), L.P8, L.QBAR5, indices)


# Dispatch ---------------------------------------------------------------

Map = Callable[[DurfeeSymbol], MappingTrace]

#: label -> (forward, inverse, target label), for m >= 1
ROUTES_POSITIVE_M: dict = {
    L.Q1: (phi1, phi1_inv, L.P1),
    L.Q2: (phi2, phi2_inv, L.P2),
    L.Q3: (phi3, phi3_inv, L.P3),
    L.Q4: (phi4, phi4_inv, L.P4),
    L.Q5: (phi5, phi5_inv, L.P5),
    L.Q6: (phi6, phi6_inv, L.P6),
}

#: the m = 0 dispatch
ROUTES_ZERO_M: dict = {
    L.Q1: (phi1, phi1_inv, L.P1),
    L.Q2: (phi2, phi2_inv, L.P2),
    L.Q3: (phi3, phi3_inv, L.P3),
    L.Q4: (phi4, phi4_inv, L.P4),
    L.QBAR1: (psi1, psi1_inv, L.PBAR1),
    L.QBAR2: (psi2, psi2_inv, L.PBAR2),
    L.QBAR3: (psi3, psi3_inv, L.PBAR3),
    L.QBAR4: (psi4, psi4_inv, L.P7),
    L.QBAR5: (psi5, psi5_inv, L.P8),
}


def routes(m: int) -> dict:
    return ROUTES_ZERO_M if m == 0 else ROUTES_POSITIVE_M


def Phi(sym: DurfeeSymbol, m: int | None = None, strict: bool = False) -> MappingTrace:
    """Send a symbol of Q(m,n) to P(-m,n) through the map for its class."""
    if m is not None and m != sym.m:
        raise ValueError(f"symbol is indexed by m={sym.m}, not {m}")
    label = classify_Q(sym, strict=strict)
    forward, _, _ = routes(sym.m)[label]
    return forward(sym)


def inverse_of(trace: MappingTrace) -> MappingTrace:
    """Apply the inverse of whichever sub-map produced ``trace``."""
    _, inverse, _ = routes(trace.source.m)[trace.source_class]
    return inverse(trace.image)
