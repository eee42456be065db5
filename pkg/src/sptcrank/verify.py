"""Exhaustive checks of the rank/crank/spt-crank identities and of Phi.

Each ``verify_*`` function walks a finite lattice of parameters, tests a
list of claims on every point and returns a :class:`VerificationReport`.
Every claim carries its own validity lattice as data (``CLAIMS``), so a
report states exactly which (m, n) range was covered.

Work is split into independent jobs keyed by n.  With ``workers > 1`` the
jobs run in a process pool; results are merged in key order, so the report
is identical for any worker count.  Counterexamples are kept in
enumeration order and capped per claim, so the first one listed is the
smallest.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from . import stats
from .classify import (
    ClassLabel,
    classify_P,
    classify_Q,
    in_P_by_rank,
    in_P_by_symbol,
    in_Q_by_rank_set,
    in_Q_by_symbol,
)
from .durfee import from_symbol, to_symbol
from .injections import inverse_of, routes
from .partitions import count_partitions, enumerate_partitions, format_partition
from .spt import N_S_mod, ns_table, ns_table_factored, spt, spt_bruteforce

#: Largest n at which S-partitions are enumerated.
S_ENUM_CEILING = 26

#: Counterexamples kept per claim.
MAX_WITNESSES = 10

#: Largest n for the enumeration cross-check of the spt recurrence.
SPT_CROSSCHECK_MAX = 40


def _span(lo, hi):
    return [lo, hi]


#: name -> (statement, lattice builder).  Lattices are inclusive ranges;
#: the string "n" means "up to the current n".
CLAIMS = {
    # conjecture
    "q<=p": ("q(m,n) <= p(-m,n)", lambda a: {"n": _span(1, a["max_n"]), "m": _span(0, a["max_m"])}),
    "Nleq>=Mleq": (
        "N_<=m(n) >= M_<=m(n), with M(0,1)=-1, M(+-1,1)=1",
        lambda a: {"n": _span(0, a["max_n"]), "m": _span(0, a["max_m"])},
    ),
    # identities
    "sum N = p": ("sum_r N(r,n) = p(n)", lambda a: {"n": _span(1, a["max_n"])}),
    "sum M = p": ("sum_r M(r,n) = p(n) (raw cranks)", lambda a: {"n": _span(1, a["max_n"])}),
    "N symmetric": ("N(m,n) = N(-m,n)", lambda a: {"n": _span(1, a["max_n"]), "m": _span(0, "n")}),
    "M symmetric": ("M(m,n) = M(-m,n)", lambda a: {"n": _span(2, a["max_n"]), "m": _span(0, "n")}),
    "crank vs rank-set": ("#{crank <= m} = q(m,n)", lambda a: {"n": _span(2, a["max_n"]), "m": _span(0, "n")}),
    "Nleq via p": ("N_<=m(n) = 2 p(-m,n) - p(n)", lambda a: {"n": _span(1, a["max_n"]), "m": _span(0, "n")}),
    "Mleq via q": ("M_<=m(n) = 2 q(m,n) - p(n)", lambda a: {"n": _span(2, a["max_n"]), "m": _span(0, "n")}),
    "difference": (
        "N_<=m(n) - M_<=m(n) = 2 (p(-m,n) - q(m,n))",
        lambda a: {"n": _span(2, a["max_n"]), "m": _span(0, "n")},
    ),
    "Nleq top": ("N_<=n-1(n) = p(n)", lambda a: {"n": _span(2, a["max_n"])}),
    "Mleq top": ("M_<=n-1(n) = p(n) - 2", lambda a: {"n": _span(2, a["max_n"])}),
    # moments
    "Nbar formula": (
        "Nbar_k(n) = 1/2 sum_{m=1}^{n} (m^k-(m-1)^k)(p(n) - N_<=m-1(n))",
        lambda a: {"n": _span(1, a["max_n"]), "k": _span(1, a["max_k"])},
    ),
    "Mbar formula": (
        "Mbar_k(n) = 1/2 sum_{m=1}^{n} (m^k-(m-1)^k)(p(n) - M_<=m-1(n))",
        lambda a: {"n": _span(1, a["max_n"]), "k": _span(1, a["max_k"])},
    ),
    "gap formula": (
        "Mbar_k - Nbar_k = 1/2 sum_{m=1}^{n-1} (m^k-(m-1)^k)(N_<=m-1 - M_<=m-1) + n^k - (n-1)^k",
        lambda a: {"n": _span(1, a["max_n"]), "k": _span(1, a["max_k"])},
    ),
    "Mbar>Nbar": ("Mbar_k(n) > Nbar_k(n)", lambda a: {"n": _span(1, a["max_n"]), "k": _span(1, a["max_k"])}),
    "M2k>N2k": ("M_2k(n) > N_2k(n)", lambda a: {"n": _span(1, a["max_n"]), "k": _span(1, a["max_k"])}),
    "even halves": (
        "N_2k(n) = 2 Nbar_2k(n) and M_2k(n) = 2 Mbar_2k(n)",
        lambda a: {"n": _span(1, a["max_n"]), "k": _span(1, a["max_k"])},
    ),
    "N odd zero": ("N_2k-1(n) = 0", lambda a: {"n": _span(1, a["max_n"]), "k": _span(1, a["max_k"])}),
    "M odd zero": ("M_2k-1(n) = 0", lambda a: {"n": _span(2, a["max_n"]), "k": _span(1, a["max_k"])}),
    # spt
    "spt values": ("spt(3)=5, spt(4)=10, spt(5)=14", lambda a: {"n": [3, 4, 5]}),
    "spt recurrence": (
        "spt(n) by recurrence = spt(n) by enumeration",
        lambda a: {"n": _span(1, min(a["max_n"], SPT_CROSSCHECK_MAX))},
    ),
    "spt mod 5": ("spt(5a+4) = 0 mod 5", lambda a: {"5a+4": _span(4, a["max_n"])}),
    "spt mod 7": ("spt(7a+5) = 0 mod 7", lambda a: {"7a+5": _span(5, a["max_n"])}),
    "spt mod 13": ("spt(13a+6) = 0 mod 13", lambda a: {"13a+6": _span(6, a["max_n"])}),
    "NS mod 5": (
        "N_S(k,5,5a+4) = spt(5a+4)/5 for 0 <= k <= 4",
        lambda a: {"5a+4": _span(4, min(a["max_n"], S_ENUM_CEILING))},
    ),
    "NS mod 7": (
        "N_S(k,7,7a+5) = spt(7a+5)/7 for 0 <= k <= 6",
        lambda a: {"7a+5": _span(5, min(a["max_n"], S_ENUM_CEILING))},
    ),
    "NS total": ("sum_m N_S(m,n) = spt(n)", lambda a: {"n": _span(1, min(a["max_n"], S_ENUM_CEILING))}),
    "NS routes": (
        "N_S by full enumeration = N_S by smallest-part factoring",
        lambda a: {"n": _span(1, min(a["max_n"], S_ENUM_CEILING))},
    ),
    # spt-crank
    "bridge": (
        "N_S(m,n) - N_S(m+1,n) = (N_<=m(n) - M_<=m(n)) / 2",
        lambda a: {"n": _span(2, min(a["max_n"], S_ENUM_CEILING)), "m": _span(0, "n")},
    ),
    "unimodal": (
        "N_S(m,n) >= N_S(m+1,n)",
        lambda a: {"n": _span(1, min(a["max_n"], S_ENUM_CEILING)), "m": _span(0, "n")},
    ),
    "NS nonnegative": (
        "N_S(m,n) >= 0",
        lambda a: {"n": _span(1, min(a["max_n"], S_ENUM_CEILING)), "m": _span(0, "n")},
    ),
    "NS symmetric": (
        "N_S(m,n) = N_S(-m,n)",
        lambda a: {"n": _span(1, min(a["max_n"], S_ENUM_CEILING)), "m": _span(0, "n")},
    ),
    # injection
    "symbol round-trip": (
        "from_symbol(to_symbol(la, m)) = la",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "Q criterion": (
        "m in rank-set  <=>  j = 0 or beta_1 = j",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "P criterion": (
        "rank >= -m  <=>  j = 0 or len(beta) <= len(alpha)",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "unique class": (
        "each symbol of Q(m,n) and of P(-m,n) lies in exactly one class",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "Q1 = P1": ("Q1(m,n) = P1(-m,n)", lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])}),
    "weight": ("|Phi(la)| = |la|", lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])}),
    "codomain": (
        "Phi(la) in P(-m,n)",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "routing": (
        "Phi sends each class to its designated target class",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "injective": (
        "Phi(la) pairwise distinct on Q(m,n)",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "round-trip": (
        "inverse(sub-map(la)) = la",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "index relation": (
        "k' = k for phi4; k' = k - 1 for phi5, phi6, psi1, psi2",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
    "class sizes": (
        "|Q3| = |P3|; |Qbar4| = |P7|; |Q2| = |P2| - [n = m+1]; |Q_i| <= |target|",
        lambda a: {"n": _span(a["min_n"], a["max_n"]), "m": _span(a["min_m"], a["max_m"])},
    ),
}

CONJECTURE_CLAIMS = ["q<=p", "Nleq>=Mleq"]
IDENTITY_CLAIMS = [
    "sum N = p", "sum M = p", "N symmetric", "M symmetric", "crank vs rank-set",
    "Nleq via p", "Mleq via q", "difference", "Nleq top", "Mleq top",
]
MOMENT_CLAIMS = [
    "Nbar formula", "Mbar formula", "gap formula", "Mbar>Nbar", "M2k>N2k",
    "even halves", "N odd zero", "M odd zero",
]
SPT_CLAIMS = [
    "spt values", "spt recurrence", "spt mod 5", "spt mod 7", "spt mod 13",
    "NS mod 5", "NS mod 7", "NS total", "NS routes",
]
SPT_CRANK_CLAIMS = ["bridge", "unimodal", "NS nonnegative", "NS symmetric"]
INJECTION_CLAIMS = [
    "symbol round-trip", "Q criterion", "P criterion", "unique class", "Q1 = P1",
    "weight", "codomain", "routing", "injective", "round-trip", "index relation", "class sizes",
]


@dataclass
class VerificationReport:
    check: str
    parameters: dict
    claims: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    observations: dict = field(default_factory=dict)
    traces: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "check": self.check,
            "status": self.status,
            "parameters": self.parameters,
            "claims": self.claims,
            "counterexamples": self.counterexamples,
        }
        if self.observations:
            out["observations"] = self.observations
        if self.traces:
            out["traces"] = self.traces
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


class _Tally:
    """Case and failure counts per claim, plus the first witnesses."""

    def __init__(self):
        self.cases = Counter()
        self.failures = Counter()
        self.witnesses = []
        self.observations = {}
        self.tallies = {}
        self.traces = []

    def check(self, claim, ok, **witness):
        self.cases[claim] += 1
        if not ok:
            self.failures[claim] += 1
            if self.failures[claim] <= MAX_WITNESSES:
                self.witnesses.append({"claim": claim, **witness})
        return ok

    def merge(self, other: "_Tally"):
        for w in other.witnesses:
            claim = w["claim"]
            if sum(1 for x in self.witnesses if x["claim"] == claim) < MAX_WITNESSES:
                self.witnesses.append(w)
        self.cases.update(other.cases)
        self.failures.update(other.failures)
        for key, values in other.observations.items():
            self.observations.setdefault(key, []).extend(values)
        for key, counts in other.tallies.items():
            self.tallies.setdefault(key, Counter()).update(counts)
        self.traces.extend(other.traces)

    def report(self, check, names, args, started, parameters=None) -> VerificationReport:
        claims = []
        for name in names:
            statement, lattice = CLAIMS[name]
            claims.append({
                "name": name,
                "statement": statement,
                "lattice": lattice(args),
                "cases": self.cases[name],
                "failures": self.failures[name],
            })
        observations = dict(self.observations)
        for key, counts in self.tallies.items():
            observations[key] = dict(sorted(counts.items()))
        return VerificationReport(
            check=check,
            parameters=dict(args if parameters is None else parameters),
            claims=claims,
            counterexamples=list(self.witnesses),
            observations=observations,
            traces=self.traces,
            elapsed=time.perf_counter() - started,
        )


def _run_jobs(fn, keys, workers):
    if workers is None or workers <= 1 or len(keys) < 2:
        return [fn(key) for key in keys]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, keys))


def _merged(parts) -> _Tally:
    total = _Tally()
    for part in parts:
        total.merge(part)
    return total


# conjecture ---------------------------------------------------------------

def _conjecture_job(n, max_m):
    tally = _Tally()
    p = count_partitions(n)
    equal_cases = []
    for m in range(max_m + 1):
        if n >= 1:
            q, pr = stats.q_count(m, n), stats.p_rank_at_least(m, n)
            tally.check("q<=p", q <= pr, n=n, m=m, q=q, p_rank=pr)
        nl, ml = stats.N_leq(m, n), stats.M_leq(m, n)
        tally.check("Nleq>=Mleq", nl >= ml, n=n, m=m, N_leq=nl, M_leq=ml, p=p)
        if nl == ml and m < n:
            equal_cases.append([m, n])
    tally.observations["N_leq = M_leq with m < n"] = equal_cases
    return tally


def verify_conjecture(max_n: int, max_m: int, workers: int = 1) -> VerificationReport:
    """q(m,n) <= p(-m,n) and N_<=m(n) >= M_<=m(n) on the whole lattice."""
    started = time.perf_counter()
    args = {"max_n": max_n, "max_m": max_m}
    parts = _run_jobs(partial(_conjecture_job, max_m=max_m), list(range(max_n + 1)), workers)
    return _merged(parts).report("conjecture", CONJECTURE_CLAIMS, args, started)


# identities ---------------------------------------------------------------

def _identity_job(n):
    tally = _Tally()
    if n < 1:
        return tally
    p = count_partitions(n)
    table = stats.rank_crank_table(n, convention=False)
    tally.check("sum N = p", sum(table.rank_counts.values()) == p, n=n, p=p)
    tally.check("sum M = p", sum(table.crank_counts.values()) == p, n=n, p=p)
    for m in range(n + 1):
        tally.check("N symmetric", table.N(m) == table.N(-m), n=n, m=m, N_m=table.N(m), N_minus_m=table.N(-m))
        nl, pr = stats.N_leq(m, n), stats.p_rank_at_least(m, n)
        tally.check("Nleq via p", nl == 2 * pr - p, n=n, m=m, N_leq=nl, p_rank=pr, p=p)
        if n < 2:
            continue
        tally.check("M symmetric", table.M(m) == table.M(-m), n=n, m=m, M_m=table.M(m), M_minus_m=table.M(-m))
        q, le = stats.q_count(m, n), stats.crank_at_most(m, n)
        tally.check("crank vs rank-set", le == q, n=n, m=m, crank_at_most=le, q=q)
        ml = stats.M_leq(m, n)
        tally.check("Mleq via q", ml == 2 * q - p, n=n, m=m, M_leq=ml, q=q, p=p)
        tally.check("difference", nl - ml == 2 * (pr - q), n=n, m=m, N_leq=nl, M_leq=ml, p_rank=pr, q=q)
    if n >= 2:
        top_n, top_m = stats.N_leq(n - 1, n), stats.M_leq(n - 1, n)
        tally.check("Nleq top", top_n == p, n=n, N_leq=top_n, p=p)
        tally.check("Mleq top", top_m == p - 2, n=n, M_leq=top_m, p=p)
    return tally


def verify_identities(max_n: int, workers: int = 1) -> VerificationReport:
    started = time.perf_counter()
    parts = _run_jobs(_identity_job, list(range(max_n + 1)), workers)
    return _merged(parts).report("identities", IDENTITY_CLAIMS, {"max_n": max_n}, started)


# moments ------------------------------------------------------------------

def _moment_job(n, max_k):
    tally = _Tally()
    for k in range(1, max_k + 1):
        nbar, mbar = stats.positive_rank_moment(k, n), stats.positive_crank_moment(k, n)
        via_n = stats.positive_rank_moment_via_N_leq(k, n)
        via_m = stats.positive_crank_moment_via_M_leq(k, n)
        gap = stats.positive_moment_gap(k, n)
        tally.check("Nbar formula", via_n == nbar, n=n, k=k, direct=nbar, formula=via_n)
        tally.check("Mbar formula", via_m == mbar, n=n, k=k, direct=mbar, formula=via_m)
        tally.check("gap formula", gap == mbar - nbar, n=n, k=k, direct=mbar - nbar, formula=gap)
        tally.check("Mbar>Nbar", mbar > nbar, n=n, k=k, Mbar=mbar, Nbar=nbar)
        n2k, m2k = stats.rank_moment(2 * k, n), stats.crank_moment(2 * k, n)
        tally.check("M2k>N2k", m2k > n2k, n=n, k=k, M_2k=m2k, N_2k=n2k)
        halves = (
            n2k == 2 * stats.positive_rank_moment(2 * k, n)
            and m2k == 2 * stats.positive_crank_moment(2 * k, n)
        )
        tally.check("even halves", halves, n=n, k=k, N_2k=n2k, M_2k=m2k)
        odd_n = stats.rank_moment(2 * k - 1, n)
        tally.check("N odd zero", odd_n == 0, n=n, k=k, N_odd=odd_n)
        if n >= 2:
            odd_m = stats.crank_moment(2 * k - 1, n)
            tally.check("M odd zero", odd_m == 0, n=n, k=k, M_odd=odd_m)
    return tally


def verify_moments(max_k: int, max_n: int, workers: int = 1) -> VerificationReport:
    started = time.perf_counter()
    args = {"max_k": max_k, "max_n": max_n}
    parts = _run_jobs(partial(_moment_job, max_k=max_k), list(range(1, max_n + 1)), workers)
    return _merged(parts).report("moments", MOMENT_CLAIMS, args, started)


# spt ----------------------------------------------------------------------

def _spt_job(n, max_n):
    tally = _Tally()
    value = spt(n)
    if n in (3, 4, 5):
        tally.check("spt values", value == {3: 5, 4: 10, 5: 14}[n], n=n, spt=value)
    if n <= SPT_CROSSCHECK_MAX:
        brute = spt_bruteforce(n)
        tally.check("spt recurrence", brute == value, n=n, recurrence=value, enumeration=brute)
    for modulus, offset in ((5, 4), (7, 5), (13, 6)):
        if n >= offset and (n - offset) % modulus == 0:
            tally.check(f"spt mod {modulus}", value % modulus == 0, n=n, spt=value)
    if n > min(max_n, S_ENUM_CEILING):
        return tally
    table = ns_table(n)
    tally.check("NS total", sum(table.values()) == value, n=n, spt=value, total=sum(table.values()))
    factored = ns_table_factored(n)
    tally.check("NS routes", factored == table, n=n, enumeration=_items(table), factored=_items(factored))
    for modulus, offset in ((5, 4), (7, 5)):
        if n >= offset and (n - offset) % modulus == 0:
            residues = [N_S_mod(k, modulus, n) for k in range(modulus)]
            ok = value % modulus == 0 and all(r == value // modulus for r in residues)
            tally.check(f"NS mod {modulus}", ok, n=n, spt=value, residues=residues)
    return tally


def _items(table):
    return [[m, v] for m, v in sorted(table.items())]


def verify_spt(max_n: int, workers: int = 1) -> VerificationReport:
    started = time.perf_counter()
    parts = _run_jobs(partial(_spt_job, max_n=max_n), list(range(1, max_n + 1)), workers)
    return _merged(parts).report("spt", SPT_CLAIMS, {"max_n": max_n}, started)


def _spt_crank_job(n):
    tally = _Tally()
    table = ns_table(n)
    for m in range(n + 1):
        here, nxt = table.get(m, 0), table.get(m + 1, 0)
        if n >= 2:
            nl, ml = stats.N_leq(m, n), stats.M_leq(m, n)
            tally.check("bridge", 2 * (here - nxt) == nl - ml, n=n, m=m, N_S_m=here, N_S_next=nxt, N_leq=nl, M_leq=ml)
        tally.check("unimodal", here >= nxt, n=n, m=m, N_S_m=here, N_S_next=nxt)
        tally.check("NS nonnegative", here >= 0, n=n, m=m, N_S_m=here)
        tally.check("NS symmetric", here == table.get(-m, 0), n=n, m=m, N_S_m=here, N_S_minus_m=table.get(-m, 0))
    return tally


def verify_spt_crank(max_n: int, workers: int = 1) -> VerificationReport:
    """Unimodality of N_S(., n) and its link to N_<=m - M_<=m."""
    started = time.perf_counter()
    top = min(max_n, S_ENUM_CEILING)
    parts = _run_jobs(_spt_crank_job, list(range(1, top + 1)), workers)
    return _merged(parts).report("spt-crank", SPT_CRANK_CLAIMS, {"max_n": max_n}, started)


# injection ----------------------------------------------------------------

_K_SHIFT = {"phi4": 0, "phi5": 1, "phi6": 1, "psi1": 1, "psi2": 1}


def _injection_job(key, detail=False):
    n, m = key
    tally = _Tally()
    route = routes(m)
    images = {}
    q_sizes, p_sizes = Counter(), Counter()
    uses = tally.tallies["round-trips per sub-map"] = Counter()
    for la in enumerate_partitions(n):
        sym = to_symbol(la, m)
        back = from_symbol(sym)
        where = {"n": n, "m": m, "partition": format_partition(la)}
        tally.check("symbol round-trip", back == la, **where, symbol=str(sym), rebuilt=format_partition(back))
        q_direct, q_symbol = in_Q_by_rank_set(sym), in_Q_by_symbol(sym)
        p_direct, p_symbol = in_P_by_rank(sym), in_P_by_symbol(sym)
        tally.check("Q criterion", q_direct == q_symbol, **where, symbol=str(sym))
        tally.check("P criterion", p_direct == p_symbol, **where, symbol=str(sym))
        p_label = q_label = None
        if p_direct:
            try:
                p_label = classify_P(sym, strict=True)
                tally.check("unique class", True)
            except AssertionError as exc:
                tally.check("unique class", False, **where, symbol=str(sym), error=str(exc))
            p_sizes[p_label] += 1
        if not q_direct:
            continue
        try:
            q_label = classify_Q(sym, strict=True)
            tally.check("unique class", True)
        except AssertionError as exc:
            tally.check("unique class", False, **where, symbol=str(sym), error=str(exc))
            continue
        q_sizes[q_label] += 1
        tally.check(
            "Q1 = P1", (q_label is ClassLabel.Q1) == (p_label is ClassLabel.P1),
            **where, symbol=str(sym), q_class=str(q_label), p_class=str(p_label),
        )
        forward, _, target = route[q_label]
        try:
            trace = forward(sym)
        except (ValueError, AssertionError) as exc:
            tally.check("codomain", False, **where, symbol=str(sym), q_class=str(q_label), error=str(exc))
            continue
        image = trace.image
        if detail:
            tally.traces.append({"n": n, "m": m, **trace.to_dict()})
        witness = dict(where, symbol=str(sym), image=str(image), map=trace.name, indices=trace.indices)
        tally.check("weight", image.weight == n, **witness)
        in_p = in_P_by_rank(image)
        tally.check("codomain", in_p, **witness)
        if in_p:
            got = classify_P(image)
            tally.check("routing", got is target, **witness, expected=str(target), got=str(got))
        rebuilt = from_symbol(image)
        clash = images.get(rebuilt)
        tally.check("injective", clash is None, **witness, collides_with=clash)
        images[rebuilt] = format_partition(la)
        try:
            back_trace = inverse_of(trace)
            ok = back_trace.image == sym
        except (ValueError, AssertionError) as exc:
            back_trace, ok = None, False
            witness["error"] = str(exc)
        tally.check("round-trip", ok, **witness)
        if ok:
            uses[trace.name] += 1
        if trace.name in _K_SHIFT and back_trace is not None:
            expected = trace.indices["k"] - _K_SHIFT[trace.name]
            tally.check("index relation", back_trace.indices["k'"] == expected, **witness, inverse_indices=back_trace.indices)
    sizes = {str(k): v for k, v in sorted(q_sizes.items(), key=lambda kv: kv[0].value)}
    ok = True
    L = ClassLabel
    if q_sizes[L.Q3] != p_sizes[L.P3]:
        ok = False
    if m == 0 and q_sizes[L.QBAR4] != p_sizes[L.P7]:
        ok = False
    if q_sizes[L.Q2] != p_sizes[L.P2] - (1 if n == m + 1 else 0):
        ok = False
    for label, (_, _, target) in route.items():
        if q_sizes[label] > p_sizes[target]:
            ok = False
    tally.check(
        "class sizes", ok, n=n, m=m, q_sizes=sizes,
        p_sizes={str(k): v for k, v in sorted(p_sizes.items(), key=lambda kv: kv[0].value)},
    )
    return tally


def verify_injection(m: int, n: int, detail: bool = False) -> VerificationReport:
    """Run Phi over all of Q(m,n) and check everything it promises."""
    started = time.perf_counter()
    args = {"min_n": n, "max_n": n, "min_m": m, "max_m": m}
    tally = _injection_job((n, m), detail)
    return tally.report("injection", INJECTION_CLAIMS, args, started, {"m": m, "n": n, "detail": detail})


def verify_injections(
    max_n: int, max_m: int, min_n: int = 1, min_m: int = 0, detail: bool = False, workers: int = 1
) -> VerificationReport:
    """:func:`verify_injection` over ``min_n <= n <= max_n``, ``min_m <= m <= max_m``."""
    started = time.perf_counter()
    args = {"min_n": min_n, "max_n": max_n, "min_m": min_m, "max_m": max_m}
    keys = [(n, m) for n in range(min_n, max_n + 1) for m in range(min_m, max_m + 1)]
    parts = _run_jobs(partial(_injection_job, detail=detail), keys, workers)
    return _merged(parts).report("injection", INJECTION_CLAIMS, args, started, dict(args, detail=detail))


# everything ---------------------------------------------------------------

def verify_all(max_n: int, max_m: int, max_k: int = 6, workers: int = 1) -> VerificationReport:
    started = time.perf_counter()
    reports = [
        verify_conjecture(max_n, max_m, workers),
        verify_injections(max_n, max_m, workers=workers),
        verify_identities(max_n, workers),
        verify_moments(max_k, max_n, workers),
        verify_spt(max_n, workers),
        verify_spt_crank(max_n, workers),
    ]
    return combine("all", reports, {"max_n": max_n, "max_m": max_m, "max_k": max_k}, started)


def combine(name, reports, parameters, started=None) -> VerificationReport:
    claims, witnesses = [], []
    for rep in reports:
        claims.extend(dict(c, check=rep.check) for c in rep.claims)
        witnesses.extend(dict(w, check=rep.check) for w in rep.counterexamples)
    observations = {f"{rep.check}: {k}": v for rep in reports for k, v in rep.observations.items()}
    elapsed = time.perf_counter() - started if started is not None else sum(r.elapsed for r in reports)
    return VerificationReport(name, parameters, claims, witnesses, observations, [], elapsed)
