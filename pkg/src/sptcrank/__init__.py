"""Rank, crank and spt-crank of integer partitions.

Exact, exhaustive tools around the inequality ``N_<=m(n) >= M_<=m(n)``:
partition statistics, m-Durfee rectangle symbols, the class decomposition
of Q(m,n) and P(-m,n), the injection Phi between them, S-partitions and a
verification harness.
"""

from .classify import ClassLabel, classify_P, classify_Q, in_P, in_Q
from .durfee import DurfeeSymbol, from_symbol, parse_symbol, to_symbol
from .injections import MappingTrace, Phi, inverse_of
from .partitions import (
    INFINITY,
    conjugate,
    count_partitions,
    enumerate_partitions,
    format_partition,
    make_partition,
    parse_partition,
)
from .spt import SPartition, N_S, N_S_mod, enumerate_S, ns_table, spt
from .stats import (
    M,
    M_leq,
    N,
    N_leq,
    RankCrankTable,
    crank,
    p_rank_at_least,
    q_count,
    rank,
    rank_crank_table,
    rank_set_contains,
)
from .verify import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "ClassLabel", "classify_P", "classify_Q", "in_P", "in_Q",
    "DurfeeSymbol", "from_symbol", "parse_symbol", "to_symbol",
    "MappingTrace", "Phi", "inverse_of",
    "INFINITY", "conjugate", "count_partitions", "enumerate_partitions",
    "format_partition", "make_partition", "parse_partition",
    "SPartition", "N_S", "N_S_mod", "enumerate_S", "ns_table", "spt",
    "M", "M_leq", "N", "N_leq", "RankCrankTable", "crank", "p_rank_at_least",
    "q_count", "rank", "rank_crank_table", "rank_set_contains",
    "VerificationReport",
]
