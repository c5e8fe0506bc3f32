"""Bigram contingency tables and Fisher's exact test.

The hypergeometric pmf over the table's support is built from the exact
integer-ratio recurrence anchored at the distribution's mode, then
normalized with compensated summation.  This keeps every pmf value at
~1e-13 relative accuracy even for corpus-scale grand totals (~1e6), where
naive factorials overflow and log-gamma differences lose digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Relative tolerance when comparing pmf values in the minimum-likelihood
# two-sided rule; guards floating-point ties.
TIE_RTOL = 1e-7


@dataclass(frozen=True)
class ContingencyTable2x2:
    """Four bigram counts; margins are derived on demand."""

    c11: int
    c12: int
    c21: int
    c22: int

    def __post_init__(self):
        for name in ("c11", "c12", "c21", "c22"):
            v = getattr(self, name)
            if v < 0:
                raise ValueError(f"{name} must be non-negative, got {v}")

    @property
    def row1(self) -> int:
        return self.c11 + self.c12

    @property
    def row2(self) -> int:
        return self.c21 + self.c22

    @property
    def col1(self) -> int:
        return self.c11 + self.c21

    @property
    def col2(self) -> int:
        return self.c12 + self.c22

    @property
    def total(self) -> int:
        return self.c11 + self.c12 + self.c21 + self.c22


@dataclass(frozen=True)
class FisherResult:
    p_left: float
    p_right: float
    p_two_sided: float
    expected_c11: float
    point_prob: float


@dataclass(frozen=True)
class CollocationReport:
    table: ContingencyTable2x2
    fisher: FisherResult


def bigram_contingency(tokens: Sequence[str], w1: str, w2: str) -> ContingencyTable2x2:
    """2x2 table of adjacent ordered token pairs (w1, w2) vs. the rest.

    No sentence-boundary breaks: every adjacent pair counts, so the grand
    total is ``len(tokens) - 1``.
    """
    toks = [t[0] if isinstance(t, tuple) else t for t in tokens]
    if len(toks) < 2:
        raise ValueError("need at least 2 tokens to form bigrams")
    c11 = c12 = c21 = 0
    for a, b in zip(toks, toks[1:]):
        if a == w1 and b == w2:
            c11 += 1
        elif b == w2:
            c12 += 1
        elif a == w1:
            c21 += 1
    c22 = len(toks) - 1 - c11 - c12 - c21
    return ContingencyTable2x2(c11, c12, c21, c22)


def expected_cell(table: ContingencyTable2x2) -> float:
    """Expected c11 under independence: row1 * col1 / total."""
    if table.total == 0:
        raise ValueError("all-zero table has no expected cell")
    return table.row1 * table.col1 / table.total


def hypergeom_log_pmf(k: int, total: int, successes: int, draws: int) -> float:
    """Natural log of the hypergeometric pmf, via log-gamma.

    Returns -inf for ``k`` outside the support.
    """
    if not (0 <= successes <= total and 0 <= draws <= total):
        raise ValueError(
            f"need 0 <= successes={successes}, draws={draws} <= total={total}"
        )
    kmin = max(0, draws + successes - total)
    kmax = min(draws, successes)
    if not kmin <= k <= kmax:
        return -math.inf
    lg = math.lgamma
    return (
        lg(successes + 1)
        - lg(k + 1)
        - lg(successes - k + 1)
        + lg(total - successes + 1)
        - lg(draws - k + 1)
        - lg(total - successes - draws + k + 1)
        - lg(total + 1)
        + lg(draws + 1)
        + lg(total - draws + 1)
    )


def _hypergeom_pmf_support(total: int, successes: int, draws: int):
    """Normalized pmf over the full support, as (kmin, ndarray).

    Weights come from the exact integer-ratio recurrence
    pmf(j+1)/pmf(j) = (successes-j)(draws-j) / ((j+1)(total-successes-draws+j+1))
    started at the mode, then are normalized by a compensated sum of the
    terms in ascending order.
    """
    kmin = max(0, draws + successes - total)
    kmax = min(draws, successes)
    size = kmax - kmin + 1
    if size == 1:
        return kmin, np.ones(1)
    j = np.arange(kmin, kmax, dtype=np.float64)  # ratio from j to j+1
    ratios = ((successes - j) * (draws - j)) / ((j + 1) * (total - successes - draws + j + 1))
    mode = int((draws + 1) * (successes + 1) // (total + 2))
    mode = min(max(mode, kmin), kmax)
    mi = mode - kmin
    w = np.empty(size)
    w[mi] = 1.0
    if mi < size - 1:
        w[mi + 1 :] = np.cumprod(ratios[mi:])
    if mi > 0:
        w[:mi] = np.cumprod(1.0 / ratios[:mi][::-1])[::-1]
    norm = math.fsum(np.sort(w))
    return kmin, w / norm


def fisher_exact(table: ContingencyTable2x2) -> FisherResult:
    """Fisher's exact test on a 2x2 table.

    Conditions on the margins: with N the grand total, K the first column
    margin, n the first row margin, the observed c11 follows a
    hypergeometric law under independence.  ``p_two_sided`` uses the
    minimum-likelihood rule (sum of all outcomes no more probable than the
    observed one, with a small relative tie tolerance); both one-sided
    values are always reported.
    """
    if table.total == 0:
        raise ValueError("all-zero table")
    N, K, n, k = table.total, table.col1, table.row1, table.c11
    kmin, pmf = _hypergeom_pmf_support(N, K, n)
    idx = k - kmin
    point = float(pmf[idx])
    p_left = math.fsum(np.sort(pmf[: idx + 1]))
    p_right = math.fsum(np.sort(pmf[idx:]))
    cutoff = point * (1.0 + TIE_RTOL)
    p_two = math.fsum(np.sort(pmf[pmf <= cutoff]))
    return FisherResult(
        p_left=min(p_left, 1.0),
        p_right=min(p_right, 1.0),
        p_two_sided=min(p_two, 1.0),
        expected_c11=expected_cell(table),
        point_prob=point,
    )


def collocation_report(tokens: Sequence[str], w1: str, w2: str) -> CollocationReport:
    """Contingency table plus Fisher result for an ordered word pair."""
    table = bigram_contingency(tokens, w1, w2)
    return CollocationReport(table=table, fisher=fisher_exact(table))
