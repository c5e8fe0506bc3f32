"""Letter frequencies, coupon-collector expectations, and birthday draws.

The full-collection expectation integrates
``E(N) = \\int_0^inf (1 - prod_i (1 - exp(-p_i t))) dt``
by adaptive quadrature on a truncated interval with a proven tail bound.
The first-repeat (birthday) expectation is estimated by seeded Monte
Carlo, with an exact product-formula evaluation available as a
cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
from scipy.integrate import quad

from . import montecarlo
from .textio import ALPHABET, FormatError, LetterSequence

DAYS_IN_YEAR = 365
WEEKDAY_NAMES = ("monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday")

# Truncation: the integrand is bounded by sum_i exp(-p_i t), so the tail
# beyond T is at most sum_i exp(-p_i T)/p_i.  E(N) >= 1/min(p), so pushing
# the bound below TAIL_FRACTION/min(p) keeps the truncation error below
# TAIL_FRACTION relative.
_TAIL_FRACTION = 1e-10
_QUAD_EPSREL = 1e-10


@dataclass(frozen=True)
class LetterFrequencyTable:
    """Per-letter counts and empirical proportions over a-z."""

    counts: tuple[int, ...]
    total: int
    proportions: tuple[float, ...]

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "LetterFrequencyTable":
        counts = tuple(int(c) for c in counts)
        if len(counts) != 26:
            raise ValueError(f"need 26 letter counts, got {len(counts)}")
        if any(c < 0 for c in counts):
            raise ValueError("letter counts must be non-negative")
        total = sum(counts)
        if total == 0:
            raise ValueError("letter counts are all zero")
        return cls(counts=counts, total=total, proportions=tuple(c / total for c in counts))

    def to_csv(self) -> str:
        """Headerless ``letter,count,proportion`` lines, proportion to 6 dp."""
        return "".join(
            f"{ALPHABET[i]},{self.counts[i]},{self.proportions[i]:.6f}\n" for i in range(26)
        )

    @classmethod
    def from_csv(cls, path: str | Path) -> "LetterFrequencyTable":
        counts = [0] * 26
        seen = set()
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        for lineno, line in enumerate(lines, 1):
            if not line.strip():
                continue
            parts = line.split(",")
            if len(parts) < 2:
                raise FormatError(f"{path}:{lineno}: expected letter,count[,proportion]")
            letter = parts[0].strip().lower()
            if letter not in ALPHABET or letter in seen:
                raise FormatError(f"{path}:{lineno}: bad or repeated letter {parts[0]!r}")
            try:
                counts[ALPHABET.index(letter)] = int(parts[1])
            except ValueError as exc:
                raise FormatError(f"{path}:{lineno}: bad count {parts[1]!r}") from exc
            seen.add(letter)
        if len(seen) != 26:
            raise FormatError(f"{path}: expected 26 letter rows, got {len(seen)}")
        return cls.from_counts(counts)


@dataclass(frozen=True)
class ProbabilityVector:
    """A normalized categorical distribution.

    Entries must be strictly positive unless ``allow_zero`` is set; zero
    entries are fine for first-repeat draws (they never occur) but make
    the full-collection expectation diverge.
    """

    probs: tuple[float, ...]

    def __init__(self, probs: Sequence[float], allow_zero: bool = False):
        probs = tuple(float(p) for p in probs)
        if not probs:
            raise ValueError("empty probability vector")
        if any(p < 0 for p in probs) or (not allow_zero and any(p == 0 for p in probs)):
            raise ValueError("probabilities must be positive (zeros only with allow_zero)")
        s = math.fsum(probs)
        if abs(s - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {s}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def from_weights(cls, weights: Sequence[float], allow_zero: bool = False) -> "ProbabilityVector":
        total = math.fsum(weights)
        if total <= 0:
            raise ValueError("weights must have a positive sum")
        return cls([w / total for w in weights], allow_zero=allow_zero)

    @classmethod
    def uniform(cls, n: int) -> "ProbabilityVector":
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls([1.0 / n] * n)

    def __len__(self) -> int:
        return len(self.probs)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=np.float64)


@dataclass(frozen=True)
class FirstRepeatEstimate:
    estimate: float
    std_error: float
    reps: int


@dataclass(frozen=True)
class DayCounts:
    """Raw per-day counts for a 365-day year plus the normalized vector."""

    counts: tuple[int, ...]
    probabilities: ProbabilityVector
    zero_days: tuple[int, ...]  # 1-based day indices with zero count


@dataclass(frozen=True)
class WeekdaySummary:
    means: dict[str, float]  # weekday name -> mean daily count
    weekend_weekday_ratio: float  # min(Sat, Sun mean) / mean of Mon-Fri means


def letter_frequencies(seq: LetterSequence) -> LetterFrequencyTable:
    """Exact per-letter counts and proportions of a letter sequence."""
    if len(seq) == 0:
        raise ValueError("empty letter sequence")
    counts = np.bincount(seq.letters, minlength=26)
    return LetterFrequencyTable.from_counts(counts.tolist())


def _collection_probs(p) -> np.ndarray:
    if isinstance(p, LetterFrequencyTable):
        arr = np.array(p.counts, dtype=np.float64) / p.total
    elif isinstance(p, ProbabilityVector):
        arr = p.as_array()
    else:
        arr = np.asarray(p, dtype=np.float64)
    if np.any(arr <= 0):
        raise ValueError("full-collection math requires every probability > 0")
    return arr


def expected_full_collection(p) -> float:
    """Expected draws to see every category at least once.

    Accepts a ProbabilityVector, LetterFrequencyTable, or array of
    positive probabilities.  Accurate to better than 1e-6 relative.
    """
    probs = _collection_probs(p)

    def integrand(t: float) -> float:
        # 1 - prod(1 - exp(-p t)), evaluated in log space to keep the
        # far tail (integrand -> 0) at full relative accuracy
        return -math.expm1(np.sum(np.log1p(-np.exp(-probs * t))))

    pmin = probs.min()
    lower_bound = 1.0 / pmin  # E(N) is at least the wait for the rarest type
    t_max = 10.0 / pmin
    while np.sum(np.exp(-probs * t_max) / probs) > _TAIL_FRACTION * lower_bound:
        t_max *= 1.5
    breakpoints = np.geomspace(1.0, t_max, 40)
    value, _ = quad(
        integrand, 0.0, t_max, points=list(breakpoints), limit=2000, epsrel=_QUAD_EPSREL
    )
    return value


def simulate_full_collection(p, reps: int, seed: int) -> np.ndarray:
    """Per-replicate draw counts until a full collection; seeded."""
    probs = _collection_probs(p)
    return montecarlo.sample_until_full_collection(probs, reps, seed)


def exact_first_repeat_expectation(p, max_terms: int | None = None) -> float:
    """Exact E(draws until first repeat) via the product formula.

    P(no repeat in m draws) = m! e_m(p) (elementary symmetric polynomial),
    accumulated by dynamic programming; E = sum over m of that survival
    probability.  For the uniform case this reduces to
    prod_{i<m} (1 - i/n).
    """
    probs = p.as_array() if isinstance(p, ProbabilityVector) else np.asarray(p, float)
    n = len(probs)
    terms = n + 1 if max_terms is None else min(max_terms, n + 1)
    a = np.zeros(terms)  # a[m] = m! e_m over the categories processed so far
    a[0] = 1.0
    m = np.arange(1, terms)
    for pk in probs:
        a[1:] = a[1:] + m * pk * a[:-1]
    return float(math.fsum(np.sort(a)))


def expected_first_repeat(p, reps: int, seed: int) -> FirstRepeatEstimate:
    """Monte Carlo estimate of E(draws until any category repeats)."""
    probs = p.as_array() if isinstance(p, ProbabilityVector) else np.asarray(p, float)
    lengths = montecarlo.sample_until_first_repeat(probs, reps, seed)
    est = float(lengths.mean())
    se = float(lengths.std(ddof=1) / math.sqrt(reps)) if reps > 1 else float("inf")
    return FirstRepeatEstimate(estimate=est, std_error=se, reps=reps)


def load_day_counts(path: str | Path, allow_zero: bool = False) -> DayCounts:
    """Load a ``day,count`` file covering days 1-365.

    Zero-count days are rejected unless ``allow_zero`` (they would make
    the full-collection expectation diverge; first-repeat draws tolerate
    them).
    """
    counts: dict[int, int] = {}
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped:
            continue
        parts = [p.strip() for p in stripped.replace("\t", ",").split(",") if p.strip()]
        if len(parts) != 2:
            parts = stripped.split()
        if len(parts) != 2:
            raise FormatError(f"{path}:{lineno}: expected 'day,count', got {line!r}")
        try:
            day, count = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: non-integer field in {line!r}") from exc
        if not 1 <= day <= DAYS_IN_YEAR:
            raise FormatError(f"{path}:{lineno}: day {day} outside 1-{DAYS_IN_YEAR}")
        if day in counts:
            raise FormatError(f"{path}:{lineno}: duplicate day {day}")
        if count < 0:
            raise FormatError(f"{path}:{lineno}: negative count {count}")
        counts[day] = count
    if len(counts) != DAYS_IN_YEAR:
        raise FormatError(f"{path}: expected {DAYS_IN_YEAR} day records, got {len(counts)}")
    ordered = tuple(counts[d] for d in range(1, DAYS_IN_YEAR + 1))
    zero_days = tuple(d for d in range(1, DAYS_IN_YEAR + 1) if counts[d] == 0)
    if zero_days and not allow_zero:
        raise FormatError(
            f"{path}: zero-count days {zero_days[:5]}... are not allowed "
            "(pass allow_zero for first-repeat use)"
        )
    probs = ProbabilityVector.from_weights(ordered, allow_zero=True)
    return DayCounts(counts=ordered, probabilities=probs, zero_days=zero_days)


def weekday_summary(day_counts: Sequence[int], weekday_of_day1: int) -> WeekdaySummary:
    """Mean daily count per weekday, plus the weekend/weekday ratio.

    ``weekday_of_day1`` is 0-6 with 0 = Monday (so 6 for a year starting
    on a Sunday, e.g. 1978).
    """
    counts = np.asarray(day_counts, dtype=np.float64)
    if len(counts) != DAYS_IN_YEAR:
        raise ValueError(f"need {DAYS_IN_YEAR} day counts, got {len(counts)}")
    if not 0 <= weekday_of_day1 <= 6:
        raise ValueError("weekday_of_day1 must be 0-6 (0 = Monday)")
    weekday = (np.arange(DAYS_IN_YEAR) + weekday_of_day1) % 7
    means = {WEEKDAY_NAMES[w]: float(counts[weekday == w].mean()) for w in range(7)}
    weekday_mean = float(np.mean([means[d] for d in WEEKDAY_NAMES[:5]]))
    weekend_min = min(means["saturday"], means["sunday"])
    return WeekdaySummary(means=means, weekend_weekday_ratio=weekend_min / weekday_mean)
