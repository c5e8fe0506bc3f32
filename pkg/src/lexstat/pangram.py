"""Pangrammatic windows: scanning real text, i.i.d. simulation, histograms.

A pangrammatic window is minimal: it ends exactly where the 26th distinct
letter first appears.  Window scanning uses per-letter occurrence indices
(first occurrence at-or-after the start, for each letter); the naive
forward scan serves as the test oracle.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import montecarlo
from .alphastat import LetterFrequencyTable
from .textio import ALPHABET, Corpus, LetterSequence, letters_of

DEFAULT_BIN_WIDTH = 250
START_MODES = ("paragraph", "letter")

# give up after this many consecutive failed window attempts per requested sample
_MAX_FAILURES_PER_SAMPLE = 100


@dataclass(frozen=True)
class PangramWindow:
    start_letter_index: int
    length: int  # letters in the window; distinct-letters-seen if incomplete
    last_letter: str | None
    complete: bool


@dataclass(frozen=True)
class LengthSample:
    lengths: np.ndarray
    source: str  # "corpus" or "iid"
    seed: int
    discarded: int = 0  # incomplete scans discarded and resampled

    def __len__(self) -> int:
        return len(self.lengths)


@dataclass(frozen=True)
class Histogram:
    bin_width: int
    bins: tuple[tuple[int, int], ...]  # (lower_bound, count)

    def mode_bin(self) -> tuple[int, int]:
        return max(self.bins, key=lambda b: b[1])


@dataclass(frozen=True)
class GapStats:
    letter: str
    count: int
    max_gap: int
    gaps: tuple[int, ...]


def _letter_positions(seq: LetterSequence) -> list[np.ndarray]:
    """Sorted occurrence indices for each of the 26 letters."""
    order = np.argsort(seq.letters, kind="stable")
    sorted_letters = seq.letters[order]
    bounds = np.searchsorted(sorted_letters, np.arange(27))
    return [order[bounds[c] : bounds[c + 1]] for c in range(26)]


def _scan_from(positions: list[np.ndarray], n_letters: int, start: int) -> PangramWindow:
    # first occurrence of each letter at or after start; the window ends at
    # the latest of these firsts
    end = -1
    last_code = -1
    seen = 0
    for code in range(26):
        pos = positions[code]
        i = np.searchsorted(pos, start)
        if i == len(pos):
            continue
        seen += 1
        first = int(pos[i])
        if first > end:
            end = first
            last_code = code
    if seen < 26:
        return PangramWindow(start_letter_index=start, length=seen, last_letter=None, complete=False)
    return PangramWindow(
        start_letter_index=start,
        length=end - start + 1,
        last_letter=ALPHABET[last_code],
        complete=True,
    )


def scan_window(seq: LetterSequence, start: int = 0) -> PangramWindow:
    """The minimal pangrammatic window starting at letter index ``start``.

    If the sequence ends before all 26 letters appear, the returned window
    has ``complete=False`` and ``length`` holds the distinct-letter count.
    """
    if not 0 <= start < len(seq):
        raise ValueError(f"start {start} outside letter sequence of length {len(seq)}")
    return _scan_from(_letter_positions(seq), len(seq), start)


def sample_windows(
    corpus: Corpus, n: int, seed: int, start_mode: str = "paragraph"
) -> LengthSample:
    """Lengths of ``n`` pangrammatic windows sampled from a corpus.

    Each attempt picks a start uniformly at random (with replacement):
    either a paragraph's first letter (default, the sampling frame used
    throughout) or an arbitrary letter index.  The scan continues past the
    starting paragraph to the end of the text; incomplete scans are
    discarded and resampled.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if start_mode not in START_MODES:
        raise ValueError(f"start_mode must be one of {START_MODES}")
    seq = letters_of(corpus.raw_text)
    if len(seq) == 0:
        raise ValueError("corpus contains no letters")
    positions = _letter_positions(seq)

    if start_mode == "paragraph":
        if not corpus.paragraphs:
            raise ValueError("corpus has no paragraphs")
        # first letter index at or after each paragraph's start offset,
        # provided it falls inside the paragraph
        starts = []
        for p_start, p_end in corpus.paragraphs:
            i = int(np.searchsorted(seq.offsets, p_start))
            if i < len(seq) and seq.offsets[i] < p_end:
                starts.append(i)
        if not starts:
            raise ValueError("no paragraph contains a letter")
        start_pool = np.asarray(starts, dtype=np.int64)
    else:
        start_pool = None  # uniform over all letter indices

    rng = montecarlo.chunk_rng(seed, 0)
    lengths = np.empty(n, dtype=np.int64)
    collected = 0
    discarded = 0
    consecutive_failures = 0
    max_failures = n * _MAX_FAILURES_PER_SAMPLE
    while collected < n:
        if start_pool is not None:
            start = int(start_pool[rng.integers(len(start_pool))])
        else:
            start = int(rng.integers(len(seq)))
        window = _scan_from(positions, len(seq), start)
        if window.complete:
            lengths[collected] = window.length
            collected += 1
            consecutive_failures = 0
        else:
            discarded += 1
            consecutive_failures += 1
            if consecutive_failures >= max_failures:
                raise ValueError(
                    f"no complete pangrammatic window after {consecutive_failures} "
                    "consecutive failed attempts; corpus may lack some letter"
                )
    return LengthSample(lengths=lengths, source="corpus", seed=seed, discarded=discarded)


def simulate_iid(freqs: LetterFrequencyTable, n: int, seed: int) -> LengthSample:
    """Lengths of ``n`` pangrams built from i.i.d. letters drawn per ``freqs``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    probs = np.array(freqs.counts, dtype=np.float64) / freqs.total
    if np.any(probs <= 0):
        raise ValueError("every letter needs a positive proportion for i.i.d. pangrams")
    lengths = montecarlo.sample_until_full_collection(probs, n, seed)
    return LengthSample(lengths=lengths, source="iid", seed=seed)


def histogram(sample: LengthSample | Sequence[int], bin_width: int = DEFAULT_BIN_WIDTH) -> Histogram:
    """Counts of lengths per ``[k*bin_width, (k+1)*bin_width)`` bin."""
    if bin_width < 1:
        raise ValueError("bin_width must be >= 1")
    lengths = sample.lengths if isinstance(sample, LengthSample) else np.asarray(sample, np.int64)
    if len(lengths) == 0:
        raise ValueError("empty sample")
    counts = np.bincount(lengths // bin_width)
    bins = tuple((int(k * bin_width), int(c)) for k, c in enumerate(counts))
    return Histogram(bin_width=bin_width, bins=bins)


def letter_gap_stats(seq: LetterSequence, letter: str) -> GapStats:
    """Occurrence count and gap structure of one letter in a sequence.

    Gaps are letter-distances between consecutive occurrences, plus a head
    gap (letters before the first occurrence) and a tail gap (letters
    after the last).  With zero occurrences ``max_gap`` is the sequence
    length.
    """
    letter = letter.lower()
    if letter not in ALPHABET:
        raise ValueError(f"letter must be a-z, got {letter!r}")
    code = ALPHABET.index(letter)
    pos = np.flatnonzero(seq.letters == code)
    if len(pos) == 0:
        return GapStats(letter=letter, count=0, max_gap=len(seq), gaps=())
    head = int(pos[0])
    tail = int(len(seq) - 1 - pos[-1])
    internal = np.diff(pos).tolist()
    gaps = tuple([head] + [int(g) for g in internal] + [tail])
    return GapStats(letter=letter, count=len(pos), max_gap=max(gaps), gaps=gaps)
