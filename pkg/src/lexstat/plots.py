"""Figure rendering for the CLI report paths.

All figures are written straight to files (Agg backend); the delimited
outputs remain the primary machine-readable interface.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .alphastat import DAYS_IN_YEAR, LetterFrequencyTable
from .pangram import Histogram
from .textio import ALPHABET


def save_length_histogram(
    hist: Histogram, path: str | Path, title: str = "Pangram window lengths"
) -> Path:
    """Bar plot of a length histogram."""
    lowers = [b[0] for b in hist.bins]
    counts = [b[1] for b in hist.bins]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.bar(lowers, counts, width=hist.bin_width, align="edge", edgecolor="black", linewidth=0.4)
    ax.set_xlabel("window length (letters)")
    ax.set_ylabel("count")
    ax.set_title(title)
    return _save(fig, path)


def save_length_comparison(
    corpus_hist: Histogram, iid_hist: Histogram, path: str | Path
) -> Path:
    """Corpus vs. i.i.d. length histograms, stacked and drawn to one scale."""
    xmax = max(
        corpus_hist.bins[-1][0] + corpus_hist.bin_width,
        iid_hist.bins[-1][0] + iid_hist.bin_width,
    )
    ymax = max(max(c for _, c in corpus_hist.bins), max(c for _, c in iid_hist.bins))
    fig, axes = plt.subplots(2, 1, figsize=(8, 7), sharex=True)
    for ax, hist, label in ((axes[0], corpus_hist, "corpus windows"), (axes[1], iid_hist, "i.i.d. letters")):
        ax.bar(
            [b[0] for b in hist.bins],
            [b[1] for b in hist.bins],
            width=hist.bin_width,
            align="edge",
            edgecolor="black",
            linewidth=0.4,
        )
        ax.set_xlim(0, xmax)
        ax.set_ylim(0, ymax * 1.05)
        ax.set_ylabel("count")
        ax.set_title(label)
    axes[1].set_xlabel("window length (letters)")
    return _save(fig, path)


def save_letter_frequencies(table: LetterFrequencyTable, path: str | Path) -> Path:
    """Bar plot of empirical letter proportions."""
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar(range(26), table.proportions, tick_label=list(ALPHABET))
    ax.set_ylabel("proportion")
    ax.set_title(f"Letter frequencies (n = {table.total})")
    return _save(fig, path)


def save_day_counts(counts: Sequence[int], path: str | Path) -> Path:
    """Scatter of daily counts vs. day of the year."""
    counts = np.asarray(counts)
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(np.arange(1, DAYS_IN_YEAR + 1), counts, ".", markersize=4)
    ax.set_xlabel("day of year")
    ax.set_ylabel("count")
    ax.set_title("Daily counts")
    return _save(fig, path)


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
