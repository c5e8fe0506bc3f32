"""lexstat: corpus statistics workbench.

Wordlist pattern search, KWIC concordancing, Fisher-exact collocation
testing, letter-frequency estimation, coupon-collector expectations, and
pangrammatic-window analysis, with a CLI (``lexstat``) over all of it.
"""

from .alphastat import (
    DayCounts,
    FirstRepeatEstimate,
    LetterFrequencyTable,
    ProbabilityVector,
    WeekdaySummary,
    exact_first_repeat_expectation,
    expected_first_repeat,
    expected_full_collection,
    letter_frequencies,
    load_day_counts,
    simulate_full_collection,
    weekday_summary,
)
from .collocation import (
    CollocationReport,
    ContingencyTable2x2,
    FisherResult,
    bigram_contingency,
    collocation_report,
    expected_cell,
    fisher_exact,
    hypergeom_log_pmf,
)
from .concordance import ConcordanceLine, concordance
from .pangram import (
    GapStats,
    Histogram,
    LengthSample,
    PangramWindow,
    histogram,
    letter_gap_stats,
    sample_windows,
    scan_window,
    simulate_iid,
)
from .textio import (
    ALPHABET,
    Corpus,
    FormatError,
    LetterSequence,
    WordList,
    letters_of,
    load_wordlist,
    segment_paragraphs,
    strip_gutenberg,
    tokenize,
)
from .wordplay import (
    LetterPattern,
    crossword_search,
    hangman_search,
    parse_crossword_pattern,
    parse_hangman_pattern,
    substring_search,
)

__all__ = [name for name in dir() if not name.startswith("_")]
