"""Pattern-constrained wordlist search: crossword, hangman, substring.

All searches return matches in wordlist (file) order.  The CLI pattern
syntax uses "." for an unconstrained crossword cell and "_" for an unknown
hangman cell; letters are fixed cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .textio import ALPHABET, WordList

_LETTERS = frozenset(ALPHABET)


@dataclass(frozen=True)
class LetterPattern:
    """Positional constraints for a hangman-style search.

    ``fixed`` maps 0-based positions to revealed letters.  ``excluded``
    letters may not appear at any non-fixed position.  Hangman semantics
    require every revealed letter to also be excluded: once a letter is
    guessed, all of its occurrences are revealed, so it cannot hide at an
    unknown position.
    """

    length: int
    fixed: dict[int, str] = field(default_factory=dict)
    excluded: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("pattern length must be positive")
        for pos, letter in self.fixed.items():
            if not 0 <= pos < self.length:
                raise ValueError(f"fixed position {pos} outside word of length {self.length}")
            if letter not in _LETTERS:
                raise ValueError(f"fixed letter {letter!r} is not a-z")
        bad = set(self.excluded) - _LETTERS
        if bad:
            raise ValueError(f"excluded letters {sorted(bad)} are not a-z")
        for letter in self.fixed.values():
            if letter not in self.excluded:
                raise ValueError(
                    f"revealed letter {letter!r} must be in the excluded set "
                    "(revealed letters cannot recur at unknown positions)"
                )


def crossword_search(wordlist: WordList, length: int, fixed: dict[int, str]) -> list[str]:
    """Words of the given length matching every fixed position."""
    for pos in fixed:
        if not 0 <= pos < length:
            raise ValueError(f"fixed position {pos} outside word of length {length}")
    items = sorted(fixed.items())
    return [
        w
        for w in wordlist.words
        if len(w) == length and all(w[i] == c for i, c in items)
    ]


def hangman_search(wordlist: WordList, pattern: LetterPattern) -> list[str]:
    """Words matching fixed positions with no excluded letter at unknown ones."""
    fixed = pattern.fixed
    excluded = pattern.excluded
    length = pattern.length
    out = []
    for w in wordlist.words:
        if len(w) != length:
            continue
        ok = True
        for i, c in enumerate(w):
            want = fixed.get(i)
            if want is not None:
                if c != want:
                    ok = False
                    break
            elif c in excluded:
                ok = False
                break
        if ok:
            out.append(w)
    return out


def substring_search(wordlist: WordList, needle: str) -> list[str]:
    """Words containing ``needle`` as a contiguous substring."""
    if not needle or not (needle.isascii() and needle.isalpha() and needle.islower()):
        raise ValueError("needle must be a non-empty lowercase a-z string")
    return [w for w in wordlist.words if needle in w]


def parse_crossword_pattern(pattern: str) -> tuple[int, dict[int, str]]:
    """Parse a CLI crossword pattern like "...b..u" into (length, fixed)."""
    fixed: dict[int, str] = {}
    for i, ch in enumerate(pattern):
        if ch == ".":
            continue
        if ch.lower() in _LETTERS:
            fixed[i] = ch.lower()
        else:
            raise ValueError(f"invalid crossword pattern character {ch!r} (use a-z or '.')")
    if not pattern:
        raise ValueError("empty crossword pattern")
    return len(pattern), fixed


def parse_hangman_pattern(pattern: str, missed: str = "") -> LetterPattern:
    """Parse a CLI hangman pattern like "_e____s" plus missed letters.

    Revealed letters are inferred from the pattern and automatically added
    to the excluded set alongside the missed guesses.
    """
    fixed: dict[int, str] = {}
    for i, ch in enumerate(pattern):
        if ch == "_":
            continue
        if ch.lower() in _LETTERS:
            fixed[i] = ch.lower()
        else:
            raise ValueError(f"invalid hangman pattern character {ch!r} (use a-z or '_')")
    if not pattern:
        raise ValueError("empty hangman pattern")
    missed_set = set(missed.lower())
    bad = missed_set - _LETTERS
    if bad:
        raise ValueError(f"missed letters {sorted(bad)} are not a-z")
    excluded = frozenset(missed_set | set(fixed.values()))
    return LetterPattern(length=len(pattern), fixed=fixed, excluded=excluded)
