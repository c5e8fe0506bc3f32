"""Text ingestion and normalization.

Everything downstream works on three views of a text: a wordlist (one word
per line), a corpus (paragraph spans plus word tokens with offsets), and a
letters-only sequence with a–z letter codes.  All normalization is plain
ASCII lowercasing; anything outside a–z is treated as a non-letter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

import numpy as np

ALPHABET = "abcdefghijklmnopqrstuvwxyz"

_TOKEN_RE = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)*")
_GUTENBERG_START = "*** START OF"
_GUTENBERG_END = "*** END OF"


class FormatError(ValueError):
    """A data file does not match its expected format."""


@dataclass(frozen=True)
class WordList:
    """An ordered, case-normalized dictionary wordlist."""

    words: tuple[str, ...]
    source_path: str = ""
    dropped: int = 0  # entries rejected for containing non a-z characters

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)


@dataclass(frozen=True)
class Corpus:
    """A prose text with paragraph spans and lowercase word tokens.

    ``paragraphs`` holds (start, end) character offsets into ``raw_text``;
    ``tokens`` holds (token, char_offset) pairs where the offset points at
    the token's first character in ``raw_text``.
    """

    raw_text: str
    paragraphs: tuple[tuple[int, int], ...]
    tokens: tuple[tuple[str, int], ...]

    @classmethod
    def from_text(cls, text: str) -> "Corpus":
        return cls(
            raw_text=text,
            paragraphs=tuple(segment_paragraphs(text)),
            tokens=tuple(tokenize(text)),
        )

    @classmethod
    def from_file(cls, path: str | Path, strip_boilerplate: bool = True) -> "Corpus":
        text = Path(path).read_text(encoding="utf-8", errors="replace")
        if strip_boilerplate:
            text = strip_gutenberg(text).text
        return cls.from_text(text)


@dataclass(frozen=True)
class LetterSequence:
    """The letters-only view of a text: codes 0–25 plus source offsets."""

    letters: np.ndarray  # uint8 codes, 0 = 'a' .. 25 = 'z'
    offsets: np.ndarray  # int64 character offsets into the source text

    def __post_init__(self):
        if len(self.letters) != len(self.offsets):
            raise ValueError("letters and offsets must have equal length")

    def __len__(self) -> int:
        return len(self.letters)

    def text(self) -> str:
        """The letters as a lowercase string."""
        return "".join(ALPHABET[c] for c in self.letters)


class StrippedText(NamedTuple):
    text: str
    found_start: bool
    found_end: bool

    @property
    def warning(self) -> bool:
        # start marker seen but no matching end marker
        return self.found_start and not self.found_end


def load_wordlist(path: str | Path) -> WordList:
    """Read a one-word-per-line wordlist, lowercasing entries.

    Entries containing anything other than a–z after lowercasing are
    dropped and counted in ``WordList.dropped``.  Blank lines are ignored.
    """
    p = Path(path)
    text = p.read_text(encoding="utf-8", errors="replace")
    words: list[str] = []
    dropped = 0
    for line in text.splitlines():
        entry = line.strip().lower()
        if not entry:
            continue
        if entry.isascii() and entry.isalpha():
            words.append(entry)
        else:
            dropped += 1
    return WordList(words=tuple(words), source_path=str(p), dropped=dropped)


def strip_gutenberg(text: str) -> StrippedText:
    """Remove Project Gutenberg boilerplate around the body text.

    Marker lines are matched by the case-sensitive prefixes
    ``*** START OF`` and ``*** END OF``.  Without markers the text is
    returned unchanged; a start marker without an end marker keeps
    everything after it and sets the warning flag.
    """
    lines = text.splitlines(keepends=True)
    start_idx = end_idx = None
    for i, line in enumerate(lines):
        stripped = line.lstrip()
        if start_idx is None and stripped.startswith(_GUTENBERG_START):
            start_idx = i
        elif start_idx is not None and stripped.startswith(_GUTENBERG_END):
            end_idx = i
            break
    if start_idx is None:
        return StrippedText(text, False, False)
    body_lines = lines[start_idx + 1 : end_idx]
    return StrippedText("".join(body_lines), True, end_idx is not None)


def _lines_with_offsets(text: str):
    """Yield (start, end, line) with end excluding the terminator."""
    pos = 0
    for m in re.finditer(r"[^\n]*\n|[^\n]+$", text):
        line = m.group(0)
        body = line.rstrip("\n").rstrip("\r")
        yield m.start(), m.start() + len(body), body
        pos = m.end()


def segment_paragraphs(text: str) -> list[tuple[int, int]]:
    """Split text into paragraph spans (maximal runs of non-blank lines).

    A blank line is any whitespace-only line.  Each span runs from the
    first character of the paragraph's first line to the last character
    of its last line (line terminators at the boundary excluded).
    """
    spans: list[tuple[int, int]] = []
    current_start: int | None = None
    current_end = 0
    for start, end, body in _lines_with_offsets(text):
        if body.strip():
            if current_start is None:
                current_start = start
            current_end = end
        else:
            if current_start is not None:
                spans.append((current_start, current_end))
                current_start = None
    if current_start is not None:
        spans.append((current_start, current_end))
    return spans


def tokenize(text: str) -> list[tuple[str, int]]:
    """Lowercase word tokens with character offsets.

    A token is a maximal run of ASCII letters, optionally joined by
    internal apostrophes; the apostrophes are dropped from the token
    ("Scrooge's" -> "scrooges").  Hyphens and all other characters split.
    """
    return [(m.group(0).replace("'", "").lower(), m.start()) for m in _TOKEN_RE.finditer(text)]


def token_span(text: str, offset: int) -> tuple[int, int]:
    """The raw-character span of the token starting at ``offset``."""
    m = _TOKEN_RE.match(text, offset)
    if m is None:
        raise ValueError(f"no token starts at offset {offset}")
    return m.start(), m.end()


def letters_of(text: str) -> LetterSequence:
    """Case-folded a–z characters of ``text``, in order, with offsets."""
    codes: list[int] = []
    offsets: list[int] = []
    for i, ch in enumerate(text):
        o = ord(ch)
        if 97 <= o <= 122:
            codes.append(o - 97)
            offsets.append(i)
        elif 65 <= o <= 90:
            codes.append(o - 65)
            offsets.append(i)
    return LetterSequence(
        letters=np.asarray(codes, dtype=np.uint8),
        offsets=np.asarray(offsets, dtype=np.int64),
    )
