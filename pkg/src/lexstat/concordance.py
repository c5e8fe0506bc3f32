"""KWIC (keyword-in-context) concordance lines.

One line per token occurrence of the target word, with fixed-width
character contexts and the adjacent tokens as sort keys.  An empty
neighbor (text boundary) sorts before "a".
"""

from __future__ import annotations

from dataclasses import dataclass

from .textio import Corpus, token_span

DEFAULT_WIDTH = 40

SORT_KEYS = ("left-word", "right-word", "position")


@dataclass(frozen=True)
class ConcordanceLine:
    left_context: str
    keyword: str
    right_context: str
    left_neighbor: str
    right_neighbor: str
    source_offset: int

    def format(self, width: int = DEFAULT_WIDTH) -> str:
        return f"{self.left_context:>{width}} | {self.keyword} | {self.right_context:<{width}}"


def _flatten(s: str) -> str:
    return s.replace("\r", " ").replace("\n", " ")


def concordance(
    corpus: Corpus,
    target: str,
    width: int = DEFAULT_WIDTH,
    sort: str = "left-word",
) -> list[ConcordanceLine]:
    """Concordance lines for every occurrence of ``target`` in the corpus.

    ``sort`` is one of "left-word", "right-word", "position"; ties break
    by source offset ascending.
    """
    if width < 1:
        raise ValueError("width must be >= 1")
    if sort not in SORT_KEYS:
        raise ValueError(f"sort must be one of {SORT_KEYS}")
    target = target.lower()
    if not (target.isascii() and target.isalpha()):
        raise ValueError(f"target {target!r} is not a valid token")

    raw = corpus.raw_text
    tokens = corpus.tokens
    lines: list[ConcordanceLine] = []
    for i, (tok, off) in enumerate(tokens):
        if tok != target:
            continue
        start, end = token_span(raw, off)
        lines.append(
            ConcordanceLine(
                left_context=_flatten(raw[max(0, start - width) : start]),
                keyword=raw[start:end],
                right_context=_flatten(raw[end : end + width]),
                left_neighbor=tokens[i - 1][0] if i > 0 else "",
                right_neighbor=tokens[i + 1][0] if i + 1 < len(tokens) else "",
                source_offset=start,
            )
        )
    if sort == "left-word":
        lines.sort(key=lambda ln: (ln.left_neighbor, ln.source_offset))
    elif sort == "right-word":
        lines.sort(key=lambda ln: (ln.right_neighbor, ln.source_offset))
    else:
        lines.sort(key=lambda ln: ln.source_offset)
    return lines
