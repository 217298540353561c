"""Motzkin words: parsing, ordering, and matched-pair structure.

A word is a string over the alphabet {'0', '(', ')'} whose parentheses
balance (every prefix has at least as many '(' as ')', and the totals are
equal).  Words may carry leading zeros internally; the canonical form used
for ranking has none, the single word "0" being the one exception.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInputError, IllegalCharacterError, UnbalancedError

ZERO = "0"
OPEN = "("
CLOSE = ")"

_SYMBOL_ORDER = {ZERO: 0, OPEN: 1, CLOSE: 2}


@dataclass(frozen=True)
class Word:
    """A validated Motzkin word.  Immutable; construction checks balance."""

    text: str

    def __post_init__(self):
        text = self.text
        if not text:
            raise EmptyInputError("empty input")
        height = 0
        for pos, char in enumerate(text, start=1):
            if char not in _SYMBOL_ORDER:
                raise IllegalCharacterError(pos, char)
            if char == OPEN:
                height += 1
            elif char == CLOSE:
                height -= 1
                if height < 0:
                    raise UnbalancedError(pos)
        if height != 0:
            raise UnbalancedError(None)

    def __len__(self):
        return len(self.text)

    def __str__(self):
        return self.text


@dataclass(frozen=True)
class PairSite:
    """One matched pair: 1-based bracket positions plus nesting depth."""

    open_pos: int
    close_pos: int
    depth: int


@dataclass(frozen=True)
class PrimeSegment:
    """A top-level block of a word, carried with its trailing zeros."""

    word: Word
    start_pos: int


def parse(text: str) -> Word:
    """Validate a character string and return it as a Word."""
    return Word(text)


def is_umw(w: Word) -> bool:
    """True for canonical words: no leading zero, except the word "0" itself."""
    return w.text == ZERO or w.text[0] == OPEN


def matched_pairs(w: Word) -> list[PairSite]:
    """All matched pairs of a word, in order of the opening bracket.

    Pairs are matched by the usual stack discipline; depth counts the
    strictly enclosing pairs, so a top-level pair has depth 0.
    """
    sites: list[tuple[int, int, int]] = []
    stack: list[int] = []
    for pos, char in enumerate(w.text, start=1):
        if char == OPEN:
            stack.append(len(sites))
            sites.append((pos, 0, len(stack) - 1))
        elif char == CLOSE:
            slot = stack.pop()
            open_pos, _, depth = sites[slot]
            sites[slot] = (open_pos, pos, depth)
    return [PairSite(a, b, d) for a, b, d in sites]


def prime_segments(w: Word) -> list[PrimeSegment]:
    """Split a word into its prime segments.

    Each segment starts at the '(' of a top-level pair and runs through the
    last symbol before the next top-level '(' (the final segment takes the
    rest of the word, trailing zeros included).  A word with no brackets has
    no segments.
    """
    tops = [site for site in matched_pairs(w) if site.depth == 0]
    if not tops:
        return []
    text = w.text
    segments = []
    for i, site in enumerate(tops):
        end = tops[i + 1].open_pos - 1 if i + 1 < len(tops) else len(text)
        segments.append(PrimeSegment(Word(text[site.open_pos - 1:end]), site.open_pos))
    return segments


def compare_lex(a: Word, b: Word) -> int:
    """Order words by length, then symbol-wise with '0' < '(' < ')'.

    Returns -1, 0, or 1.
    """
    if len(a.text) != len(b.text):
        return -1 if len(a.text) < len(b.text) else 1
    for ca, cb in zip(a.text, b.text):
        if ca != cb:
            return -1 if _SYMBOL_ORDER[ca] < _SYMBOL_ORDER[cb] else 1
    return 0


def strip_leading_zeros(w: Word) -> Word:
    """Drop leading zeros; an all-zero word collapses to "0"."""
    stripped = w.text.lstrip(ZERO)
    return Word(stripped) if stripped else Word(ZERO)
