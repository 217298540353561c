"""Prime-pair weights, nest-weights, ranking, and pair decomposition.

A prime pair of size n with its ')' in the k-th position from the word end
has the shape (0^{n-k-1})0^{k-1}.  Its weight is M_{n-1} + delta(k); nested
one level deep it contributes U_n + delta_prime(k) instead, and deeper
nestings follow the three-in-one recurrence

    wt^(s+1)(n, k) = wt^(s)(n+1, k+1) - wt^(s)(n, k) - wt^(s-1)(n, k).

The rank of a whole word is the sum of the nest-weights of its matched
pairs, each taken at its own depth.  That sum is validated exhaustively
against the brute-force oracle by the test suite.

Everything is a pure function over grow-only memo tables: safe for
concurrent readers after a single-threaded warm-up.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from . import oracle, sequences
from .errors import (
    DomainViolationError,
    NotCanonicalError,
    OverlapError,
    PositionConflictError,
)
from .word_model import CLOSE, OPEN, ZERO, Word, is_umw, matched_pairs


def pair_weight(n: int, k: int) -> int:
    """Rank of the single-pair word of size n with ')' k-th from the end."""
    if not n > k >= 1:
        raise DomainViolationError(f"pair weight requires n > k >= 1, got n={n} k={k}")
    return sequences.motzkin_number(n - 1) + sequences.delta(k)


_nest_memo: dict[tuple[int, int, int], int] = {}


def pair_nest_weight(n: int, k: int, s: int) -> int:
    """Weight contributed by the (n, k) pair when nested s levels deep.

    Order 0 is the plain pair weight and order 1 has the closed form
    U_n + delta_prime(k); higher orders recurse through the three-in-one
    equation, which lowers the order each step.  A pair with k <= s cannot
    sit that deep (there are not enough closing brackets after it).
    """
    if s < 0 or not n > k > s:
        raise DomainViolationError(
            f"nest weight requires n > k > s >= 0, got n={n} k={k} s={s}")
    if s == 0:
        return pair_weight(n, k)
    if s == 1:
        return sequences.unique_count(n) + sequences.delta_prime(k)
    key = (n, k, s)
    value = _nest_memo.get(key)
    if value is None:
        value = (pair_nest_weight(n + 1, k + 1, s - 1)
                 - pair_nest_weight(n, k, s - 1)
                 - pair_nest_weight(n, k, s - 2))
        assert value >= 0, f"negative nest weight at {key}"
        _nest_memo[key] = value
    return value


def pair_catalog_index(n: int, k: int) -> int:
    """1-based index of the (n, k) pair in the catalog of all prime pairs."""
    if not n > k >= 1:
        raise DomainViolationError(f"catalog index requires n > k >= 1, got n={n} k={k}")
    return k + (n - 1) * (n - 2) // 2


def prime_pair_word(n: int, k: int) -> Word:
    """The word (0^{n-k-1})0^{k-1} of size n."""
    if not n > k >= 1:
        raise DomainViolationError(f"prime pair requires n > k >= 1, got n={n} k={k}")
    return Word(OPEN + ZERO * (n - k - 1) + CLOSE + ZERO * (k - 1))


@dataclass(frozen=True)
class PairParams:
    """Prime-pair parameters: size n, right-bracket offset k, nesting depth s."""

    n: int
    k: int
    s: int = 0

    def __post_init__(self):
        if self.s < 0 or not self.n > self.k > self.s:
            raise DomainViolationError(
                f"pair parameters require n > k > s >= 0, got {self.n}, {self.k}, {self.s}")

    def word(self) -> Word:
        return prime_pair_word(self.n, self.k)

    def catalog_index(self) -> int:
        return pair_catalog_index(self.n, self.k)

    def nest_weight(self) -> int:
        return pair_nest_weight(self.n, self.k, self.s)


class RangeExtrema(NamedTuple):
    min_word: Word
    min_weight: int
    max_word: Word
    max_weight: int


def range_extrema(n: int) -> RangeExtrema:
    """Smallest and largest canonical word of length n, with their ranks.

    The minimum is (0^{n-2}) at rank M_{n-1}; the maximum is ()
    repeated floor(n/2) times, with a final 0 when n is odd, at M_n - 1.
    """
    if n < 1:
        raise DomainViolationError(f"range_extrema requires n >= 1, got {n}")
    if n == 1:
        zero = Word(ZERO)
        return RangeExtrema(zero, 0, zero, 0)
    lo = Word(OPEN + ZERO * (n - 2) + CLOSE)
    hi = Word((OPEN + CLOSE) * (n // 2) + ZERO * (n % 2))
    return RangeExtrema(lo, sequences.motzkin_number(n - 1),
                        hi, sequences.motzkin_number(n) - 1)


def rank(w: Word) -> int:
    """Rank of a canonical word: the sum of its pairs' nest-weights.

    A pair opening at position a and closing at b in a word of length L
    enters as the (L-a+1, L-b+1) pair at its nesting depth.
    """
    if not is_umw(w):
        raise NotCanonicalError(f"{w.text!r} is not canonical; strip leading zeros first")
    length = len(w)
    return sum(
        pair_nest_weight(length - site.open_pos + 1, length - site.close_pos + 1, site.depth)
        for site in matched_pairs(w))


def unrank(i: int) -> Word:
    """The canonical word of rank i (inverse of `rank`).

    Picks the length n with M_{n-1} <= i < M_n, then chooses one symbol at
    a time in alphabet order, skipping over completion counts until the
    remaining offset is exhausted.
    """
    if i < 0:
        raise DomainViolationError(f"unrank requires a nonnegative index, got {i}")
    if i == 0:
        return Word(ZERO)
    n = 1
    while sequences.motzkin_number(n) <= i:
        n += 1
    offset = i - sequences.motzkin_number(n - 1)
    symbols = [OPEN]
    height = 1
    for pos in range(1, n):
        left = n - pos - 1
        for symbol, new_height in ((ZERO, height), (OPEN, height + 1), (CLOSE, height - 1)):
            if new_height < 0:
                continue
            count = oracle.completions(left, new_height)
            if offset < count:
                symbols.append(symbol)
                height = new_height
                break
            offset -= count
        else:
            raise AssertionError("offset not exhausted within the chosen range")
    return Word("".join(symbols))


@dataclass(frozen=True)
class DecompositionEntry:
    n: int
    k: int
    depth: int
    contribution: int


@dataclass(frozen=True)
class Decomposition:
    """A word's matched pairs as (n, k, depth) triples whose weights sum to its rank."""

    word_length: int
    entries: tuple[DecompositionEntry, ...]
    total: int


def decompose(w: Word) -> Decomposition:
    """Factor a canonical word into prime pairs with weight contributions.

    Entries follow the opening-bracket order; the word "0" decomposes into
    nothing with total 0.
    """
    if not is_umw(w):
        raise NotCanonicalError(f"{w.text!r} is not canonical; strip leading zeros first")
    length = len(w)
    entries = []
    for site in matched_pairs(w):
        n = length - site.open_pos + 1
        k = length - site.close_pos + 1
        entries.append(DecompositionEntry(n, k, site.depth, pair_nest_weight(n, k, site.depth)))
    return Decomposition(length, tuple(entries), sum(e.contribution for e in entries))


def compose(length: int, sites: Iterable[tuple[int, int]]) -> Word:
    """Rebuild a word from pair positions (inverse of `decompose`).

    Writes '(' and ')' at the given 1-based positions and zeros everywhere
    else.  Spans must be pairwise disjoint or nested, positions distinct,
    and the result must be canonical.
    """
    if length < 1:
        raise DomainViolationError(f"compose requires length >= 1, got {length}")
    spans = [(a, b) for a, b in sites]
    used: set[int] = set()
    for a, b in spans:
        if not (1 <= a <= length and 1 <= b <= length):
            raise DomainViolationError(f"span ({a}, {b}) falls outside 1..{length}")
        if a >= b:
            raise DomainViolationError(f"span ({a}, {b}) must open before it closes")
        for pos in (a, b):
            if pos in used:
                raise PositionConflictError(f"position {pos} claimed twice")
            used.add(pos)

    stack: list[tuple[int, int]] = []
    for a, b in sorted(spans):
        while stack and stack[-1][1] < a:
            stack.pop()
        if stack and b > stack[-1][1]:
            raise OverlapError(f"spans {stack[-1]} and {(a, b)} cross")
        stack.append((a, b))

    chars = [ZERO] * length
    for a, b in spans:
        chars[a - 1] = OPEN
        chars[b - 1] = CLOSE
    if length >= 2 and chars[0] != OPEN:
        raise NotCanonicalError("position 1 must open a pair for lengths >= 2")
    return Word("".join(chars))
