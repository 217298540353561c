#!/usr/bin/env python3
"""Tour of the ordered word sequence: enumeration, ranks, and inverses.

Motzkin words with no leading zeros, sorted by length and then
alphabetically with 0 < ( < ), form a numbered sequence that behaves a
lot like the natural numbers.  This script walks the first few entries
and shows that the closed-form rank, the brute-force count, and the
enumeration position all agree.
"""

from motzkin import oracle, parse, weights

print("The first 13 words, straight from unrank:")
for i in range(13):
    print(f"  {i:3d}  {weights.unrank(i)}")

print()
print("Ranks are computed in closed form, one nest-weight per matched pair.")
for text in ["()", "(0())0", "()0(0())0", "((00)0(0()))"]:
    print(f"  rank({text}) = {weights.rank(parse(text))}")

print()
print("The same numbers fall out of brute force: enumerate every word of")
print("one length in order and count.")
for n in range(1, 7):
    words = oracle.enumerate_range(n)
    joined = " ".join(str(w) for w in words)
    print(f"  length {n}: {len(words):3d} words   {joined}")

print()
print("Each length range runs from (0^(n-2)) up to ()()... :")
for n in range(2, 10):
    lo, lo_wt, hi, hi_wt = weights.range_extrema(n)
    print(f"  length {n}: {lo} at {lo_wt}  ..  {hi} at {hi_wt}")

print()
print("Round trips, three ways, for every word of length <= 9:")
words = [w for n in range(1, 10) for w in oracle.enumerate_range(n)]
assert all(weights.unrank(weights.rank(w)) == w for w in words)
assert all(weights.rank(w) == oracle.rank_by_counting(w) for w in words)
assert [weights.rank(w) for w in words] == list(range(len(words)))
print(f"  rank/unrank/counting agree on all {len(words)} words")

print()
print("unrank works at any scale (the tables are exact integers):")
big = 10**30
print(f"  unrank(10^30) = {weights.unrank(big)}")
print(f"  rank of that  = {weights.rank(weights.unrank(big))}")
