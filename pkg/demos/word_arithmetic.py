#!/usr/bin/env python3
"""Adding, subtracting, decomposing, and rebuilding words.

Words that keep out of each other's way can be merged, and their ranks
simply add; the merge can be undone block by block.  Words whose pairs
nest cannot be merged this way, but they factor into prime pairs whose
nest-weights sum to the rank, and that factorization runs backwards too.
"""

from motzkin import MotzkinError, pair_arith, parse, weights, word_model

x = parse("()0000000")
y = parse("(0())0")
z = pair_arith.padd(x, y)
print("Partial addition right-aligns the shorter word and merges:")
print(f"  {x}  (rank {weights.rank(x)})")
print(f"  + {y!s:>8}  (rank {weights.rank(y)})")
print(f"  = {z}  (rank {weights.rank(z)})")
assert weights.rank(z) == weights.rank(x) + weights.rank(y)

print()
print("Both subtractions recover the operands:")
print(f"  {z} - {y} = {pair_arith.psub(z, y)}")
print(f"  {z} - {x} = {pair_arith.psub(z, x)}")

print()
print("The merged word splits into prime segments at top level:")
for segment in word_model.prime_segments(z):
    print(f"  position {segment.start_pos}: {segment.word}")

print()
print("Not every placement is allowed; the failures are loud:")
for a, b in [("(00)", "()"), ("(000000)", "()00000")]:
    try:
        pair_arith.padd(parse(a), parse(b))
    except MotzkinError as exc:
        print(f"  {a} + {b}: {exc}")

print()
w = parse("((00)0(0()))")
d = weights.decompose(w)
print(f"Nested pairs need the factorization instead.  {w} decomposes as:")
for e in d.entries:
    print(f"  pair ({e.n:2d}, {e.k}) at depth {e.depth}: contributes {e.contribution}")
print(f"  total = {d.total} = rank  ({weights.rank(w)})")

print()
spans = [(d.word_length - e.n + 1, d.word_length - e.k + 1) for e in d.entries]
rebuilt = weights.compose(d.word_length, spans)
print(f"Composing the bracket positions {spans} rebuilds {rebuilt}")
assert rebuilt == w
