#!/usr/bin/env python3
"""Prime pairs and their nest-weights, the package's arithmetic core.

A prime pair of size n with its ')' k-th from the word end looks like
(0^(n-k-1))0^(k-1).  Its rank is M_(n-1) + delta(k).  When such a pair
sits inside other pairs, its contribution to the host word's rank is a
"nest-weight" that depends on the nesting depth s; the depth-1 value has
its own closed form and deeper values follow a three-term recurrence,
which makes the whole family behave like iterated derivatives.
"""

from motzkin import sequences, weights

print("Plain weights of single-pair words:")
for n, k in [(2, 1), (6, 2), (9, 8), (12, 1)]:
    word = weights.prime_pair_word(n, k)
    print(f"  size {n:2d}, offset {k}: {word}  ->  rank {weights.pair_weight(n, k)}")

print()
print("The catalog of all prime pairs, ordered by size then offset:")
for n in range(2, 6):
    for k in range(1, n):
        i = weights.pair_catalog_index(n, k)
        print(f"  #{i:2d}  {weights.prime_pair_word(n, k)}")

print()
print("Nest-weights of the (6, 4) pair at each reachable depth:")
for s in range(4):
    print(f"  depth {s}: {weights.pair_nest_weight(6, 4, s)}")

print()
print("Depth 1 in closed form: U_n + delta_prime(k).")
n, k = 11, 8
value = sequences.unique_count(n) + sequences.delta_prime(k)
assert value == weights.pair_nest_weight(n, k, 1)
print(f"  ({n}, {k}): {sequences.unique_count(n)} + {sequences.delta_prime(k)} = {value}")

print()
print("Deeper levels obey the three-in-one recurrence")
print("  w(s+1)(n, k) + w(s)(n, k) + w(s-1)(n, k) = w(s)(n+1, k+1):")
for n, k, s in [(4, 3, 1), (9, 5, 2), (10, 7, 3)]:
    lhs = (weights.pair_nest_weight(n, k, s + 1)
           + weights.pair_nest_weight(n, k, s)
           + weights.pair_nest_weight(n, k, s - 1))
    rhs = weights.pair_nest_weight(n + 1, k + 1, s)
    print(f"  n={n} k={k} s={s}:  {lhs} == {rhs}")
    assert lhs == rhs

print()
print("Two identities that hold for every size:")
for n in range(3, 10):
    assert weights.pair_nest_weight(n, 2, 1) == sequences.unique_count(n)
    assert weights.pair_nest_weight(n, n - 1, n - 2) == n - 1
print("  depth-1 weight of (n, 2) is U_n; the deepest order of (n, n-1) is n - 1")

print()
print("A slice of the nest-weight table (dash: the pair cannot sit that deep):")
print("  pair        " + "".join(f"{'s=' + str(s):>7}" for s in range(5)))
for n in range(2, 8):
    for k in range(1, n):
        cells = []
        for s in range(5):
            if k > s:
                cells.append(f"{weights.pair_nest_weight(n, k, s):>7}")
            else:
                cells.append(f"{'-':>7}")
        print(f"  {str(weights.prime_pair_word(n, k)):<12}" + "".join(cells))
