"""Markov moves on closed braids and the Dehornoy ordering."""

from braidkit import BraidWord, compare, destabilize, homfly, is_positive, stabilize

w = BraidWord.parse("3: 1 2 1 2")
print(w, "->", destabilize(w))
s = stabilize(BraidWord.parse("2: 1 1 1"), -1)
print("stabilized trefoil", s, "same HOMFLY:", homfly(s) == homfly(BraidWord.parse("2: 1 1 1")))

for u, v in [("3: 1", "3: 2"), ("3: 2 1 -2", "3: -1 2 1"), ("3: 1 2 1", "3: 2 1 2")]:
    print(u, compare(BraidWord.parse(u), BraidWord.parse(v)).value, v)

# a word with a negative sigma_1 and no positive one is never sigma-positive
print(is_positive(BraidWord.parse("4: 2 -1 3 3")))
