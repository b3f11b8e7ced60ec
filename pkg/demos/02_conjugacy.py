"""Deciding conjugacy through ultra summit sets, with a checkable witness."""

from braidkit import BraidWord, are_conjugate, geodesic_length, normalize, ultra_summit_set
from braidkit.acceptance import MORTON, MORTON_CONJUGATE

x = BraidWord.parse("4: 1 -2 3 2 2")
a = BraidWord.parse("4: 3 -1 2")
y = a.inverse() * x * a
ok, cert = are_conjugate(x, y)
print("conjugate:", ok, "witness:", cert.witness_word(), "verified:", cert.verify())

uss, _ = ultra_summit_set(normalize(x))
print(f"USS has {len(uss.elements)} elements, inf={uss.inf} sup={uss.sup}")
for e in uss.elements[:5]:
    print("  ", e)

print("geodesic length over the class:", geodesic_length(normalize(y)))

# sigma_1 and its inverse are never conjugate: exponent sum differs
print(are_conjugate(BraidWord.parse("3: 1"), BraidWord.parse("3: -1"))[0])

# Morton's 4-braid and the rearranged form that exposes an exchange move
print(are_conjugate(MORTON, MORTON_CONJUGATE)[0])
