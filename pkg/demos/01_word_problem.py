"""Normal forms decide the word problem; two Garside structures give the same answer."""

from braidkit import BraidWord, delta_word, dual_normalize_classical, equal, normalize

w = BraidWord.parse("4: 1 2 -3 2 1 -2 3 3")
nf = normalize(w)
print("word            ", w)
print("left normal form", nf)
print("inf, sup        ", nf.inf, nf.sup)
print("dual form       ", dual_normalize_classical(w))

# the braid relation and far commutation collapse to the same form
print(equal(BraidWord.parse("3: 1 2 1"), BraidWord.parse("3: 2 1 2")))
print(equal(BraidWord.parse("4: 1 3"), BraidWord.parse("4: 3 1")))

# the full twist is central
d2 = delta_word(4) ** 2
print(equal(d2 * w, w * d2), normalize(d2))
