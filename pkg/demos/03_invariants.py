"""HOMFLY through the Hecke algebra trace, then its specializations."""

from braidkit import BraidWord, alexander, exchange_factorization, homfly, jones, mfw_bound
from braidkit.acceptance import MORTON, MORTON_CONJUGATE

for name, text in [("trefoil", "2: 1 1 1"), ("figure eight", "3: 1 -2 1 -2"),
                   ("Hopf link", "2: 1 1")]:
    w = BraidWord.parse(text)
    print(f"{name:13s} P = {homfly(w).render()}")
    print(f"{'':13s} V = {jones(w).render()}")
    if name != "Hopf link":
        print(f"{'':13s} A = {alexander(w).render()}")
    print(f"{'':13s} braid index >= {mfw_bound(homfly(w))}")

# Morton's 4-braid closes up to an unknot, so every invariant here is trivial
print("Morton bound:", mfw_bound(homfly(MORTON)), "on", MORTON)
print("same HOMFLY as", MORTON_CONJUGATE, homfly(MORTON) == homfly(MORTON_CONJUGATE))
print("its exchange factorization:", *exchange_factorization(MORTON_CONJUGATE))
