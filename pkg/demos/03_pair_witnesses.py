"""
Normal forms of pairs
=====================

Every pair falls in exactly one of three shapes:
p = xqx, or p and q are built from a primitive root split in two pieces.
"""

from primword.pairs import classify_pair, construct_e2, pair_from_root
from primword.words import word

for p, q in [("aaba", "ab"), ("bbabbabb", "abba"), ("baabaabaab", "aabaa")]:
    w = classify_pair(word(p), word(q))
    print(f"p={p:<11} q={q:<6} case {w.case:<3} root={w.root} k={w.k}")

# going the other way: a primitive root u and an exponent d fix the pair
w = pair_from_root(word("bba").letters, 4, 4, 2)
print()
print("from u=bba, d=4:", w.p, w.q, w.case)

print()
print("all six pairs with a short root at n=2, l=4:")
for w in construct_e2(2, 4):
    print(" ", w.p, w.q, w.case, f"alpha={w.alpha} beta={w.beta} s={w.s}")
