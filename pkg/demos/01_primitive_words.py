"""
Primitive words and their roots
===============================

A word is primitive when it is not a proper power of a shorter word.
"""

from primword import count_primitive, is_primitive, mobius, primitive_root, word

# the root is read off the smallest period of the word
for text in ["aabaab", "abab", "aaba", "aaaa"]:
    root, e = primitive_root(word(text))
    print(f"{text:>8}  root={root}  exponent={e}  primitive={is_primitive(word(text))}")

# counting by Mobius inversion: n^l = sum over d | l of pi_n(d)
print()
for l in range(1, 13):
    print(f"pi_2({l:>2}) = {count_primitive(2, l):>5}")

print()
print("mobius(1..12):", [mobius(m) for m in range(1, 13)])
