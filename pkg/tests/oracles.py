"""Brute-force reference implementations that share no code with the package."""

from itertools import product


def naive_is_primitive(seq) -> bool:
    size = len(seq)
    return not any(size % d == 0 and tuple(seq) == tuple(seq[:d]) * (size // d)
                   for d in range(1, size))


def naive_root(seq):
    size = len(seq)
    for d in range(1, size + 1):
        if size % d == 0 and tuple(seq) == tuple(seq[:d]) * (size // d):
            return tuple(seq[:d]), size // d
    raise ValueError("empty word")


def naive_count_primitive(n: int, l: int) -> int:
    return sum(1 for w in product(range(n), repeat=l) if naive_is_primitive(w))


def naive_pair_counts(n: int, l: int) -> tuple[int, int]:
    """(|E1|, |E2|) by scanning every pair of words, primitive or not."""
    e1 = e2 = 0
    qs = [q for q in product(range(n), repeat=l) if naive_is_primitive(q)]
    for p in product(range(n), repeat=2 * l):
        if not naive_is_primitive(p):
            continue
        for q in qs:
            root, k = naive_root(p + q)
            if k == 1:
                continue
            if len(root) > l:
                e1 += 1
            else:
                e2 += 1
    return e1, e2


def naive_mobius(m: int) -> int:
    result, d = 1, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    return -result if m > 1 else result
