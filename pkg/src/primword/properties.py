"""Exhaustive checkers for the classical lemmas on primitive words.

Each function scans every instance within the given bounds and returns the
list of counterexamples found (empty when the statement holds).
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .words import (
    Word,
    all_words,
    commute,
    conjugacy_witness,
    is_primitive,
    power,
    primitive_root,
)


def _words_up_to(n: int, max_len: int) -> Iterator[Word]:
    for k in range(1, max_len + 1):
        yield from all_words(n, k)


def _primitives_up_to(n: int, max_len: int) -> list[Word]:
    return [w for w in _words_up_to(n, max_len) if is_primitive(w)]


def root_round_trip(n: int = 2, max_len: int = 10) -> list[Word]:
    bad = []
    for u in _words_up_to(n, max_len):
        root, e = primitive_root(u)
        if power(root, e) != u or not is_primitive(root) or is_primitive(u) != (e == 1):
            bad.append(u)
    return bad


def commutation(n: int = 2, max_len: int = 5) -> list[tuple[Word, Word]]:
    """``uv = vu`` iff ``u`` and ``v`` are powers of one word."""
    words = list(_words_up_to(n, max_len))
    bad = []
    for u in words:
        for v in words:
            common = commute(u, v)
            same_root = primitive_root(u).root == primitive_root(v).root
            if (common is not None) != same_root:
                bad.append((u, v))
    return bad


def transposition(n: int = 2, max_len: int = 10) -> list[tuple[Word, Word, Word]]:
    """Every solution of ``tu = uv`` with ``t != v`` has a valid witness."""
    bad = []
    for t in _words_up_to(n, max_len // 2):
        for u in _words_up_to(n, max_len - len(t)):
            tu = t + u
            v = tu[len(u):]
            if tu[: len(u)] != u or v == t:
                continue
            p, q, m, j = conjugacy_witness(t, v, u)
            if not (is_primitive(p + q) and power(p + q, m) == t
                    and power(q + p, m) == v and (p + q) * j + p == u):
                bad.append((t, v, u))
    return bad


def lentin_schutzenberger(n: int = 2, max_len: int = 4, max_exp: int = 3) -> list:
    """``u ∉ q+`` and ``u q^m = g^k`` imply ``g != q`` and ``|g| > |q^(m-1)|``."""
    prims = _primitives_up_to(n, max_len)
    bad = []
    for q in prims:
        for u in _words_up_to(n, max_len):
            if primitive_root(u).root == q:
                continue
            for m in range(1, max_exp + 1):
                g = primitive_root(u + q * m).root
                if g == q or len(g) <= len(q) * (m - 1):
                    bad.append((u, q, m))
    return bad


def shyr_yu(n: int = 2, max_len: int = 4, max_exp: int = 3) -> list[tuple[Word, Word]]:
    """For distinct primitive ``p, q``, ``{p^i q^j}`` holds at most one non-primitive word;
    when ``|p| = |q|`` only ``pq`` itself may be non-primitive."""
    prims = _primitives_up_to(n, max_len)
    bad = []
    for p in prims:
        for q in prims:
            if p == q:
                continue
            nonprim = [(i, j) for i, j in product(range(1, max_exp + 1), repeat=2)
                       if not is_primitive(p * i + q * j)]
            if len(nonprim) > 1 or (len(p) == len(q) and nonprim not in ([], [(1, 1)])):
                bad.append((p, q))
    return bad


def shyr_tu(n: int = 2, max_len: int = 8) -> list[tuple[Word, Word, Word]]:
    """For ``x != y`` with ``|x| = |y| <= |u|/2``, ``ux`` or ``uy`` is primitive."""
    bad = []
    for u in _words_up_to(n, max_len):
        for k in range(1, len(u) // 2 + 1):
            tails = list(all_words(n, k))
            prim = [is_primitive(u + x) for x in tails]
            nonprim = [x for x, ok in zip(tails, prim) if not ok]
            # any two distinct non-primitive extensions form a counterexample
            if len(nonprim) > 1:
                bad.append((u, nonprim[0], nonprim[1]))
    return bad


def prefix_suffix(n: int = 2, max_len: int = 5, exponents=(2, 3)) -> list[tuple[Word, Word, int, str]]:
    """For primitive ``q`` and a proper nonempty prefix (suffix) ``x``,
    ``q^k x`` (``x q^k``) is primitive."""
    bad = []
    for q in _primitives_up_to(n, max_len):
        for cut in range(1, len(q)):
            pre, suf = q[:cut], q[len(q) - cut:]
            for k in exponents:
                if not is_primitive(q * k + pre):
                    bad.append((q, pre, k, "prefix"))
                if not is_primitive(suf + q * k):
                    bad.append((q, suf, k, "suffix"))
    return bad


def multiple_length(n: int = 2, max_q_len: int = 3, ratios=(2, 3), extra: int = 2) -> list:
    """Distinct primitive ``p, q`` with ``|p| = r|q|``: ``p q^m`` is primitive
    for ``m >= r`` (checked up to ``r + extra``) and ``p^m q`` for ``m in {2, 3}``."""
    bad = []
    for q in _primitives_up_to(n, max_q_len):
        for r in ratios:
            for p_letters in product(range(n), repeat=r * len(q)):
                p = Word(p_letters, n)
                if p == q or not is_primitive(p):
                    continue
                for m in range(r, r + extra + 1):
                    if not is_primitive(p + q * m):
                        bad.append((p, q, m, "pq^m"))
                for m in (2, 3):
                    if not is_primitive(p * m + q):
                        bad.append((p, q, m, "p^mq"))
    return bad


def xq_filter(n: int = 2, max_l: int = 8) -> list[tuple[Word, Word]]:
    """The ``xq`` filter returns a decomposition exactly when ``xq`` is
    non-primitive, and the decomposition rebuilds ``(xqx, q)``."""
    from .pairs import xq_nonprimitive_filter

    bad = []
    for l in range(2, max_l + 1, 2):
        qs = [q for q in all_words(n, l) if is_primitive(q)]
        for x in all_words(n, l // 2):
            for q in qs:
                dec = xq_nonprimitive_filter(x, q)
                if (dec is None) != is_primitive(x + q):
                    bad.append((x, q))
                    continue
                if dec is None:
                    continue
                a, b, s, parity = dec
                reps = 2 * s if parity == "odd" else 2 * s + 1
                ok = ((a + b) * s + a == q and (b + a) * reps + b == x + q + x
                      and is_primitive(a + b)
                      and (len(b) == 2 * len(a) if parity == "odd" else len(a) == 2 * len(b)))
                if not ok:
                    bad.append((x, q))
    return bad


SUITE = {
    "root round trip": root_round_trip,
    "commutation": commutation,
    "transposition witness": transposition,
    "Lentin-Schutzenberger": lentin_schutzenberger,
    "Shyr-Yu": shyr_yu,
    "Shyr-Tu": shyr_tu,
    "prefix/suffix": prefix_suffix,
    "multiple length": multiple_length,
    "xq filter": xq_filter,
}


def run_suite() -> dict[str, list]:
    return {name: check() for name, check in SUITE.items()}
