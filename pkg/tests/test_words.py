from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import naive_is_primitive, naive_root
from primword.words import (
    EmptyWordError,
    Word,
    all_words,
    border_array,
    commute,
    conjugacy_witness,
    format_word,
    is_primitive,
    parse_word,
    power,
    primitive_root,
    smallest_period,
    word,
)

words2 = st.lists(st.integers(0, 1), min_size=1, max_size=40).map(lambda xs: Word(tuple(xs), 2))
words3 = st.lists(st.integers(0, 2), min_size=1, max_size=30).map(lambda xs: Word(tuple(xs), 3))


@pytest.mark.parametrize("text, n, expected", [
    ("ab", 2, True),
    ("aa", 2, False),
    ("aabaab", 2, False),
    ("aaba", 2, True),
    ("abc", 3, True),
    ("a", 2, True),
])
def test_is_primitive_examples(text, n, expected):
    assert is_primitive(word(text, n)) is expected


def test_is_primitive_rejects_empty_word():
    with pytest.raises(EmptyWordError, match="empty word has no primitivity status"):
        is_primitive(Word((), 2))


@pytest.mark.parametrize("n, max_len", [(2, 12), (3, 7)])
def test_is_primitive_matches_brute_force(n, max_len):
    for k in range(1, max_len + 1):
        for letters in product(range(n), repeat=k):
            assert is_primitive(Word(letters, n)) == naive_is_primitive(letters)


@pytest.mark.parametrize("text, n, root, exponent", [
    ("aabaab", 2, "aab", 2),
    ("abc", 3, "abc", 1),
    ("aaaa", 2, "a", 4),
    ("abababab", 2, "ab", 4),
])
def test_primitive_root_examples(text, n, root, exponent):
    assert primitive_root(word(text, n)) == (word(root, n), exponent)


@given(words3)
def test_primitive_root_round_trip(u):
    root, e = primitive_root(u)
    assert power(root, e) == u
    assert is_primitive(root)
    assert is_primitive(u) == (e == 1)
    assert (root.letters, e) == naive_root(u.letters)


@given(words2, st.integers(2, 5))
def test_powers_are_never_primitive(u, k):
    assert not is_primitive(power(u, k))
    assert primitive_root(power(u, k)).root == primitive_root(u).root


@pytest.mark.parametrize("text, k, expected", [("ab", 3, "ababab"), ("a", 1, "a"), ("ba", 2, "baba")])
def test_power(text, k, expected):
    assert power(word(text), k) == word(expected)


def test_power_rejects_zero():
    with pytest.raises(ValueError):
        power(word("ab"), 0)


@pytest.mark.parametrize("u, v, expected", [
    ("ab", "abab", "ab"),
    ("ab", "ba", None),
    ("a", "a", "a"),
    ("abab", "ababab", "ab"),
])
def test_commute(u, v, expected):
    result = commute(word(u), word(v))
    assert result == (None if expected is None else word(expected))


@pytest.mark.parametrize("t, v, u, expected", [
    ("ab", "ba", "a", ("a", "b", 1, 0)),
    ("abab", "baba", "ababa", ("a", "b", 2, 2)),
    ("aab", "aba", "a", ("a", "ab", 1, 0)),
])
def test_conjugacy_witness_examples(t, v, u, expected):
    p, q, m, j = conjugacy_witness(word(t), word(v), word(u))
    assert (format_word(p), format_word(q), m, j) == expected


def test_conjugacy_witness_errors():
    with pytest.raises(ValueError, match="not a transposition instance"):
        conjugacy_witness(word("ab"), word("ba"), word("b"))
    with pytest.raises(ValueError):
        conjugacy_witness(word("ab"), word("ab"), word("a"))


def test_conjugacy_witness_exhaustive():
    seen = 0
    for lt in range(1, 5):
        for t in all_words(2, lt):
            for lu in range(1, 9):
                for u in all_words(2, lu):
                    v = (t + u)[lu:]
                    if (t + u)[:lu] != u or v == t:
                        continue
                    p, q, m, j = conjugacy_witness(t, v, u)
                    assert naive_is_primitive((p + q).letters)
                    assert (p + q) * m == t and (q + p) * m == v and (p + q) * j + p == u
                    seen += 1
    assert seen > 100


def test_fundamental_identity():
    # every word has exactly one root decomposition
    for n, top in ((2, 12), (3, 7)):
        for l in range(1, top + 1):
            by_root_len = {}
            for w in all_words(n, l):
                r = len(primitive_root(w).root)
                by_root_len[r] = by_root_len.get(r, 0) + 1
            assert sum(by_root_len.values()) == n**l
            assert all(l % r == 0 for r in by_root_len)


def test_smallest_period_and_borders():
    assert border_array(word("abaab").letters) == [0, 0, 1, 1, 2]
    assert smallest_period(word("abaab").letters) == 3
    assert smallest_period(word("aaaa").letters) == 1


@pytest.mark.parametrize("text, n, letters", [
    ("aabab", 2, (0, 0, 1, 0, 1)),
    ("[0,0,1,0,1]", 2, (0, 0, 1, 0, 1)),
    ("[27,3]", 30, (27, 3)),
    ("cab", 3, (2, 0, 1)),
])
def test_parse_word(text, n, letters):
    assert parse_word(text, n).letters == letters


def test_format_word_round_trip():
    assert format_word(parse_word("[27,3,0]", 30)) == "[27,3,0]"
    assert str(word("abba")) == "abba"


@pytest.mark.parametrize("text, n", [("abc", 2), ("ab1", 2), ("[0,x]", 2), ("[0,1", 2), ("ab", 30)])
def test_parse_word_rejects_malformed(text, n):
    with pytest.raises(ValueError):
        parse_word(text, n)


def test_word_ordering_is_lexicographic():
    ws = list(all_words(2, 3))
    assert ws == sorted(ws)
    assert word("ab") < word("b")
