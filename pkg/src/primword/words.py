"""Words over a finite alphabet: primitivity, primitive roots, commutation
and the transposition equation ``tu = uv``.

Letters are integers ``0..n-1``. Text rendering maps ``0 -> 'a'``,
``1 -> 'b'``, ... for alphabets of at most 26 letters; larger alphabets use
the bracketed integer syntax ``[0,3,27]``.
"""

from __future__ import annotations

import string
from itertools import product
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

_ASCII = string.ascii_lowercase


class EmptyWordError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Word:
    """An immutable word; ordering is lexicographic on the letters."""

    letters: tuple[int, ...]
    n: int = 2

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"alphabet size must be at least 2, got {self.n}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for a in letters:
            if not 0 <= a < self.n:
                raise ValueError(f"letter {a} outside alphabet of size {self.n}")

    @classmethod
    def parse(cls, text: str, n: int = 2) -> "Word":
        return parse_word(text, n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.n)
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        _same_alphabet(self, other)
        return Word(self.letters + other.letters, self.n)

    def __mul__(self, k: int) -> "Word":
        if not isinstance(k, int):
            return NotImplemented
        return Word(self.letters * k, self.n)

    __pow__ = __mul__

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, n={self.n})"


class RootDecomposition(NamedTuple):
    root: Word
    exponent: int


def _same_alphabet(u: Word, v: Word) -> None:
    if u.n != v.n:
        raise ValueError(f"alphabet mismatch: {u.n} vs {v.n}")


def parse_word(text: str, n: int = 2) -> Word:
    """Parse ``"aabab"`` or ``"[0,0,1,0,1]"`` into a :class:`Word`."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"malformed word {text!r}")
        body = text[1:-1].strip()
        if not body:
            return Word((), n)
        try:
            letters = tuple(int(tok) for tok in body.split(","))
        except ValueError:
            raise ValueError(f"malformed word {text!r}") from None
        return Word(letters, n)
    if n > len(_ASCII):
        raise ValueError(f"alphabet of size {n} requires bracketed integer syntax")
    letters = []
    for ch in text:
        idx = _ASCII.find(ch)
        if idx < 0:
            raise ValueError(f"malformed word {text!r}: unexpected {ch!r}")
        letters.append(idx)
    return Word(tuple(letters), n)


def format_word(u: Word) -> str:
    if u.n <= len(_ASCII):
        return "".join(_ASCII[a] for a in u.letters)
    return "[" + ",".join(str(a) for a in u.letters) + "]"


def word(text: str, n: int = 2) -> Word:
    """Shorthand used in tests and demos: ``word("aab")``."""
    return parse_word(text, n)


def border_array(seq: Sequence[int]) -> list[int]:
    """KMP failure function: ``b[i]`` is the longest proper border of ``seq[:i+1]``."""
    b = [0] * len(seq)
    k = 0
    for i in range(1, len(seq)):
        while k and seq[i] != seq[k]:
            k = b[k - 1]
        if seq[i] == seq[k]:
            k += 1
        b[i] = k
    return b


def smallest_period(seq: Sequence[int]) -> int:
    if not seq:
        raise EmptyWordError("empty word has no period")
    return len(seq) - border_array(seq)[-1]


def root_length(seq: Sequence[int]) -> int:
    # u is a proper power iff its smallest period divides |u| and is < |u|
    size = len(seq)
    period = smallest_period(seq)
    return period if size % period == 0 else size


def is_primitive(u: Word) -> bool:
    if len(u) == 0:
        raise EmptyWordError("empty word has no primitivity status")
    return root_length(u.letters) == len(u)


def primitive_root(u: Word) -> RootDecomposition:
    if len(u) == 0:
        raise EmptyWordError("empty word has no primitive root")
    r = root_length(u.letters)
    return RootDecomposition(u[:r], len(u) // r)


def power(u: Word, k: int) -> Word:
    if k < 1:
        raise ValueError(f"power exponent must be positive, got {k}")
    return u * k


def commute(u: Word, v: Word) -> Optional[Word]:
    """Return the common primitive root of ``u`` and ``v`` if ``uv = vu``."""
    _same_alphabet(u, v)
    if len(u) == 0 or len(v) == 0:
        raise EmptyWordError("commute expects nonempty words")
    if (u + v) != (v + u):
        return None
    root = primitive_root(u).root
    assert primitive_root(v).root == root
    return root


class ConjugacyWitness(NamedTuple):
    p: Word
    q: Word
    m: int
    j: int


def conjugacy_witness(t: Word, v: Word, u: Word) -> ConjugacyWitness:
    """Solve ``tu = uv`` for ``t != v``.

    Returns ``(p, q, m, j)`` with ``pq`` primitive, ``t = (pq)^m``,
    ``v = (qp)^m`` and ``u = (pq)^j p``.
    """
    _same_alphabet(t, v)
    _same_alphabet(t, u)
    if len(t) != len(v) or len(t) == 0:
        raise ValueError("t and v must be nonempty and of equal length")
    if len(u) == 0:
        raise EmptyWordError("u must be nonempty")
    if t == v:
        raise ValueError("t and v must be distinct")
    if t + u != u + v:
        raise ValueError("not a transposition instance: tu != uv")

    root, m = primitive_root(t)
    j, rem = divmod(len(u), len(root))
    p, q = root[:rem], root[rem:]
    # t != v rules out rem == 0; verify the full contract anyway
    if not (power(p + q, m) == t and power(q + p, m) == v
            and (p + q) * j + p == u and len(p) > 0):
        raise AssertionError("transposition witness failed to reconstruct")
    return ConjugacyWitness(p, q, m, j)


def all_words(n: int, k: int) -> Iterable[Word]:
    """Every word of length ``k`` over ``n`` letters, in lexicographic order."""
    for letters in product(range(n), repeat=k):
        yield Word(letters, n)
