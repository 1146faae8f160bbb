"""Primitive pairs ``(p, q)`` with ``|p| = 2|q|`` and ``pq`` non-primitive.

Every such pair has exactly one of three shapes:

* case I   -- ``p = xqx`` with ``|q| = 2|x|`` and ``xq`` primitive; ``pq = (xq)^2``
* case II  -- ``p = (βα)^(2s) β``, ``q = (αβ)^s α``, ``|β| = 2|α|``; ``pq = (βα)^(3s+1)``
* case III -- ``p = (βα)^(2s+1) β``, ``q = (αβ)^s α``, ``|α| = 2|β|``; ``pq = (βα)^(3s+2)``

This module enumerates the two families constructively, classifies arbitrary
pairs, and provides the exhaustive oracle used to check both.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Optional

from .numtheory import count_primitive, lambda_sets
from .words import Word, root_length, format_word, is_primitive, primitive_root

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    """The oracle budget, overridable through ``PRIMWORD_BUDGET``."""
    raw = os.environ.get("PRIMWORD_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError(f"PRIMWORD_BUDGET must be positive, got {raw!r}")
    return value


class BudgetExceededError(RuntimeError):
    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        super().__init__(f"{what} needs {required} words, budget is {budget}")
        self.required = required
        self.budget = budget


class PreconditionError(ValueError):
    """Input pair is outside the classified class; ``reason`` is machine readable."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class TrichotomyViolation(AssertionError):
    pass


CASES = ("I", "II", "III")


@dataclass(frozen=True)
class PairWitness:
    p: Word
    q: Word
    case: str
    root: Word
    k: int
    x: Optional[Word] = None
    alpha: Optional[Word] = None
    beta: Optional[Word] = None
    s: Optional[int] = None

    def expand(self) -> tuple[Word, Word]:
        """Rebuild ``(p, q)`` from the decomposition data alone."""
        if self.case == "I":
            return self.x + self.q + self.x, self.q
        ba, ab = self.beta + self.alpha, self.alpha + self.beta
        reps = 2 * self.s if self.case == "II" else 2 * self.s + 1
        return ba * reps + self.beta, ab * self.s + self.alpha

    def to_dict(self) -> dict:
        def fmt(w):
            return None if w is None else format_word(w)

        return {
            "p": fmt(self.p), "q": fmt(self.q), "case": self.case,
            "x": fmt(self.x), "alpha": fmt(self.alpha), "beta": fmt(self.beta),
            "s": self.s, "root": fmt(self.root), "k": self.k,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _check_budget(required: int, budget: Optional[int], what: str) -> None:
    if budget is None:
        budget = default_budget()
    if required > budget:
        raise BudgetExceededError(required, budget, what)


def _primitive_tuples(n: int, k: int) -> list[tuple[int, ...]]:
    return [t for t in product(range(n), repeat=k) if root_length(t) == k]


def enumerate_primitive(n: int, k: int, budget: Optional[int] = None) -> list[Word]:
    """All primitive words of length ``k`` in lexicographic order."""
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    _check_budget(n**k, budget, f"primitive words of length {k}")
    return [Word(t, n) for t in _primitive_tuples(n, k)]


# -- oracle ----------------------------------------------------------------


def oracle_enumerate_E(n: int, l: int, budget: Optional[int] = None):
    """Exhaustively scan every primitive ``p`` of length ``2l`` and ``q`` of
    length ``l``; return ``(E1, E2)`` as sorted lists of ``(p, q)``.

    ``E1`` holds pairs whose product's root is longer than ``q``, ``E2``
    those whose root is shorter.
    """
    _check_budget(n ** (3 * l), budget, "oracle pair scan")
    ps = _primitive_tuples(n, 2 * l)
    qs = _primitive_tuples(n, l)
    e1, e2 = [], []
    for p in ps:
        for q in qs:
            r = root_length(p + q)
            if r == 3 * l:
                continue
            if r == l:
                raise TrichotomyViolation(
                    f"root of pq has length |q| for p={p}, q={q}; k = 3 cannot occur")
            (e1 if r > l else e2).append((Word(p, n), Word(q, n)))
    return e1, e2


# -- classification --------------------------------------------------------


def _case_one(p: Word, q: Word) -> Optional[Word]:
    if len(q) % 2:
        return None
    x = p[: len(q) // 2]
    if x + q + x == p and is_primitive(x + q):
        return x
    return None


def _split_root(root: Word, k: int) -> Optional[tuple[str, int, Word, Word]]:
    if k % 3 == 1 and k >= 4:
        case, s, cut = "II", (k - 1) // 3, 2 * len(root) // 3
    elif k % 3 == 2 and k >= 5:
        case, s, cut = "III", (k - 2) // 3, len(root) // 3
    else:
        return None
    if len(root) % 3:
        return None
    return case, s, root[cut:], root[:cut]


def _case_two_three(p: Word, q: Word, root: Word, k: int, case: str):
    split = _split_root(root, k)
    if split is None or split[0] != case:
        return None
    _, s, alpha, beta = split
    reps = 2 * s if case == "II" else 2 * s + 1
    if ((beta + alpha) * reps + beta == p and (alpha + beta) * s + alpha == q
            and is_primitive(alpha + beta)):
        return alpha, beta, s
    return None


def classify_pair(p: Word, q: Word) -> PairWitness:
    """Decompose a pair into its unique case I / II / III normal form.

    Raises :class:`PreconditionError` when ``(p, q)`` is not a pair of
    primitive words with ``|p| = 2|q|`` and ``pq`` non-primitive.
    """
    if p.n != q.n:
        raise PreconditionError("alphabet mismatch")
    if len(p) == 0 or len(q) == 0:
        raise PreconditionError("empty word")
    if not is_primitive(p):
        raise PreconditionError("p not primitive")
    if not is_primitive(q):
        raise PreconditionError("q not primitive")
    if len(p) != 2 * len(q):
        raise PreconditionError("wrong lengths: |p| != 2|q|")
    root, k = primitive_root(p + q)
    if k == 1:
        raise PreconditionError("pq primitive")

    found = []
    x = _case_one(p, q)
    if x is not None:
        found.append(PairWitness(p, q, "I", root, k, x=x))
    for case in ("II", "III"):
        dec = _case_two_three(p, q, root, k, case)
        if dec is not None:
            alpha, beta, s = dec
            found.append(PairWitness(p, q, case, root, k, alpha=alpha, beta=beta, s=s))
    if len(found) != 1:
        raise TrichotomyViolation(
            f"trichotomy violated for p={p}, q={q}: {len(found)} cases matched (k={k})")
    witness = found[0]
    if witness.expand() != (p, q) or root * k != p + q:
        raise TrichotomyViolation(f"trichotomy violated: witness for p={p}, q={q} does not rebuild")
    if witness.case == "I" and k != 2:
        raise TrichotomyViolation(f"trichotomy violated: case I with k={k}")
    return witness


class XqDecomposition(NamedTuple):
    alpha: Word
    beta: Word
    s: int
    parity: str  # "odd": |β| = 2|α|; "even": |α| = 2|β|


def xq_nonprimitive_filter(x: Word, q: Word) -> Optional[XqDecomposition]:
    """If ``xq`` is non-primitive, return the ``(α, β, s)`` making
    ``(xqx, q)`` a case II pair with odd ``s`` or a case III pair with even ``s``.
    """
    if len(x) == 0 or len(q) != 2 * len(x):
        raise ValueError("need nonempty x with |q| = 2|x|")
    if not is_primitive(q):
        raise ValueError("q must be primitive")
    xq = x + q
    root, j = primitive_root(xq)
    if j == 1:
        return None
    split = _split_root(root, 2 * j)
    if split is None:
        raise TrichotomyViolation(f"xq = {root}^{j} fits neither family")
    case, s, alpha, beta = split
    parity = "odd" if case == "II" else "even"
    half = (s - 1) // 2 if case == "II" else s // 2
    if (s % 2 == 1) != (case == "II") or (beta + alpha) * half + beta != x:
        raise TrichotomyViolation(f"x = {x} does not rebuild from α={alpha}, β={beta}, s={s}")
    return XqDecomposition(alpha, beta, s, parity)


# -- constructive enumeration ----------------------------------------------


def pair_from_root(u: tuple[int, ...], d: int, l: int, n: int) -> PairWitness:
    """Build the case II (d = 1 mod 3) or case III (d = 2 mod 3) pair whose
    product is ``u^d``, for a primitive ``u`` of length ``3l/d``."""
    if d % 3 == 1:
        case, s, cut = "II", (d - 1) // 3, 2 * l // d
    else:
        case, s, cut = "III", (d - 2) // 3, l // d
    root = Word(u, n)
    beta, alpha = root[:cut], root[cut:]
    reps = 2 * s if case == "II" else 2 * s + 1
    p = root * reps + beta
    q = (alpha + beta) * s + alpha
    return PairWitness(p, q, case, root, d, alpha=alpha, beta=beta, s=s)


def _phi_image(n: int, l: int, divisors: list[int]) -> list[PairWitness]:
    out = []
    for d in divisors:
        for u in _primitive_tuples(n, 3 * l // d):
            out.append(pair_from_root(u, d, l, n))
    return out


def construct_e2(n: int, l: int, budget: Optional[int] = None) -> list[PairWitness]:
    """All pairs whose product's root is shorter than ``q``, built from the
    primitive words of length ``3l/d`` for each admissible divisor ``d``."""
    lam = lambda_sets(l).all
    _check_budget(sum(n ** (3 * l // d) for d in lam), budget, "E2 construction")
    out = _phi_image(n, l, lam)
    for w in out:
        assert is_primitive(w.p) and is_primitive(w.q)
        assert len(w.root) < len(w.q) and w.root * w.k == w.p + w.q
    out.sort(key=lambda w: (w.p, w.q))
    return out


def construct_e1(n: int, l: int, budget: Optional[int] = None,
                 check_phi: bool = False) -> list[PairWitness]:
    """All ``(xqx, q)`` with ``|x| = l/2``, ``q`` primitive and ``xq`` primitive.

    With ``check_phi`` the excluded pairs are also generated directly from
    the even admissible divisors and compared as sets.
    """
    if l % 2:
        raise ValueError(f"E1 is only constructed for even l, got {l}")
    half = l // 2
    _check_budget(n**half * count_primitive(n, l), budget, "E1 construction")
    qs = _primitive_tuples(n, l)
    out, excluded = [], []
    for x in product(range(n), repeat=half):
        for q in qs:
            xq = x + q
            pair = (Word(x + q + x, n), Word(q, n))
            if root_length(xq) == 3 * half:
                out.append(PairWitness(pair[0], pair[1], "I", Word(xq, n), 2, x=Word(x, n)))
            else:
                excluded.append(pair)
    if check_phi:
        image = {(w.p, w.q) for w in _phi_image(n, l, lambda_sets(l).even)}
        if image != set(excluded):
            raise AssertionError("excluded pairs differ from the even-divisor construction")
    out.sort(key=lambda w: (w.p, w.q))
    return out
