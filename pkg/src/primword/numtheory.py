"""Exact integer arithmetic: Möbius function, divisors, the divisor families
used by the pair counts, and the primitive-word count ``pi_n(l)``.

Everything here returns Python ``int``; there is no floating point.
"""

from __future__ import annotations

import functools
import math
from itertools import combinations
from typing import NamedTuple

SIEVE_LIMIT = 10**6

Factorization = list[tuple[int, int]]
AtomSet = frozenset


@functools.cache
def _sieve() -> tuple[bytearray, list[int]]:
    flags = bytearray([1]) * (SIEVE_LIMIT + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(SIEVE_LIMIT) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, SIEVE_LIMIT + 1, i)))
    primes = [i for i, f in enumerate(flags) if f]
    return flags, primes


def _check_range(value: int) -> None:
    if value < 1:
        raise ValueError(f"expected a positive integer, got {value}")
    if value > SIEVE_LIMIT:
        raise ValueError(f"{value} exceeds the supported range 1..{SIEVE_LIMIT}")


def is_prime(value: int) -> bool:
    if value < 2:
        return False
    _check_range(value)
    return bool(_sieve()[0][value])


@functools.lru_cache(maxsize=None)
def factorize(value: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ascending ``(prime, multiplicity)`` pairs."""
    _check_range(value)
    flags, primes = _sieve()
    result = []
    for p in primes:
        if value == 1:
            break
        if flags[value]:
            result.append((value, 1))
            break
        if value % p == 0:
            count = 0
            while value % p == 0:
                value //= p
                count += 1
            result.append((p, count))
    return tuple(result)


def prime_factors(value: int) -> list[int]:
    return [p for p, _ in factorize(value)]


def mobius(value: int) -> int:
    if value == 0:
        raise ValueError("mobius(0) is undefined")
    fac = factorize(value)
    if any(k > 1 for _, k in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@functools.lru_cache(maxsize=None)
def _divisors(value: int) -> tuple[int, ...]:
    divs = [1]
    for p, k in factorize(value):
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return tuple(sorted(divs))


def divisors(value: int) -> list[int]:
    return list(_divisors(value))


class LambdaSets(NamedTuple):
    all: list[int]
    even: list[int]
    odd: list[int]


def lambda_sets(l: int) -> LambdaSets:
    """Divisors ``d`` of ``l`` with ``d >= 4`` and ``3 ∤ d``, split by parity."""
    lam = [d for d in _divisors(l) if d >= 4 and d % 3]
    return LambdaSets(lam, [d for d in lam if d % 2 == 0], [d for d in lam if d % 2])


class ThreeTwoSplit(NamedTuple):
    m: int
    s: int
    rest: int


def split_three_two(l: int) -> ThreeTwoSplit:
    """Write ``l = 3^m 2^s l1`` with ``gcd(6, l1) = 1``."""
    _check_range(l)
    m = s = 0
    while l % 3 == 0:
        l //= 3
        m += 1
    while l % 2 == 0:
        l //= 2
        s += 1
    return ThreeTwoSplit(m, s, l)


def atom_product(atoms) -> int:
    """Product of the atoms; the empty set gives 1."""
    return math.prod(atoms)


def _ordered_subsets(atoms: list[int]) -> list[frozenset[int]]:
    out = []
    for size in range(len(atoms) + 1):
        out.extend(frozenset(c) for c in combinations(sorted(atoms), size))
    return out


class GammaFamily(NamedTuple):
    kind: int  # 1 when 4 | l, else 2
    sets: list[frozenset[int]]


def gamma_sets(l: int, kind: int | None = None) -> GammaFamily:
    """Nonempty atom subsets other than ``{3}``.

    Atoms are ``{3, 4}`` plus the prime factors of ``l1`` for the first
    family and ``{3}`` plus those primes for the second. By default the
    family is picked from ``l``: the first when ``4 | l``.
    """
    _, s, rest = split_three_two(l)
    if kind is None:
        kind = 1 if s >= 2 else 2
    elif kind not in (1, 2):
        raise ValueError(f"kind must be 1 or 2, got {kind}")
    atoms = prime_factors(rest) + ([3, 4] if kind == 1 else [3])
    sets = [L for L in _ordered_subsets(atoms) if L and L != {3}]
    return GammaFamily(kind, sets)


def omega(value: int) -> int:
    """Number of distinct prime factors."""
    return len(factorize(value))


@functools.lru_cache(maxsize=4096)
def count_primitive(n: int, l: int) -> int:
    """Number of primitive words of length ``l`` over ``n`` letters."""
    if n < 2:
        raise ValueError(f"alphabet size must be at least 2, got {n}")
    _check_range(l)
    return sum(mobius(d) * n ** (l // d) for d in _divisors(l))


def _check_prime_power_args(r: int, m: int, l: int) -> None:
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if math.gcd(l, r) != 1:
        raise ValueError(f"gcd({l}, {r}) != 1")


def lemma1_identity(n: int, r: int, m: int, l: int) -> int:
    """``sum_{d | l} mu(d) (n^(r^(m+1) l/d) - n^(r^m l/d))`` for prime ``r ∤ l``.

    Equals ``count_primitive(n, r^(m+1) l)``.
    """
    _check_prime_power_args(r, m, l)
    hi, lo = r ** (m + 1) * l, r**m * l
    return sum(mobius(d) * (n ** (hi // d) - n ** (lo // d)) for d in _divisors(l))


def corollary1_identity(n: int, r: int, m: int, l: int) -> int:
    """``n^(r^(m+1) l) - n^(r^m l)``; the divisor sum of ``pi_n(r^(m+1) l / d)``."""
    _check_prime_power_args(r, m, l)
    return n ** (r ** (m + 1) * l) - n ** (r**m * l)


class PrimeGap(NamedTuple):
    prime: int
    next_prime: int
    gap: int


def nth_prime(k: int) -> int:
    """The ``k``-th prime, ``nth_prime(1) == 2``."""
    primes = _sieve()[1]
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > len(primes):
        raise ValueError(f"k={k} beyond sieve range ({len(primes)} primes)")
    return primes[k - 1]


def primes_and_gaps(k: int) -> PrimeGap:
    p, q = nth_prime(k), nth_prime(k + 1)
    return PrimeGap(p, q, q - p)
