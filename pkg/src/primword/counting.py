"""Counts of primitive pairs ``(p, q)`` with ``|p| = 2|q| = 2l`` and ``pq``
non-primitive.

``eps1`` counts pairs whose product has a root longer than ``q`` (the
``p = xqx`` family), ``eps2`` those whose root is shorter than ``q``, and
``eps`` their sum. Each quantity has several independent formulations:

* ``divisor_sum`` -- sums of ``pi_n(3l/d)`` over divisor families; this is
  the reference every other form is checked against.
* ``closed_form`` -- collapsed expressions in ``n^(3l)``, ``pi_n(3l)`` ...
* ``combinatorial`` -- signed sums over atom subsets.
* ``example_form`` -- specialised polynomials for ``l = 3^m 2^s`` and
  ``l = 3^m p^s``.

Formulas are kept in their original form, including ``eps1_combinatorial``,
which matches the reference only for ``l = 2 * 3^m`` (see FINDINGS.md).
:func:`eps1_combinatorial_corrected` is the repaired form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .numtheory import (
    atom_product,
    count_primitive,
    gamma_sets,
    is_prime,
    lambda_sets,
    prime_factors,
    split_three_two,
)

VARIANTS = ("divisor_sum", "closed_form", "combinatorial", "example_form")
QUANTITIES = ("eps1", "eps2", "eps")


class NotEvaluableError(ValueError):
    """A formula's hypothesis fails or it produces a non-integral exponent."""


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"alphabet size must be at least 2, got {n}")


def _require_even(l: int) -> None:
    if l % 2:
        raise NotEvaluableError(f"eps1 is only defined for even l (got l={l}); it is 0 for odd l")


def _nonneg(value: int) -> int:
    assert value >= 0, f"negative count {value}"
    return value


def _int_power(n: int, exponent: Fraction) -> int:
    if exponent.denominator != 1:
        raise NotEvaluableError(f"non-integral exponent {exponent}")
    return n ** int(exponent)


# -- divisor sums ----------------------------------------------------------


def eps2_divisor_sum(n: int, l: int) -> int:
    _check_n(n)
    return sum(count_primitive(n, 3 * l // d) for d in lambda_sets(l).all)


def eps1_divisor_sum(n: int, l: int) -> int:
    _check_n(n)
    _require_even(l)
    excluded = sum(count_primitive(n, 3 * l // d) for d in lambda_sets(l).even)
    return _nonneg(n ** (l // 2) * count_primitive(n, l) - excluded)


def eps1(n: int, l: int) -> int:
    """``eps1`` extended by 0 to odd ``l``."""
    return eps1_divisor_sum(n, l) if l % 2 == 0 else 0


def eps2(n: int, l: int) -> int:
    return eps2_divisor_sum(n, l)


def eps_total(n: int, l: int) -> int:
    _check_n(n)
    lam = lambda_sets(l)
    if l % 2 == 0:
        extra = sum(count_primitive(n, 3 * l // d) for d in lam.odd)
        return n ** (l // 2) * count_primitive(n, l) + extra
    return sum(count_primitive(n, 3 * l // d) for d in lam.all)


# -- closed forms ----------------------------------------------------------


def _three_free_part(l: int) -> int:
    while l % 3 == 0:
        l //= 3
    return l


def eps2_closed(n: int, l: int) -> int:
    _check_n(n)
    l1 = _three_free_part(l)
    if l1 < 2:
        raise NotEvaluableError("closed form stated for l1 >= 2 (l is a power of 3)")
    value = n ** (3 * l) - n**l - count_primitive(n, 3 * l)
    if l1 % 2 == 0:
        value -= count_primitive(n, 3 * l // 2)
    return _nonneg(value)


def eps1_closed(n: int, l: int) -> int:
    _check_n(n)
    _require_even(l)
    half = l // 2
    value = n**half * (count_primitive(n, l) + 1) + count_primitive(n, 3 * half) - n ** (3 * half)
    return _nonneg(value)


def eps_closed(n: int, l: int) -> int:
    """Closed form of ``eps`` for even ``l`` (so ``l1`` is even and ``>= 2``)."""
    _check_n(n)
    _require_even(l)
    value = (n ** (3 * l) + n ** (l // 2) * (count_primitive(n, l) + 1)
             - n**l - count_primitive(n, 3 * l) - n ** (3 * l // 2))
    return _nonneg(value)


# -- combinatorial forms ---------------------------------------------------


def eps2_combinatorial(n: int, l: int) -> int:
    _check_n(n)
    family = gamma_sets(l)
    total = 0
    for L in family.sets:
        total += (-1) ** (len(L) + 1) * _int_power(n, Fraction(3 * l, atom_product(L)))
    return _nonneg(total)


def _subsets(atoms):
    atoms = sorted(atoms)
    for size in range(len(atoms) + 1):
        yield from combinations(atoms, size)


def eps1_combinatorial(n: int, l: int) -> int:
    """Signed subset sum for ``eps1`` in its original, unrepaired form.

    Raises :class:`NotEvaluableError` when a term's exponent
    ``l / (2 p(L))`` is not an integer.
    """
    _check_n(n)
    _require_even(l)
    total = 0
    for L in _subsets(prime_factors(l)):
        total += (-1) ** len(L) * n ** (l // atom_product(L) + l // 2)
    for L in gamma_sets(l, kind=2).sets:
        total += (-1) ** len(L) * _int_power(n, Fraction(l, 2 * atom_product(L)))
    return total


def eps1_combinatorial_corrected(n: int, l: int) -> int:
    """Repaired subset sum for ``eps1``; agrees with the divisor sum for all even ``l``.

    The second sum runs over atoms ``{3}`` plus the primes of ``l / (2 * 3^m)``
    with exponent ``3l / (2 p(L))``.
    """
    _check_n(n)
    _require_even(l)
    total = 0
    for L in _subsets(prime_factors(l)):
        total += (-1) ** len(L) * n ** (l // atom_product(L) + l // 2)
    atoms = [p for p in prime_factors(l // 2) if p != 3] + [3]
    for L in _subsets(atoms):
        if not L or L == (3,):
            continue
        total += (-1) ** len(L) * _int_power(n, Fraction(3 * l, 2 * atom_product(L)))
    return _nonneg(total)


# -- specialised forms -----------------------------------------------------


@dataclass(frozen=True)
class ExampleForms:
    shape: str  # "3^m*2^s" or "3^m*p^s"
    eps1: Optional[int]
    eps2: Optional[int]
    eps1_evaluable: bool = True
    note: str = ""


def _prime_power_shape(l1: int) -> Optional[tuple[int, int]]:
    fac = prime_factors(l1) if l1 > 1 else []
    if len(fac) != 1:
        return None
    p = fac[0]
    s = 0
    while l1 % p == 0:
        l1 //= p
        s += 1
    return p, s


def example_forms(n: int, l: int) -> Optional[ExampleForms]:
    """Specialised polynomials for ``l = 3^m 2^s`` (``s >= 1``) or
    ``l = 3^m p^s`` (``p >= 5`` prime, ``s >= 1``); ``None`` for other shapes."""
    _check_n(n)
    m, s, rest = split_three_two(l)
    if s >= 1 and rest == 1:
        try:
            e1 = (_int_power(n, Fraction(3 * l, 2)) + _int_power(n, Fraction(2 * l, 3))
                  - n**l - _int_power(n, Fraction(5 * l, 6)))
        except NotEvaluableError as exc:
            e1_ok, e1, note = False, None, f"eps1 example form not evaluable: {exc}"
        else:
            e1_ok, note = True, ""
        e2 = 0 if s == 1 else n ** (3 ** (m + 1) * 2 ** (s - 2)) - n ** (3**m * 2 ** (s - 2))
        return ExampleForms("3^m*2^s", e1, e2, e1_ok, note)
    if s == 0:
        shape = _prime_power_shape(rest)
        if shape is not None and shape[0] >= 5 and is_prime(shape[0]):
            p, t = shape
            e2 = n ** (3 ** (m + 1) * p ** (t - 1)) - n ** (3**m * p ** (t - 1))
            return ExampleForms("3^m*p^s", 0, e2)
    return None


# -- consistency report ----------------------------------------------------


@dataclass
class CountReport:
    n: int
    l: int
    variants: dict[str, dict[str, int]] = field(default_factory=dict)
    oracle: Optional[dict[str, int]] = None
    agreements: list[tuple[str, str, bool]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(eq for _, _, eq in self.agreements)

    def disagreements(self) -> list[tuple[str, str, bool]]:
        return [a for a in self.agreements if not a[2]]

    def verdict(self, a: str, b: str) -> Optional[bool]:
        for x, y, eq in self.agreements:
            if {x, y} == {a, b}:
                return eq
        return None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "variants": {q: dict(sorted(v.items())) for q, v in self.variants.items()},
            "oracle": self.oracle,
            "agreements": [{"a": a, "b": b, "equal": eq} for a, b, eq in self.agreements],
            "notes": list(self.notes),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def csv_rows(self) -> list[dict]:
        """One row per (quantity, variant) value, oracle included."""
        rows = []
        for quantity, values in self.variants.items():
            for name, value in sorted(values.items()):
                rows.append({"n": self.n, "l": self.l, "quantity": quantity,
                             "variant": name, "value": value})
        if self.oracle is not None:
            for quantity, value in self.oracle.items():
                rows.append({"n": self.n, "l": self.l, "quantity": quantity,
                             "variant": "oracle", "value": value})
        return rows


def _eps1_variants(n: int, l: int, notes: list[str]) -> dict[str, int]:
    if l % 2:
        notes.append(f"eps1 is 0 for odd l={l}: p = xqx needs |q| = 2|x|")
        return {"divisor_sum": 0}
    out = {"divisor_sum": eps1_divisor_sum(n, l), "closed_form": eps1_closed(n, l)}
    try:
        out["combinatorial"] = eps1_combinatorial(n, l)
    except NotEvaluableError as exc:
        notes.append(f"eps1.combinatorial not evaluable: {exc}")
    return out


def _eps2_variants(n: int, l: int, notes: list[str]) -> dict[str, int]:
    out = {"divisor_sum": eps2_divisor_sum(n, l), "combinatorial": eps2_combinatorial(n, l)}
    try:
        out["closed_form"] = eps2_closed(n, l)
    except NotEvaluableError as exc:
        notes.append(f"eps2.closed_form not evaluable: {exc}")
    return out


def consistency_report(n: int, l: int, oracle_budget: Optional[int] = 10**7) -> CountReport:
    """Evaluate every applicable formulation and record pairwise verdicts.

    The brute-force oracle runs when ``n^(3l) <= oracle_budget``; pass
    ``None`` to disable it.
    """
    from .pairs import oracle_enumerate_E

    _check_n(n)
    report = CountReport(n, l)
    notes = report.notes
    e1 = _eps1_variants(n, l, notes)
    e2 = _eps2_variants(n, l, notes)
    e = {"divisor_sum": eps_total(n, l)}
    if l % 2 == 0:
        e["closed_form"] = eps_closed(n, l)
    if "combinatorial" in e1 or l % 2:
        e["combinatorial"] = e1.get("combinatorial", 0) + e2["combinatorial"]

    ex = example_forms(n, l)
    if ex is None:
        notes.append(f"no specialised form for l={l}")
    else:
        if ex.eps1 is not None:
            e1["example_form"] = ex.eps1
        else:
            notes.append(ex.note)
        e2["example_form"] = ex.eps2
        if ex.eps1 is not None:
            e["example_form"] = ex.eps1 + ex.eps2

    report.variants = {"eps1": e1, "eps2": e2, "eps": e}
    bound = n ** (3 * l)
    for quantity, values in report.variants.items():
        assert 0 <= values["divisor_sum"] <= bound
        for name, value in values.items():
            if not 0 <= value <= bound:
                notes.append(f"{quantity}.{name} = {value} lies outside [0, n^(3l)]")

    if oracle_budget is not None and n ** (3 * l) <= oracle_budget:
        E1, E2 = oracle_enumerate_E(n, l, budget=oracle_budget)
        report.oracle = {"eps1": len(E1), "eps2": len(E2), "eps": len(E1) + len(E2)}
    elif oracle_budget is not None:
        notes.append(f"oracle skipped: n^(3l) = {n ** (3 * l)} exceeds budget {oracle_budget}")

    for quantity in QUANTITIES:
        values = report.variants[quantity]
        names = sorted(values)
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                report.agreements.append(
                    (f"{quantity}.{a}", f"{quantity}.{b}", values[a] == values[b]))
        if report.oracle is not None:
            for a in names:
                report.agreements.append(
                    (f"{quantity}.{a}", f"{quantity}.oracle", values[a] == report.oracle[quantity]))
    # eps = eps1 + eps2 on the reference forms
    report.agreements.append(
        ("eps.divisor_sum", "eps1.divisor_sum+eps2.divisor_sum",
         e["divisor_sum"] == e1["divisor_sum"] + e2["divisor_sum"]))
    return report
