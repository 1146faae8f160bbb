"""Finite-scale checks of the growth of ``eps1`` and ``eps2``.

Every comparison is done on exact integers: statements involving
fractional powers such as ``n^(3l/4)`` are raised to integer powers first.
The decimal ``ratio`` column is for display only.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from .counting import eps1_divisor_sum, eps2_divisor_sum
from .numtheory import count_primitive, lambda_sets, primes_and_gaps

REGIMES = ("n_to_inf_eps2", "n_to_inf_eps1", "l_to_inf_eps1", "l_to_inf_eps2",
           "eps2_bound", "prime_product")
RATIO_DIGITS = 12


def render_ratio(numerator: int, denominator: int, digits: int = RATIO_DIGITS) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(numerator) / Decimal(denominator))


@dataclass(frozen=True)
class RatioRow:
    parameter: int
    numerator: int
    denominator: int
    ratio: str
    verdict: Optional[bool] = None
    reference: Optional[int] = None

    @property
    def exact(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


@dataclass
class RatioTable:
    regime: str
    rows: list[RatioRow] = field(default_factory=list)
    flagged: bool = False
    note: str = ""

    @property
    def verdicts_present(self) -> bool:
        return any(r.verdict is not None for r in self.rows)

    @property
    def all_pass(self) -> bool:
        return all(r.verdict is not False for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "regime": self.regime,
            "flagged": self.flagged,
            "note": self.note,
            "rows": [
                {"parameter": r.parameter, "numerator": r.numerator,
                 "denominator": r.denominator, "ratio": r.ratio,
                 "verdict": r.verdict, "reference": r.reference}
                for r in self.rows
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["parameter", "numerator", "denominator", "ratio", "verdict"])
        for r in self.rows:
            writer.writerow([r.parameter, r.numerator, r.denominator, r.ratio,
                             "" if r.verdict is None else str(r.verdict).lower()])
        return buf.getvalue()


def _row(param: int, num: int, den: int, **kw) -> RatioRow:
    return RatioRow(param, num, den, render_ratio(num, den), **kw)


def delta(l: int) -> Optional[int]:
    """Smallest divisor ``d >= 4`` of ``l`` with ``3 ∤ d``; ``None`` if there is none."""
    lam = lambda_sets(l).all
    return lam[0] if lam else None


def _require_delta(l: int) -> int:
    d = delta(l)
    if d is None:
        raise ValueError(f"delta({l}) undefined: no divisor d >= 4 with 3 ∤ d")
    return d


def _converging(rows: Sequence[RatioRow]) -> bool:
    gaps = [abs(r.exact - 1) for r in rows]
    return all(b < a for a, b in zip(gaps, gaps[1:]))


def ratio_eps2_n(l: int, n_values: Sequence[int]) -> RatioTable:
    """``eps2(n, l) / n^(3l/δ(l))`` for each ``n``; flagged if the distance
    to 1 does not shrink strictly along ``n_values``."""
    d = _require_delta(l)
    table = RatioTable("n_to_inf_eps2")
    for n in n_values:
        table.rows.append(_row(n, eps2_divisor_sum(n, l), n ** (3 * l // d)))
    table.flagged = not _converging(table.rows)
    return table


def ratio_eps1_n(l: int, n_values: Sequence[int]) -> RatioTable:
    if l % 2:
        raise ValueError(f"l must be even, got {l}")
    table = RatioTable("n_to_inf_eps1")
    for n in n_values:
        table.rows.append(_row(n, eps1_divisor_sum(n, l), n ** (3 * l // 2)))
    table.flagged = not _converging(table.rows)
    return table


def ratio_eps1_l(n: int, l_values: Sequence[int]) -> RatioTable:
    """``eps1(n, l) / n^(3l/2)`` over even ``l``.

    ``verdict`` records ``sum_{even d} pi_n(3l/d) <= l * n^(3l/4)``, checked
    as ``S^4 <= l^4 n^(3l)``.
    """
    odd = [l for l in l_values if l % 2]
    if odd:
        raise ValueError(f"all l must be even, got odd values {odd}")
    table = RatioTable("l_to_inf_eps1")
    for l in l_values:
        excluded = sum(count_primitive(n, 3 * l // d) for d in lambda_sets(l).even)
        ok = excluded**4 <= l**4 * n ** (3 * l)
        table.rows.append(_row(l, eps1_divisor_sum(n, l), n ** (3 * l // 2), verdict=ok))
    return table


def ratio_eps2_l(n: int, l_values: Sequence[int]) -> RatioTable:
    """``eps2(n, l) / n^(3l/δ(l))`` over ``l``; meaningful when δ stays bounded."""
    table = RatioTable("l_to_inf_eps2")
    for l in l_values:
        d = _require_delta(l)
        table.rows.append(_row(l, eps2_divisor_sum(n, l), n ** (3 * l // d)))
    gaps = [abs(r.exact - 1) for r in table.rows]
    table.flagged = bool(gaps) and gaps[-1] != min(gaps)
    deltas = sorted({delta(l) for l in l_values})
    table.note = f"delta values {deltas}"
    return table


def check_eps2_bound(n: int, l_values: Sequence[int]) -> RatioTable:
    """Check ``eps2(n, l) <= 2 n^(3l/4)`` as ``eps2^4 <= 16 n^(3l)``.

    Rows hold the fourth powers: numerator ``eps2^4``, denominator ``16 n^(3l)``.
    """
    if n < 2:
        raise ValueError(f"alphabet size must be at least 2, got {n}")
    table = RatioTable("eps2_bound")
    for l in l_values:
        lhs = eps2_divisor_sum(n, l) ** 4
        rhs = 16 * n ** (3 * l)
        table.rows.append(_row(l, lhs, rhs, verdict=lhs <= rhs))
    return table


def prime_product_polynomial(n: int, k: int) -> int:
    """``n^(3p') + n^(3p) + n - n^p' - n^p - n^3`` for consecutive primes ``p = p_k``, ``p' = p_(k+1)``."""
    p, p_next, _ = primes_and_gaps(k)
    return n ** (3 * p_next) + n ** (3 * p) + n - n**p_next - n**p - n**3


def prime_product_table(n: int, k_values: Sequence[int]) -> RatioTable:
    """For ``l_k = p_k p_(k+1)``: exact ``eps2(n, l_k)`` against the explicit
    polynomial, and its ratio to ``n^(3 l_k/δ(l_k)) (1 + n^(-3 g(k)))``."""
    small = [k for k in k_values if k < 3]
    if small:
        raise ValueError(f"explicit formula needs k >= 3, got {small}")
    table = RatioTable("prime_product")
    for k in k_values:
        p, p_next, gap = primes_and_gaps(k)
        l = p * p_next
        value = eps2_divisor_sum(n, l)
        poly = prime_product_polynomial(n, k)
        top = 3 * l // _require_delta(l)
        # n^top (1 + n^(-3g)) = n^top + n^(top - 3g), an integer since top = 3 p_(k+1)
        denominator = n**top + n ** (top - 3 * gap)
        table.rows.append(_row(k, value, denominator, verdict=value == poly, reference=poly))
    return table
