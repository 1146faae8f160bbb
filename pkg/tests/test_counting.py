import json

import pytest
import sympy

from oracles import naive_pair_counts
from primword.counting import (
    NotEvaluableError,
    consistency_report,
    eps1,
    eps1_closed,
    eps1_combinatorial,
    eps1_combinatorial_corrected,
    eps1_divisor_sum,
    eps2_closed,
    eps2_combinatorial,
    eps2_divisor_sum,
    eps_closed,
    eps_total,
    example_forms,
)
from primword.numtheory import split_three_two

x = sympy.symbols("x")


def pi_poly(l):
    """pi_x(l) as a polynomial in the alphabet size, built with sympy."""
    return sum(sympy.mobius(d) * x ** (l // d) for d in sympy.divisors(l))


# values frozen from the brute-force scan in tests/oracles.py
ORACLE = {(2, 1): (0, 0), (2, 2): (4, 0), (2, 3): (0, 0), (2, 4): (42, 6), (2, 5): (0, 6),
          (3, 1): (0, 0), (3, 2): (18, 0), (3, 3): (0, 0)}


@pytest.mark.parametrize("n, l", sorted(ORACLE))
def test_divisor_sums_match_frozen_oracle(n, l):
    assert (eps1(n, l), eps2_divisor_sum(n, l)) == ORACLE[(n, l)]


@pytest.mark.parametrize("n, l", [(2, 2), (2, 4), (3, 2)])
def test_frozen_oracle_is_reproducible(n, l):
    assert naive_pair_counts(n, l) == ORACLE[(n, l)]


@pytest.mark.parametrize("n, l, expected", [(2, 4, 6), (2, 9, 0), (2, 5, 6), (2, 10, 60), (2, 20, 36810)])
def test_eps2_divisor_sum(n, l, expected):
    assert eps2_divisor_sum(n, l) == expected


@pytest.mark.parametrize("n, l, expected", [(2, 2, 4), (2, 4, 42), (2, 6, 432), (2, 8, 3780), (2, 12, 256776), (3, 6, 18792)])
def test_eps1_divisor_sum(n, l, expected):
    assert eps1_divisor_sum(n, l) == expected


def test_eps1_rejects_odd_l():
    with pytest.raises(NotEvaluableError, match="only defined for even l"):
        eps1_divisor_sum(2, 5)
    assert eps1(2, 5) == 0


@pytest.mark.parametrize("n, l, expected", [(2, 1, 0), (2, 2, 4), (2, 4, 48), (2, 3, 0)])
def test_eps_total(n, l, expected):
    assert eps_total(n, l) == expected


def test_eps_total_is_sum_of_parts():
    for n in (2, 3, 4):
        for l in range(1, 41):
            assert eps_total(n, l) == eps1(n, l) + eps2_divisor_sum(n, l)
            assert 0 <= eps_total(n, l) <= n ** (3 * l)


@pytest.mark.parametrize("n, l, expected", [(2, 4, 6), (2, 5, 6), (2, 10, 60)])
def test_eps2_closed(n, l, expected):
    assert eps2_closed(n, l) == expected


def test_eps2_closed_rejects_powers_of_three():
    for l in (1, 3, 9, 27):
        with pytest.raises(NotEvaluableError):
            eps2_closed(2, l)
        assert eps2_divisor_sum(2, l) == 0


@pytest.mark.parametrize("n, l, expected", [(2, 2, 4), (2, 4, 42), (2, 12, 256776)])
def test_eps1_closed(n, l, expected):
    assert eps1_closed(n, l) == expected


@pytest.mark.parametrize("n, l, expected", [(2, 8, 60), (2, 20, 36810), (2, 5, 6)])
def test_eps2_combinatorial(n, l, expected):
    assert eps2_combinatorial(n, l) == expected


def test_eps2_combinatorial_polynomials():
    # compare coefficientwise against the divisor-sum polynomial
    for l in (4, 5, 8, 10, 20, 28, 35, 70):
        divisor_sum = sum(pi_poly(3 * l // d) for d in sympy.divisors(l) if d >= 4 and d % 3)
        values = [eps2_combinatorial(n, l) for n in range(2, 6)]
        assert values == [divisor_sum.subs(x, n) for n in range(2, 6)]


def test_eps2_forms_agree():
    for n in (2, 3):
        for l in range(1, 25):
            ref = eps2_divisor_sum(n, l)
            assert eps2_combinatorial(n, l) == ref
            if l // 3 ** split_three_two(l).m >= 2:
                assert eps2_closed(n, l) == ref


def test_eps1_forms_agree():
    for n in (2, 3):
        for l in range(2, 25, 2):
            assert eps1_closed(n, l) == eps1_divisor_sum(n, l)
            assert eps_closed(n, l) == eps_total(n, l)


@pytest.mark.parametrize("n, l, expected", [(2, 2, 4), (2, 6, 432), (2, 18, 2**27 - 2**18 - 2**15 + 2**12)])
def test_eps1_combinatorial_where_it_holds(n, l, expected):
    assert eps1_combinatorial(n, l) == expected == eps1_divisor_sum(n, l)


def test_eps1_combinatorial_misses_the_even_divisor_terms():
    # for l = 3^m 2^s with s >= 2 the unrepaired form overshoots by
    # sum over even admissible d of pi_n(3l/d) = n^(3l/4) - n^(l/4)
    for n in (2, 3, 5):
        for l in (4, 8, 12, 16, 24, 36, 48):
            gap = eps1_combinatorial(n, l) - eps1_divisor_sum(n, l)
            even = [d for d in sympy.divisors(l) if d >= 4 and d % 3 and d % 2 == 0]
            assert gap == sum(pi_poly(3 * l // d).subs(x, n) for d in even)
            assert gap == n ** (3 * l // 4) - n ** (l // 4)


def test_eps1_combinatorial_desk_value_at_twelve():
    poly = x**18 - x**12 - x**10 + x**8
    assert eps1_combinatorial(2, 12) == poly.subs(x, 2)
    assert eps1_divisor_sum(2, 12) == (poly - x**9 + x**3).subs(x, 2)


def test_eps1_combinatorial_non_integral_exponent():
    for l in (10, 14, 20, 22):
        with pytest.raises(NotEvaluableError, match="non-integral exponent"):
            eps1_combinatorial(2, l)


def test_eps1_combinatorial_holds_only_for_twice_powers_of_three():
    agree = []
    for l in range(2, 61, 2):
        try:
            if eps1_combinatorial(2, l) == eps1_divisor_sum(2, l):
                agree.append(l)
        except NotEvaluableError:
            pass
    assert agree == [2, 6, 18, 54]


def test_eps1_combinatorial_corrected_agrees_everywhere():
    for n in (2, 3, 4):
        for l in range(2, 61, 2):
            assert eps1_combinatorial_corrected(n, l) == eps1_divisor_sum(n, l)


def test_example_forms():
    six = example_forms(2, 6)
    assert six.shape == "3^m*2^s" and six.eps1 == 2**9 + 2**4 - 2**6 - 2**5 == 432 and six.eps2 == 0
    five = example_forms(2, 5)
    assert five.shape == "3^m*p^s" and (five.eps1, five.eps2) == (0, 6)
    four = example_forms(2, 4)
    assert four.eps1 is None and not four.eps1_evaluable and four.eps2 == 6
    assert "8/3" in four.note
    assert example_forms(2, 9) is None
    assert example_forms(2, 35) is None


def test_example_eps2_forms_match_divisor_sum():
    for n in (2, 3):
        for l in (2, 4, 6, 8, 12, 16, 18, 24, 5, 7, 15, 25, 45, 49):
            ex = example_forms(n, l)
            assert ex is not None
            assert ex.eps2 == eps2_divisor_sum(n, l)


def test_report_small_case_full_agreement():
    report = consistency_report(2, 3, oracle_budget=10**7)
    assert report.oracle == {"eps1": 0, "eps2": 0, "eps": 0}
    assert report.variants["eps1"] == {"divisor_sum": 0}
    assert report.variants["eps2"]["divisor_sum"] == 0
    assert report.all_agree
    assert any("odd" in note for note in report.notes)


def test_report_records_combinatorial_disagreement_at_four():
    report = consistency_report(2, 4, oracle_budget=10**7)
    assert report.oracle == {"eps1": 42, "eps2": 6, "eps": 48}
    assert report.variants["eps1"]["divisor_sum"] == report.variants["eps1"]["closed_form"] == 42
    assert set(report.variants["eps2"].values()) == {6}
    assert report.verdict("eps1.divisor_sum", "eps1.oracle") is True
    assert report.verdict("eps1.combinatorial", "eps1.oracle") is False
    assert report.verdict("eps2.closed_form", "eps2.oracle") is True


def test_report_at_twelve_without_oracle():
    report = consistency_report(2, 12, oracle_budget=None)
    assert report.oracle is None
    assert report.verdict("eps1.combinatorial", "eps1.divisor_sum") is False
    assert report.verdict("eps1.closed_form", "eps1.divisor_sum") is True
    assert report.verdict("eps2.combinatorial", "eps2.divisor_sum") is True


def test_report_notes_skipped_oracle():
    report = consistency_report(2, 12, oracle_budget=10**7)
    assert report.oracle is None
    assert any("oracle skipped" in note for note in report.notes)


def test_report_serialization():
    report = consistency_report(2, 4)
    data = json.loads(report.to_json())
    assert set(data) == {"n", "l", "variants", "oracle", "agreements", "notes"}
    assert data["variants"]["eps2"]["divisor_sum"] == 6
    assert {"a", "b", "equal"} == set(data["agreements"][0])
    rows = report.csv_rows()
    assert {"n": 2, "l": 4, "quantity": "eps1", "variant": "oracle", "value": 42} in rows
    assert report.to_json() == consistency_report(2, 4).to_json()
