"""The full consistency grid, as run by ``primword verify``."""

from __future__ import annotations

import random
from typing import Callable, NamedTuple, Optional

from . import counting, numtheory, pairs, properties
from .asymptotics import check_eps2_bound, prime_product_table
from .words import Word, all_words, is_primitive

ORACLE_GRID = [(2, l) for l in range(1, 6)] + [(3, l) for l in range(1, 4)]
EXPECTED = {(2, 1): (0, 0), (2, 2): (4, 0), (2, 3): (0, 0), (2, 4): (42, 6), (2, 5): (0, 6)}


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def oracle_equivalence() -> CheckResult:
    bad = []
    for n, l in ORACLE_GRID:
        e1, e2 = pairs.oracle_enumerate_E(n, l)
        got = (len(e1), len(e2))
        want = (counting.eps1(n, l), counting.eps2_divisor_sum(n, l))
        if got != want or EXPECTED.get((n, l), got) != got:
            bad.append(f"(n={n}, l={l}): oracle {got}, formulas {want}")
    return CheckResult("oracle equivalence", not bad, "; ".join(bad) or f"{len(ORACLE_GRID)} grid points")


def bijection_fidelity() -> CheckResult:
    bad = []
    for n, l in ORACLE_GRID:
        e1, e2 = pairs.oracle_enumerate_E(n, l)
        c2 = pairs.construct_e2(n, l)
        c1 = pairs.construct_e1(n, l, check_phi=True) if l % 2 == 0 else []
        for label, built, oracle, cases in (("E1", c1, e1, {"I"}), ("E2", c2, e2, {"II", "III"})):
            keys = [(w.p, w.q) for w in built]
            if len(set(keys)) != len(keys):
                bad.append(f"{label}(n={n}, l={l}) has duplicates")
            if sorted(keys) != oracle:
                bad.append(f"{label}(n={n}, l={l}) differs from oracle")
            for w in built:
                if w.case not in cases or pairs.classify_pair(w.p, w.q).case != w.case:
                    bad.append(f"{label}(n={n}, l={l}) witness {w.p},{w.q} misclassified")
                    break
    return CheckResult("bijection fidelity", not bad, "; ".join(bad) or "sets equal, no duplicates")


def formula_agreement(max_l: int = 24) -> CheckResult:
    bad = []
    for n in (2, 3):
        for l in range(1, max_l + 1):
            if l // 3 ** numtheory.split_three_two(l).m >= 2:
                ref = counting.eps2_divisor_sum(n, l)
                if not ref == counting.eps2_closed(n, l) == counting.eps2_combinatorial(n, l):
                    bad.append(f"eps2(n={n}, l={l})")
            if l % 2 == 0 and counting.eps1_divisor_sum(n, l) != counting.eps1_closed(n, l):
                bad.append(f"eps1(n={n}, l={l})")
    return CheckResult("formula cross-agreement", not bad, ", ".join(bad) or f"n in (2, 3), l <= {max_l}")


def combinatorial_eps1_verdict() -> CheckResult:
    report = counting.consistency_report(2, 12, oracle_budget=None)
    verdict = report.verdict("eps1.combinatorial", "eps1.divisor_sum")
    if verdict is None:
        return CheckResult("eps1 combinatorial adjudication", False, "no verdict recorded")
    diff = report.variants["eps1"]["combinatorial"] - report.variants["eps1"]["divisor_sum"]
    return CheckResult("eps1 combinatorial adjudication", True,
                       f"{'agree' if verdict else 'disagree'} at (2, 12); combinatorial - divisor_sum = {diff}")


def primitive_counts() -> CheckResult:
    bad = []
    for n, top in ((2, 12), (3, 8)):
        for l in range(1, top + 1):
            brute = sum(1 for w in all_words(n, l) if is_primitive(w))
            if brute != numtheory.count_primitive(n, l):
                bad.append(f"pi_{n}({l})")
    for n in range(2, 6):
        for l in range(1, 31):
            if sum(numtheory.count_primitive(n, d) for d in numtheory.divisors(l)) != n**l:
                bad.append(f"divisor sum n={n}, l={l}")
    return CheckResult("primitive counts", not bad, ", ".join(bad) or "enumeration and inversion agree")


def asymptotic_checks() -> CheckResult:
    bad = []
    for n in range(2, 101):
        if counting.eps2_divisor_sum(n, 4) != n**3 - n:
            bad.append(f"eps2({n}, 4)")
    for n in (2, 3, 5):
        if not check_eps2_bound(n, range(1, 41)).all_pass:
            bad.append(f"bound n={n}")
    for n in (2, 3):
        if not prime_product_table(n, [3, 4, 5]).all_pass:
            bad.append(f"prime product n={n}")
    return CheckResult("finite-scale growth checks", not bad, ", ".join(bad) or "exact")


def lemma_suites() -> CheckResult:
    results = properties.run_suite()
    bad = [f"{name}: {len(cex)} counterexamples" for name, cex in results.items() if cex]
    return CheckResult("lemma property suites", not bad, "; ".join(bad) or f"{len(results)} suites clean")


def random_classification(seed: int, samples: int = 200) -> CheckResult:
    """Classify the constructed witnesses for random ``(n, l)`` beyond the oracle grid."""
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        n, l = rng.choice([(2, 8), (2, 10), (3, 4), (2, 20), (4, 4)])
        d = rng.choice(numtheory.lambda_sets(l).all)
        size = 3 * l // d
        while True:
            u = Word(tuple(rng.randrange(n) for _ in range(size)), n)
            if is_primitive(u):
                break
        w = pairs.pair_from_root(u.letters, d, l, n)
        if pairs.classify_pair(w.p, w.q) != w:
            bad.append(f"{w.p},{w.q}")
    return CheckResult(f"random classification (seed={seed})", not bad, ", ".join(bad[:3]) or f"{samples} samples")


CRITERIA: list[Callable[[], CheckResult]] = [
    oracle_equivalence,
    bijection_fidelity,
    formula_agreement,
    combinatorial_eps1_verdict,
    primitive_counts,
    asymptotic_checks,
    lemma_suites,
]


def run_all(seed: Optional[int] = 0) -> list[CheckResult]:
    results = [check() for check in CRITERIA]
    if seed is not None:
        results.append(random_classification(seed))
    return results
