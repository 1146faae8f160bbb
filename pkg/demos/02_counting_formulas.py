"""
Counting pairs four ways
========================

For primitive p, q with |p| = 2|q| = 2l and pq non-primitive, the pairs
split by whether the root of pq is longer (eps1) or shorter (eps2) than q.
Each count has several algebraic forms; this script puts them side by side.
"""

from primword.counting import consistency_report, eps1_combinatorial_corrected

report = consistency_report(2, 4)
print("n=2, l=4, with the brute-force scan")
for quantity, values in report.variants.items():
    print(f"  {quantity}: {values}")
print("  oracle:", report.oracle)
print("  disagreements:", report.disagreements())

# at l = 12 the signed subset form of eps1 overshoots by n^9 - n^3
report = consistency_report(2, 12, oracle_budget=None)
e1 = report.variants["eps1"]
print()
print("n=2, l=12")
print("  divisor sum   ", e1["divisor_sum"])
print("  closed form   ", e1["closed_form"])
print("  combinatorial ", e1["combinatorial"], " (gap", e1["combinatorial"] - e1["divisor_sum"], ")")
print("  corrected     ", eps1_combinatorial_corrected(2, 12))
