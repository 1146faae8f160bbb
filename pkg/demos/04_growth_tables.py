"""
Growth of the counts
====================

Exact ratio tables. Decimal columns are display only; verdicts come from
integer comparisons.
"""

from primword.asymptotics import check_eps2_bound, prime_product_table, ratio_eps1_l, ratio_eps2_n

print("eps2(n, 4) / n^3  (exactly 1 - 1/n^2)")
for row in ratio_eps2_n(4, [2, 5, 10, 100]).rows:
    print(f"  n={row.parameter:<4} {row.ratio}")

print()
print("eps1(2, l) / 2^(3l/2)")
for row in ratio_eps1_l(2, range(2, 31, 4)).rows:
    print(f"  l={row.parameter:<3} {row.ratio}")

print()
print("eps2 <= 2 n^(3l/4) for l <= 40:",
      all(check_eps2_bound(n, range(1, 41)).all_pass for n in (2, 3, 5)))

print()
print("l = product of consecutive primes")
print(prime_product_table(2, [3, 4, 5]).to_csv())
