"""Minimum locating-dominating codes on paths.

Walks through the LD number of P_n, the single optimal code of P_10, and the
count C(n) of optimal codes computed three independent ways.
"""
from ldcodes.generators import path
from ldcodes.path_counting import a_value, brute_count, c_closed_form, c_of_n
from ldcodes.solver import enumerate_minimum_ld_codes, gamma_ld

print("gamma(P_n) against ceil(2n/5):")
for n in range(1, 16):
    print(f"  n={n:2d}  solver={gamma_ld(path(n))}  formula={-(-2 * n // 5)}")

census = enumerate_minimum_ld_codes(path(10))
print(f"\nP_10 has {census.count} minimum code(s): {census.codes}")

# C(n) swings with n mod 5: multiples of 5 have a unique optimum
print("\n  n   C(n) recurrence  closed form  brute force")
for n in range(5, 21):
    print(f"{n:3d} {c_of_n(n):15d} {c_closed_form(n):12d} {brute_count(n):12d}")

print("\nfar out, only the recurrence and closed form are cheap:")
for n in (100, 101, 102, 103, 104):
    print(f"  C({n}) = {c_of_n(n)} (closed form {c_closed_form(n)})")

print("\nA(n, k), LD*-codes of size k where the last vertex is excused:")
for n in range(1, 11):
    print("  " + " ".join(f"{a_value(n, k):3d}" for k in range(n + 1)))
