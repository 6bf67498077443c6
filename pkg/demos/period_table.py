#!/usr/bin/env python3
"""Reproduce the period table and the extremal gap of the order-4 set.

The realizable periods are {1, 8, 11} plus every 10a + 11b with a >= 1,
b >= 2a + 1 and gcd(a, b) = 1.  The script prints the members below 100,
the first interesting exclusions, and the largest number that is NOT a
period (1674), together with the per-residue-class maxima.
"""

from maxper import admissible_decompositions, gap_scan, periods_in_range

print("== members of the period set ==")
print("[1, 100]  :", ", ".join(map(str, periods_in_range(1, 100))))
print("[101, 200]:", ", ".join(map(str, periods_in_range(101, 200))))
print()

print("== why 277 is not a period ==")
print("decompositions of 277:", admissible_decompositions(277) or "none")
for a in (9, 20):
    b = (277 - 10 * a) // 11
    print(f"  candidate a={a}, b={b}: b >= 2a+1 fails ({b} < {2 * a + 1})")
print()

print("== the largest non-period ==")
report = gap_scan(4000)
print(f"scan limit            : {report.limit}")
print(f"non-periods found     : {len(report.non_members)}")
print(f"largest non-period    : {report.overall_max}")
print(f"largest multiple of 11: {report.eleven_max}")
print("class maxima          :",
      ", ".join(f"N{m}={report.class_maxima[m]}" for m in range(1, 11)))
print(f"stabilized (nothing above 1674): {report.stabilized}")
print()

print("== everything beyond the gap is a period ==")
tail = periods_in_range(1675, 1700)
print(f"[1675, 1700] members: {len(tail)} of {1700 - 1675 + 1}")
