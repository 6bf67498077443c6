#!/usr/bin/env python3
"""Build initial conditions for any realizable period, then verify them.

Three constructor families cover the whole period set:

  * (p, y, 0, q) with p > q coprime and y in [q, p], period 11(p+q) + 10q;
  * (x, z, y, 0) with x >= y > z > 0, period 11(2p-q) + 10(p-q) after
    reducing by d = gcd(y - z, x);
  * route-driven windows with x1 = (q-p)/p * (x4 - x3), period 10p + 11q,
    whose whole trace through the case graph is predictable.

Every recipe is verified by actually running the orbit.
"""

from fractions import Fraction

from maxper import (
    build_controversial2,
    build_gcd_route,
    build_general_k,
    period_of,
    safe_gcd_route_x2,
    synthesize,
    trace_cycle,
)

print("== synthesize: one window per target period ==")
for n in (1, 8, 11, 43, 54, 131, 1675):
    r = synthesize(n)
    print(f"  period {n:>4}: {r.tag.value:<15} state ({', '.join(map(str, r.state))})"
          f"  verified={r.verified}")
print()

print("== the (x, z, y, 0) family reduces by a gcd before predicting ==")
for x, z, y in [(5, 1, 3), (4, 1, 3), (7, 2, 5)]:
    r = build_controversial2(x, z, y)
    print(f"  ({x},{z},{y},0): d={r.params['d']}, (p,q)=({r.params['p']},{r.params['q']})"
          f" -> period {r.predicted}, verified={r.verified}")
print()

print("== route-driven construction with a tie-free trace ==")
p, q = 3, 10
x4 = Fraction(2)
x2 = safe_gcd_route_x2(p, 0, x4, numerator=2)
r = build_gcd_route(p, q, 0, x4, x2)
t = trace_cycle(r.state)
print(f"  p={p}, q={q}: state ({', '.join(map(str, r.state))})")
print(f"  trace {t.status}: " + " -> ".join(f"{c}/{n}" for c, n in t.blocks))
print(f"  {len(t.routes)} routes (= p), predicted {t.predicted} = 10*{p} + 11*{q},"
      f" detected {period_of(r.state)}")
print()

print("== template windows for any order k ==")
for kind, k in [("two-k-cycle", 6), ("two-cycle-odd-k", 5), ("monotone", 5)]:
    r = build_general_k(kind, k)
    print(f"  {kind:<16} k={k}: ({', '.join(map(str, r.state))}) -> period {r.predicted},"
          f" verified={r.verified}")
