#!/usr/bin/env python3
"""Walk through one orbit of the order-4 recurrence from every angle.

The window (8, 2, 1, 5) generates a 43-cycle.  This script shows the raw
iteration, the certificate the detector produces, the block structure
that explains *why* the period is 43 = 10*1 + 11*3, and the certificate
re-verification that makes the claim independently checkable.
"""

from maxper import (
    classify,
    detect_period,
    first_violation,
    format_state,
    normalize_to_max,
    orbit_values,
    parse_state,
    trace_cycle,
    verify_certificate,
)

start = parse_state("8,2,1,5")

print("== the first fifteen terms ==")
print(", ".join(str(v) for v in orbit_values(start, 15)))
print()

print("== exact first-return detection ==")
cert = detect_period(start)
print(f"period          : {cert.period}")
print(f"cycle maximum   : {cert.max_value}")
print(f"certificate ok  : {verify_certificate(cert)} "
      f"(first violation: {first_violation(cert)})")
print()

print("== the window is case C4; blocks of 10/11 steps do the rest ==")
print(f"classification  : {classify(start).describe()}")
trace = trace_cycle(start)
print(f"status          : {trace.status}")
print("blocks          : " + " -> ".join(f"{c}/{n}" for c, n in trace.blocks))
print(f"routes          : {[f'R{r.kind}' for r in trace.routes]}")
print(f"tallies         : A={trace.a} (ten-blocks), B={trace.b} (eleven-blocks), "
      f"H={trace.h} loops")
print(f"predicted period: 10*{trace.a} + 11*{trace.b} = {trace.predicted}")
print()

print("== any window of the cycle rotates back to the maximum ==")
later = detect_period(parse_state("2,1,5,-3"))
print(f"window (2,1,5,-3) has the same period {later.period}; "
      f"its max-led window is ({format_state(normalize_to_max(later))})")
