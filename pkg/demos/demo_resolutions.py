#!/usr/bin/env python3
"""Walkthrough: Betti tables of symbolic powers and the Cancellation
Principle.

The recursion builds the resolution of I^(m) one symbolic power at a time;
the closed forms write it down directly. The gin's Hilbert-Burch table
cancels down to the ideal's table without ever touching the extremal
shifts D and U.
"""

from conicgin import (
    catalisano_step,
    base_resolution,
    closed_form_resolution,
    consecutive_cancellation_reachable,
    extremal_shifts,
    hilbert_burch_of_gin,
    hilbert_staircase,
    predicted_extremal_shifts,
    uniform_conic_config,
)

r, m = 5, 4

print(f"recursion for r={r}, one symbolic power at a time:")
table = base_resolution()
for t in range(1, m + 1):
    table = catalisano_step(table, r, t)
    print(f"  I^({t}): f0={table.f0}  f1={table.f1}")

closed = closed_form_resolution(r, m)
print(f"\nclosed form:    f0={closed.f0}  f1={closed.f1}")
print(f"recursion done: f0={table.f0}  f1={table.f1}")
print(f"equal: {table == closed}")

D, U = extremal_shifts(closed)
print(f"\nextremal shifts (D, U) = ({D}, {U}), "
      f"predicted {predicted_extremal_shifts(r, m)}")

stair = hilbert_staircase(uniform_conic_config(r, m))
gin_table = hilbert_burch_of_gin(stair)
print(f"\ngin staircase: alpha={stair.alpha} lambdas={stair.lambdas}")
print(f"gin table:     f0={gin_table.f0}  f1={gin_table.f1}")

moves = consecutive_cancellation_reachable(gin_table, closed)
print(f"cancellations gin -> ideal: {moves}")
print(f"U={U} spared: {U not in moves};  D={D} spared: {D not in moves}")
