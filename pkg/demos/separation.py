"""Plain lifting versus QDPM on the four-position family.

Lifting needs about 2k updates before c and d settle at k and k+1;
QDPM does it in five no matter how large k is.
"""
import time

from meanpayoff import brim_solve, qdpm_solve
from meanpayoff.fixtures import by_label, g_fig1


print(f"{'k':>7} {'brim lifts':>11} {'sweeps':>7} {'qdpm lifts':>11}  final measure")
for k in (3, 10, 100, 1000, 10000, 100000):
    g = g_fig1(k)
    t = time.perf_counter()
    b, bs = brim_solve(g, schedule="global")
    tb = time.perf_counter() - t
    q, qs = qdpm_solve(g)
    assert b.final_measure == q.final_measure
    print(f"{k:>7} {bs.lift_events:>11} {bs.solver_passes:>7} {qs.lift_events:>11}  "
          f"{by_label(g, q.final_measure)}  ({tb:.3f}s brim)")
