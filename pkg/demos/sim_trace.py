"""Replay both solvers on the seven-position family and print every update.

BRIM walks c, d, f, g upwards one small step per sweep until the cap;
QDPM notices that {c, d, g} can never be left by MIN and closes it at once.
"""
import sys

from meanpayoff.brim import brim_solve
from meanpayoff.fixtures import by_label, g_sim
from meanpayoff.qdpm import qdpm_solve

k = int(sys.argv[1]) if len(sys.argv) > 1 else 5
g = g_sim(k)

print(f"-- BRIM, global sweeps, k={k}")
events = []
sol, st = brim_solve(g, schedule="global", trace=events.append)
mu = [0] * g.n
sweep = 0
for e in events:
    if e.pass_index != sweep:
        if sweep:
            print(f"  after sweep {sweep}: {by_label(g, mu)}")
        sweep = e.pass_index
    mu[e.position] = e.new
print(f"  after sweep {sweep}: {by_label(g, mu)}")
print(f"  {st.lift_events} updates (5k+9 = {5 * k + 9})")

print("-- QDPM")
events = []
sol, st = qdpm_solve(g, trace=events.append, debug=True)
for e in events:
    print(f"  it {e.iteration} {e.phase:<4} {g.label(e.position)}: {e.old} -> {e.new}")
print(f"  {st.lift_events} updates; MAX wins {sorted(g.label(v) for v in sol.win_max)}")
