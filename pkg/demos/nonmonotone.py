"""prg+ is not monotone: two ordered representations whose images swap order.

Shows the five-position hand-built pair and then the one the random
search finds with its default settings.
"""
from meanpayoff.fixtures import by_label, fig3_pair, g_fig3
from meanpayoff.qdpm import PrgPlusRecord, prg_plus, qdr_lt, validate_qdr
from meanpayoff.qdpm.witness import find_nonmonotone_witness


def show(g, name, r):
    ok = validate_qdr(g, r, deep=True).ok
    sigma = {g.label(v): g.label(u) for v, u in r.sigma.items()}
    print(f"  {name}: mu={by_label(g, r.mu)} sigma={sigma} valid={ok}")


g = g_fig3()
r1, r2 = fig3_pair(g)
rec1, rec2 = PrgPlusRecord(), PrgPlusRecord()
i1, i2 = prg_plus(g, r1, rec1), prg_plus(g, r2, rec2)
print("hand-built pair")
for name, r in (("r1", r1), ("r2", r2), ("prg+(r1)", i1), ("prg+(r2)", i2)):
    show(g, name, r)
print(f"  r1 < r2: {qdr_lt(g, r1, r2)}   prg+(r2) < prg+(r1): {qdr_lt(g, i2, i1)}")
print(f"  forfeits {rec1.forfeits} vs {rec2.forfeits}")

w = find_nonmonotone_witness()
print("searched pair")
for name, r in (("r1", w.r1), ("r2", w.r2), ("prg+(r1)", w.image1), ("prg+(r2)", w.image2)):
    show(w.game, name, r)
