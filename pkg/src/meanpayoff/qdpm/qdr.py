"""Quasi-dominion representations and their validity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from ..arena import MAX, MIN, Game
from ..measure import INF, add_weight, mf_leq


class SizeLimit(ValueError):
    pass


@dataclass
class QDR:
    """A measure function paired with a MAX witness on its positive support.

    ``sigma`` maps every MAX position of positive measure to one of its
    successors.
    """

    mu: list
    sigma: dict = field(default_factory=dict)

    def support(self) -> set:
        return {v for v, x in enumerate(self.mu) if x > 0}

    def copy(self) -> "QDR":
        return QDR(list(self.mu), dict(self.sigma))

    def __eq__(self, other):
        if not isinstance(other, QDR):
            return NotImplemented
        return list(self.mu) == list(other.mu) and self.sigma == other.sigma


def qdr_init(g: Game) -> QDR:
    return QDR([0] * g.n, {})


def qdr_leq(g: Game, r1: QDR, r2: QDR) -> bool:
    """Order on representations: pointwise measures, and equal witnesses on
    MAX positions whose measure did not move."""
    if not mf_leq(r1.mu, r2.mu):
        return False
    for v, x in enumerate(r1.mu):
        if x > 0 and g.owner[v] == MAX and x == r2.mu[v]:
            if r1.sigma.get(v) != r2.sigma.get(v):
                return False
    return True


def qdr_lt(g: Game, r1: QDR, r2: QDR) -> bool:
    return qdr_leq(g, r1, r2) and r1 != r2


class Violation(NamedTuple):
    condition: str
    position: object
    detail: str = ""


class QdrReport(NamedTuple):
    ok: bool
    violations: list

    def __bool__(self):
        return self.ok


def _restricted_moves(g, Q, sigma):
    """Moves of the play graph inside ``Q`` with MAX fixed by ``sigma``.

    Returns ``(inner, exits)``: ``inner[v]`` lists in-``Q`` targets and
    ``exits`` holds the positions from which a play may leave ``Q``.
    """
    inner = {}
    exits = set()
    for v in Q:
        if g.owner[v] == MAX:
            targets = [sigma[v]]
        else:
            targets = g.succ[v]
        ins = [u for u in targets if u in Q]
        inner[v] = ins
        if len(ins) < len(targets):
            exits.add(v)
    return inner, exits


def check_quasi_dominion(g: Game, Q, sigma, weak: bool = False,
                         limit: int = 5000) -> bool:
    """Exact check that ``Q`` is a (weak) quasi MAX-dominion under ``sigma``.

    With MAX moves fixed by ``sigma`` every cycle inside ``Q`` must have
    positive weight; unless ``weak``, so must every play prefix that
    leaves ``Q``.
    """
    Q = set(Q)
    if len(Q) > limit:
        raise SizeLimit(f"{len(Q)} positions exceed the deep-check bound {limit}")
    if not Q:
        return True
    for v in Q:
        if g.owner[v] == MAX and (v not in sigma or sigma[v] not in g.succ[v]):
            return False
    inner, exits = _restricted_moves(g, Q, sigma)
    k = len(Q) + 1
    # cycle weight W <= 0  iff  k*W - len < 0 for simple cycles
    dist = {v: 0 for v in Q}
    for _ in range(len(Q)):
        changed = False
        for v in Q:
            wv = k * g.weight[v] - 1
            for u in inner[v]:
                if dist[u] + wv < dist[v]:
                    dist[v] = dist[u] + wv
                    changed = True
        if not changed:
            break
    else:
        for v in Q:
            wv = k * g.weight[v] - 1
            if any(dist[u] + wv < dist[v] for u in inner[v]):
                return False
    if weak:
        return True
    # lightest play prefix ending where the play leaves Q
    best = {v: (g.weight[v] if v in exits else INF) for v in Q}
    for _ in range(len(Q)):
        changed = False
        for v in Q:
            for u in inner[v]:
                if best[u] != INF and best[u] + g.weight[v] < best[v]:
                    best[v] = best[u] + g.weight[v]
                    changed = True
        if not changed:
            break
    return all(b == INF or b > 0 for b in best.values())


def escape_positions(g: Game, mu, sigma, Q) -> set:
    out = set()
    for v in Q:
        mv = mu[v]
        if g.owner[v] == MIN:
            if any(u not in Q for u in g.succ[v]):
                out.add(v)
        elif sigma.get(v) not in Q:
            w = g.weight[v]
            if all(add_weight(mu[u], w) <= mv for u in g.succ[v] if u in Q):
                out.add(v)
    return out


def validate_qdr(g: Game, r: QDR, deep: bool = False,
                 limit: int = 5000) -> QdrReport:
    """Check the defining conditions of a quasi-dominion representation.

    Shallow mode checks the local inequalities and the shape of the
    witness.  Deep mode also checks the path bound along witness-compatible
    paths, the escape-measure property, the quasi-dominion property of the
    support and the dominion property of the infinite region.
    """
    mu, sigma = r.mu, r.sigma
    bad = []
    if len(mu) != g.n:
        return QdrReport(False, [Violation("length", None, f"{len(mu)} != {g.n}")])
    Q = set()
    for v, x in enumerate(mu):
        if x != INF and (not isinstance(x, int) or x < 0):
            bad.append(Violation("measure", v, repr(x)))
        elif x > 0:
            Q.add(v)
    for v, u in sigma.items():
        if not (0 <= v < g.n) or g.owner[v] != MAX or v not in Q:
            bad.append(Violation("sigma-domain", v, "witness outside MAX support"))
        elif u not in g.succ[v]:
            bad.append(Violation("sigma-range", v, f"{u} is not a successor"))
    for v in Q:
        w = g.weight[v]
        if g.owner[v] == MAX:
            if v not in sigma:
                bad.append(Violation("sigma-domain", v, "missing witness"))
            elif sigma[v] in g.succ[v] and mu[v] > add_weight(mu[sigma[v]], w):
                bad.append(Violation("1c", v, "measure above witness stretch"))
        else:
            for u in g.succ[v]:
                if mu[v] > add_weight(mu[u], w):
                    bad.append(Violation("1d", v, f"measure above stretch via {u}"))
                    break
    if bad or not deep:
        return QdrReport(not bad, bad)
    if len(Q) > limit:
        raise SizeLimit(f"{len(Q)} positions exceed the deep-check bound {limit}")

    # witness-compatible paths through the support never lose measure
    low = {v: mu[v] for v in range(g.n)}
    for _ in range(g.n + 1):
        changed = False
        for v in Q:
            targets = [sigma[v]] if g.owner[v] == MAX else g.succ[v]
            w = g.weight[v]
            for u in targets:
                if low[u] == INF:
                    continue
                cand = w + low[u]
                if cand < low[v]:
                    low[v] = cand
                    changed = True
        if not changed:
            break
    for v in Q:
        if low[v] < mu[v]:
            bad.append(Violation("path-bound", v, f"path reaches {low[v]} < {mu[v]}"))

    for v in escape_positions(g, mu, sigma, Q):
        if not (mu[v] == g.weight[v] > 0):
            bad.append(Violation("escape-measure", v,
                                 f"measure {mu[v]} vs weight {g.weight[v]}"))

    if not check_quasi_dominion(g, Q, sigma, weak=False, limit=limit):
        bad.append(Violation("1a", None, "support is not a quasi dominion"))

    top = {v for v in Q if mu[v] == INF}
    if top:
        leaks = [v for v in top
                 if (g.owner[v] == MIN and any(u not in top for u in g.succ[v]))
                 or (g.owner[v] == MAX and sigma[v] not in top)]
        if leaks:
            bad.append(Violation("1b", leaks[0], "infinite region is not closed"))
        elif not check_quasi_dominion(g, top, sigma, weak=True, limit=limit):
            bad.append(Violation("1b", None, "non-positive cycle in infinite region"))
    return QdrReport(not bad, bad)
