"""Reference (set-based) versions of the QDPM operators.

Each function works on a :class:`QDR` and returns fresh values; nothing is
incremental.  They are quadratic at worst and serve as the executable
definition the engine is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arena import MAX, MIN, Game
from ..measure import INF, stretch
from .qdr import QDR, escape_positions


class EmptyTargets(ValueError):
    def __init__(self, v):
        super().__init__(f"position {v} has no successor in the target set")
        self.pos = v


class NoOutsideMove(ValueError):
    def __init__(self, v):
        super().__init__(f"position {v} has no move leaving the set")
        self.pos = v


class EmptyEscape(ValueError):
    pass


class NotClosed(ValueError):
    def __init__(self, v):
        super().__init__(f"position {v} can still escape")
        self.pos = v


def _diff(x, y):
    # x - y on measures, y finite
    return INF if x == INF else x - y


def _best(g, mu, v, targets):
    """(value, argument) of the owner's best stretch over ``targets``;
    ties go to the earliest successor."""
    best_u, best = None, None
    maximize = g.owner[v] == MAX
    for u in g.succ[v]:
        if u not in targets:
            continue
        x = stretch(mu[u], v, g)
        if best is None or (x > best if maximize else x < best):
            best, best_u = x, u
    return best, best_u


def controlled_lift(g: Game, r: QDR, src, tgt) -> QDR:
    """Lift every position of ``src`` using only moves into ``tgt``.

    All new values are computed from the input measure.  The witness moves
    only where the measure changed.
    """
    tgt = tgt if isinstance(tgt, (set, frozenset)) else set(tgt)
    mu = list(r.mu)
    sigma = dict(r.sigma)
    changed = {}
    for v in src:
        best, u = _best(g, r.mu, v, tgt)
        if u is None:
            raise EmptyTargets(v)
        mu[v] = best
        if best != r.mu[v]:
            changed[v] = u
    for v in range(g.n):
        if g.owner[v] != MAX:
            continue
        if mu[v] > 0:
            if v in changed:
                sigma[v] = changed[v]
        else:
            sigma.pop(v, None)
    return QDR(mu, sigma)


def prg0(g: Game, r: QDR) -> QDR:
    """Lift the zero-measure positions against the whole arena, keeping
    the larger of old and new."""
    zero = [v for v in range(g.n) if r.mu[v] == 0]
    lifted = controlled_lift(g, r, zero, range(g.n))
    assert all(a >= b for a, b in zip(lifted.mu, r.mu))
    return lifted


def npp(g: Game, r: QDR) -> set:
    """Positive positions whose measure is beaten by their successors."""
    mu = r.mu
    out = set()
    for v in range(g.n):
        m = mu[v]
        if m == 0 or m == INF:
            continue
        vals = [stretch(mu[u], v, g) for u in g.succ[v]]
        if g.owner[v] == MAX:
            if any(x > m for x in vals):
                out.add(v)
        elif all(x > m for x in vals):
            out.add(v)
    return out


def pre(g: Game, r: QDR, Q) -> set:
    """One backward step: ``Q`` plus the positions forced into it."""
    mu, sigma = r.mu, r.sigma
    out = set(Q)
    for v in range(g.n):
        if v in Q or mu[v] == 0:
            continue
        if g.owner[v] == MAX:
            if sigma.get(v) in Q:
                out.add(v)
        elif all(stretch(mu[u], v, g) > mu[v] for u in g.succ[v] if u not in Q):
            out.add(v)
    return out


def dmn(g: Game, r: QDR) -> set:
    Q = npp(g, r)
    while True:
        nxt = pre(g, r, Q)
        if nxt == Q:
            return Q
        Q = nxt


def esc(g: Game, r: QDR, Q) -> set:
    return escape_positions(g, r.mu, r.sigma, set(Q))


def bef(g: Game, mu, Q, v):
    """Measure increase ``v`` pays for leaving ``Q`` by its best move."""
    vals = [stretch(mu[u], v, g) for u in g.succ[v] if u not in Q]
    if not vals:
        raise NoOutsideMove(v)
    best = max(vals) if g.owner[v] == MAX else min(vals)
    return _diff(best, mu[v])


def bep(g: Game, r: QDR, Q) -> set:
    E = esc(g, r, Q)
    if not E:
        raise EmptyEscape("no escape positions")
    forfeits = {v: bef(g, r.mu, Q, v) for v in E}
    f = min(forfeits.values())
    return {v for v, x in forfeits.items() if x == f}


def win_close(g: Game, r: QDR, Q, inf_exits: bool = False) -> QDR:
    """Send a closed set to ``INF``, pointing witnesses inside it.

    With ``inf_exits`` the set may still have escapes, provided each of them
    can reach an ``INF`` position outside; MAX escapes are pointed there.
    """
    Q = set(Q)
    E = esc(g, r, Q)
    if E and not inf_exits:
        raise NotClosed(min(E))
    outside = set(range(g.n)) - Q
    for v in E:
        if bef(g, r.mu, Q, v) != INF:
            raise NotClosed(v)
    mu = list(r.mu)
    sigma = dict(r.sigma)
    for v in sorted(Q):
        if g.owner[v] == MAX and sigma.get(v) not in Q:
            best, u = _best(g, r.mu, v, Q)
            if u is None or best <= r.mu[v]:
                u = _best(g, r.mu, v, outside)[1]
            sigma[v] = u
    for v in Q:
        mu[v] = INF
    return QDR(mu, sigma)


@dataclass
class PrgPlusRecord:
    """What one prg+ application did, for tests and demos."""

    region: set = field(default_factory=set)
    forfeits: list = field(default_factory=list)
    batches: list = field(default_factory=list)
    closed: set = field(default_factory=set)


def prg_plus(g: Game, r: QDR, record: PrgPlusRecord = None) -> QDR:
    """Drain the non-progress region through its cheapest escapes; whatever
    cannot escape is won by MAX."""
    Q = dmn(g, r)
    if record is not None:
        record.region = set(Q)
    while True:
        E = esc(g, r, Q)
        if not E:
            break
        forfeits = {v: bef(g, r.mu, Q, v) for v in E}
        f = min(forfeits.values())
        if f == INF:
            # every remaining position ends at INF; close in one step so the
            # witnesses keep to positive cycles
            if record is not None:
                record.forfeits.append(f)
                record.batches.append(set(Q))
                record.closed = set(Q)
            return win_close(g, r, Q, inf_exits=True)
        batch = {v for v, x in forfeits.items() if x == f}
        outside = set(range(g.n)) - Q
        r = controlled_lift(g, r, batch, outside)
        Q -= batch
        if record is not None:
            record.forfeits.append(f)
            record.batches.append(batch)
    if record is not None:
        record.closed = set(Q)
    return win_close(g, r, Q) if Q else r


def solve_reference(g: Game, limit: int = None) -> QDR:
    """Iterate prg+ after prg0 until nothing moves.  Slow but direct."""
    r = QDR([0] * g.n, {})
    steps = 0
    while True:
        nxt = prg_plus(g, prg0(g, r))
        if nxt == r:
            return r
        r = nxt
        steps += 1
        if limit is not None and steps > limit:
            raise RuntimeError("iteration limit reached")
