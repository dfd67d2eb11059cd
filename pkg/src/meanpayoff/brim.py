"""Classic progress-measure solver (the BRIM baseline).

Starting from the all-zero measure, positions are lifted to the max (MAX)
or min (MIN) stretch of their successors until nothing moves.  Any finite
value above ``S``, the sum of the positive weights, is replaced by ``INF``.

Two schedules are available:

``"worklist"`` (default)
    FIFO worklist seeded with every position.  MIN positions keep a counter
    of successors that already satisfy their progress inequality and are
    re-queued only when it drops to zero.  A *pass* is one generation of the
    queue.

``"global"``
    Simultaneous application of the lift operator to the whole measure
    function (Jacobi style).  A pass is one application that changed
    something.  This is the accounting used for worked examples that count
    operator iterations.
"""

from __future__ import annotations

import time
from typing import Callable, NamedTuple, Optional

from .arena import MAX, MIN, Game, build_game
from .measure import INF, stretch
from .qdpm.engine import qdpm_solve
from .results import Deadline, Solution, UpdateStats


class LiftEvent(NamedTuple):
    position: int
    old: object
    new: object
    pass_index: int


def brim_lift_at(g: Game, mu, v: int, S: Optional[int] = None):
    """One application of the lift operator at ``v`` (with the S cap)."""
    if S is None:
        S = g.S
    vals = [stretch(mu[u], v, g) for u in g.succ[v]]
    best = max(vals) if g.owner[v] == MAX else min(vals)
    if best != INF and best > S:
        return INF
    return best


def brim_lift(g: Game, mu) -> list:
    """The global lift operator applied to every position."""
    S = g.S
    return [brim_lift_at(g, mu, v, S) for v in g.positions()]


def _run_worklist(g, emit, deadline, stats):
    owner, weight, succ, pred = g.owner, g.weight, g.succ, g.pred
    n, S = g.n, g.S
    mu = [0] * n
    # MIN counters: successors u with stretch(mu[u], v) <= mu[v]
    cnt = [0] * n
    for v in range(n):
        if owner[v] == MIN:
            cnt[v] = len(succ[v]) if weight[v] <= 0 else 0
    queue = list(range(n))
    queued = [True] * n
    passes = 0
    events = 0
    while queue:
        passes += 1
        nxt = []
        for v in queue:
            queued[v] = False
            old = mu[v]
            if old == INF:
                continue
            deadline.check()
            w = weight[v]
            if owner[v] == MAX:
                best = 0
                for u in succ[v]:
                    x = mu[u]
                    if x == INF:
                        best = INF
                        break
                    x += w
                    if x > best:
                        best = x
            else:
                best = INF
                for u in succ[v]:
                    x = mu[u]
                    if x == INF:
                        continue
                    x += w
                    if x < best:
                        best = x
                        if best <= 0:
                            best = 0
                            break
            if best != INF and best > S:
                best = INF
            if best <= old:
                continue
            mu[v] = best
            events += 1
            if emit is not None:
                emit(LiftEvent(v, old, best, passes))
            again = False
            if owner[v] == MIN:
                if best == INF:
                    cnt[v] = len(succ[v])
                else:
                    k = 0
                    for u in succ[v]:
                        x = mu[u]
                        if x != INF and x + w <= best:
                            k += 1
                    cnt[v] = k
                    again = k == 0
            elif best != INF and w > 0 and v in succ[v]:
                again = True  # positive self-loop
            if again and not queued[v]:
                queued[v] = True
                nxt.append(v)
            for p in pred[v]:
                if p == v:
                    continue
                mp = mu[p]
                if mp == INF:
                    continue
                wp = weight[p]
                s_new = INF if best == INF else best + wp
                if s_new <= mp:
                    continue
                if owner[p] == MAX:
                    if not queued[p]:
                        queued[p] = True
                        nxt.append(p)
                else:
                    s_old = old + wp
                    if s_old <= mp:
                        cnt[p] -= 1
                        if cnt[p] == 0 and not queued[p]:
                            queued[p] = True
                            nxt.append(p)
        queue = nxt
    stats.lift_events = events
    stats.solver_passes = passes
    return mu


def _run_global(g, emit, deadline, stats):
    n, S = g.n, g.S
    pred = g.pred
    mu = [0] * n
    cand = range(n)
    passes = 0
    events = 0
    while True:
        updates = []
        for v in cand:
            if mu[v] == INF:
                continue
            deadline.check()
            new = brim_lift_at(g, mu, v, S)
            if new > mu[v]:
                updates.append((v, new))
        if not updates:
            break
        passes += 1
        touched = set()
        for v, new in updates:
            if emit is not None:
                emit(LiftEvent(v, mu[v], new, passes))
            mu[v] = new
            touched.update(pred[v])
        events += len(updates)
        cand = sorted(touched)
    stats.lift_events = events
    stats.solver_passes = passes
    return mu


def brim_solve(g: Game, schedule: str = "worklist",
               trace: Optional[Callable] = None, timeout=None):
    """Least fixpoint of the lift operator above the zero measure.

    Returns ``(Solution, UpdateStats)``.  ``trace`` receives one
    :class:`LiftEvent` per strict measure change.
    """
    stats = UpdateStats(algorithm="brim")
    deadline = timeout if isinstance(timeout, Deadline) else Deadline(timeout)
    t0 = time.perf_counter_ns()
    if schedule == "worklist":
        mu = _run_worklist(g, trace, deadline, stats)
    elif schedule == "global":
        mu = _run_global(g, trace, deadline, stats)
    else:
        raise ValueError(f"unknown schedule {schedule!r}")
    stats.time_ns = time.perf_counter_ns() - t0
    sol = Solution.from_measure(mu)
    sol.witness_max = _max_witness(g, mu)
    return sol, stats


def brim_solve_traced(g: Game, sink, schedule: str = "worklist", timeout=None):
    """Same as :func:`brim_solve`; ``sink`` is a list or a callable."""
    emit = sink.append if isinstance(sink, list) else sink
    return brim_solve(g, schedule=schedule, trace=emit, timeout=timeout)


def _max_witness(g, mu):
    """MAX strategy on the infinite region.

    The capped measure does not pin one down: picking any successor of
    infinite measure can close a non-positive cycle.  The region is a trap
    for MIN, so the quasi-dominion engine is run on the subgame it induces
    and its witness is kept.
    """
    region = [v for v in g.positions() if mu[v] == INF]
    if not region:
        return {}
    local = {v: i for i, v in enumerate(region)}
    raw = [(i, g.weight[v], g.owner[v], [local[u] for u in g.succ[v] if u in local])
           for i, v in enumerate(region)]
    sol, _ = qdpm_solve(build_game(raw))
    if len(sol.win_max) != len(region):
        raise AssertionError("infinite region is not won by MAX in its subgame")
    return {region[i]: region[j] for i, j in sol.witness_max.items()}
