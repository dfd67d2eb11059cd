"""Incremental QDPM solver.

The engine keeps, next to the measure ``mu`` and the MAX witness ``sigma``:

* ``c[v]`` for MIN positions: successors whose stretch does not exceed
  ``mu[v]``.  A MIN position needs lifting when it drops to zero.
* ``n0`` / ``nplus``: zero-measure positions due for the next prg0, and
  the current non-progress positions.
* during prg+, a scratch copy ``d`` of ``c`` to grow the region, a counter
  ``gc[v]`` for MAX positions (in-region successors strictly above
  ``mu[v]``) and a heap of escape positions keyed by their forfeit.

Only moves incident to lifted positions are visited after the initial
setup.
"""

from __future__ import annotations

import heapq
import time
from typing import Callable, NamedTuple, Optional

from ..arena import MAX, MIN, Game
from ..measure import INF
from ..results import Deadline, Solution, UpdateStats
from .qdr import QDR, validate_qdr


class QdpmEvent(NamedTuple):
    position: int
    old: object
    new: object
    iteration: int
    phase: str  # "prg0", "prg+" or "win"


class InvariantError(AssertionError):
    pass


def _add(x, w):
    # stretch without the game lookup
    if x == INF:
        return INF
    x += w
    return x if x > 0 else 0


class QdpmState:
    """Mutable solver state.  ``prg0`` and ``prg_plus`` each apply one phase."""

    def __init__(self, g: Game, qdr: QDR = None, trace: Callable = None,
                 debug: bool = False, deep: bool = False, deadline=None):
        self.g = g
        n = g.n
        self.trace = trace
        self.debug = debug
        self.deep = deep
        self.deadline = deadline or Deadline()
        self.stats = UpdateStats(algorithm="qdpm")
        self.iteration = 0
        self.forfeit_log = []  # one list per prg+ run (debug only)
        if qdr is None:
            self.mu = [0] * n
            self.sigma = [-1] * n
        else:
            self.mu = list(qdr.mu)
            self.sigma = [-1] * n
            for v, u in qdr.sigma.items():
                self.sigma[v] = u
        self.c = [0] * n
        self.n0 = set()
        self.nplus = set()
        for v in range(n):
            self._refresh(v)
        self._in_region = bytearray(n)

    # -- bookkeeping ---------------------------------------------------

    def _refresh(self, v):
        """Recompute the counter and pending status of ``v`` from scratch."""
        mu, g = self.mu, self.g
        m = mu[v]
        self.n0.discard(v)
        self.nplus.discard(v)
        if m == INF:
            return
        w = g.weight[v]
        if g.owner[v] == MIN:
            k = 0
            for u in g.succ[v]:
                if _add(mu[u], w) <= m:
                    k += 1
            self.c[v] = k
            pending = k == 0
        else:
            pending = False
            for u in g.succ[v]:
                if _add(mu[u], w) > m:
                    pending = True
                    break
        if pending:
            (self.n0 if m == 0 else self.nplus).add(v)

    def _notify(self, p, old_u, new_u):
        """Predecessor ``p`` (outside the region) sees a successor rise."""
        mp = self.mu[p]
        if mp == INF:
            return
        w = self.g.weight[p]
        if _add(new_u, w) <= mp:
            return
        if self.g.owner[p] == MAX:
            (self.n0 if mp == 0 else self.nplus).add(p)
        elif _add(old_u, w) <= mp:
            self.c[p] -= 1
            if self.c[p] == 0:
                (self.n0 if mp == 0 else self.nplus).add(p)

    def _emit(self, v, old, new, phase):
        self.stats.lift_events += 1
        if self.trace is not None:
            self.trace(QdpmEvent(v, old, new, self.iteration, phase))

    @property
    def qdr(self) -> QDR:
        sigma = {v: u for v, u in enumerate(self.sigma)
                 if u >= 0 and self.mu[v] > 0 and self.g.owner[v] == MAX}
        return QDR(list(self.mu), sigma)

    def pending(self) -> bool:
        return bool(self.n0 or self.nplus)

    # -- phases ----------------------------------------------------------

    def prg0(self) -> bool:
        """Lift the pending zero-measure positions against all successors."""
        g, mu = self.g, self.mu
        todo = sorted(self.n0)
        self.n0 = set()
        if not todo:
            return False
        new = []
        for v in todo:
            self.deadline.check()
            w = g.weight[v]
            best_u = -1
            if g.owner[v] == MAX:
                best = -1
                for u in g.succ[v]:
                    x = _add(mu[u], w)
                    if x > best:
                        best, best_u = x, u
            else:
                best = INF
                for u in g.succ[v]:
                    x = _add(mu[u], w)
                    if x < best:
                        best = x
            new.append((best, best_u))
        changed = []
        for v, (x, u) in zip(todo, new):
            if x > mu[v]:
                changed.append((v, mu[v], x))
                if u >= 0:
                    self.sigma[v] = u
        for v, old, x in changed:
            mu[v] = x
            self._emit(v, old, x, "prg0")
        done = {v for v, _, _ in changed}
        for v in done:
            self._refresh(v)
        for v, old, x in changed:
            for p in g.pred[v]:
                if p not in done:
                    self._notify(p, old, x)
        return bool(changed)

    def _argbest(self, v, region):
        """Earliest MAX-best successor of ``v``, skipping ``region`` members."""
        g, mu = self.g, self.mu
        w = g.weight[v]
        best, best_u = -1, -1
        for u in g.succ[v]:
            if region is not None and region[u]:
                continue
            x = _add(mu[u], w)
            if x > best:
                best, best_u = x, u
        return best_u

    def region(self, seeds) -> set:
        """Grow the non-progress seeds by the positions forced into them."""
        g, mu, sigma = self.g, self.mu, self.sigma
        D = set(seeds)
        stack = list(D)
        d = {}
        while stack:
            u = stack.pop()
            mu_u = mu[u]
            for p in g.pred[u]:
                if p in D:
                    continue
                mp = mu[p]
                if mp == 0:
                    continue
                if g.owner[p] == MAX:
                    if sigma[p] == u:
                        D.add(p)
                        stack.append(p)
                elif _add(mu_u, g.weight[p]) <= mp:
                    k = d.get(p, self.c[p]) - 1
                    d[p] = k
                    if k == 0:
                        D.add(p)
                        stack.append(p)
        return D

    def prg_plus(self) -> bool:
        g, mu, sigma = self.g, self.mu, self.sigma
        owner, weight, succ, pred = g.owner, g.weight, g.succ, g.pred
        seeds = self.nplus
        self.nplus = set()
        if not seeds:
            return False
        D = self.region(seeds)
        inq = self._in_region
        for v in D:
            inq[v] = 1
        before = {v: mu[v] for v in D} if self.debug else None

        gc = {}
        key = {}
        heap = []
        for v in D:
            m = mu[v]
            w = weight[v]
            if owner[v] == MIN:
                k = INF
                outside = False
                for u in succ[v]:
                    if not inq[u]:
                        outside = True
                        x = _add(mu[u], w)
                        if x < k:
                            k = x
                if outside:
                    key[v] = k if k == INF else k - m
            else:
                cnt = 0
                for u in succ[v]:
                    if inq[u] and _add(mu[u], w) > m:
                        cnt += 1
                gc[v] = cnt
                if cnt == 0 and not inq[sigma[v]]:
                    key[v] = self._max_outside(v, inq)
        for v, k in key.items():
            heap.append((k, v))
        heapq.heapify(heap)

        forfeits = []
        while heap:
            f, v = heapq.heappop(heap)
            if key.get(v) != f:
                continue
            batch = [v]
            del key[v]
            while heap and heap[0][0] == f:
                _, u = heapq.heappop(heap)
                if key.get(u) == f:
                    del key[u]
                    batch.append(u)
            forfeits.append(f)
            if f == INF:
                break  # everything left goes to INF, see _win
            batch.sort()
            self.deadline.check()
            # new witnesses are chosen before anything leaves the region
            lifted = []
            for v in batch:
                old = mu[v]
                new = INF if f == INF else old + f
                if owner[v] == MAX and new != old:
                    sigma[v] = self._argbest(v, inq)
                lifted.append((v, old, new))
            for v, _, _ in lifted:
                inq[v] = 0
            for v, old, new in lifted:
                if new != old:
                    mu[v] = new
                    self._emit(v, old, new, "prg+")
            for v, _, _ in lifted:
                self._refresh(v)
            in_batch = set(batch)
            for u, old_u, new_u in lifted:
                if new_u == old_u:
                    continue
                for p in pred[u]:
                    if p in in_batch:
                        continue
                    if not inq[p]:
                        self._notify(p, old_u, new_u)
                        continue
                    mp = mu[p]
                    wp = weight[p]
                    if owner[p] == MIN:
                        x = _add(new_u, wp)
                        k = INF if x == INF else x - mp
                        cur = key.get(p)
                        if cur is None or k < cur:
                            key[p] = k
                            heapq.heappush(heap, (k, p))
                    else:
                        if _add(old_u, wp) > mp:
                            gc[p] -= 1
                        if gc[p] == 0 and p not in key and not inq[sigma[p]]:
                            k = self._max_outside(p, inq)
                            key[p] = k
                            heapq.heappush(heap, (k, p))
            # MIN positions whose successors all sat inside never had a key;
            # the scan above inserts them on their first outside move.

        rest = [v for v in D if inq[v]]
        if rest:
            self._win(rest)
        for v in D:
            inq[v] = 0

        if self.debug:
            self.forfeit_log.append(forfeits)
            for a, b in zip(forfeits, forfeits[1:]):
                if b < a:
                    raise InvariantError(f"forfeit sequence decreased: {forfeits}")
            for v, m in before.items():
                if not mu[v] > m:
                    raise InvariantError(f"position {v} did not rise ({m} -> {mu[v]})")
        return True

    def _max_outside(self, v, inq):
        g, mu = self.g, self.mu
        w = g.weight[v]
        best = -1
        for u in g.succ[v]:
            if not inq[u]:
                x = _add(mu[u], w)
                if x > best:
                    best = x
        return best if best == INF else best - mu[v]

    def _win(self, rest):
        g, mu, sigma = self.g, self.mu, self.sigma
        inq = self._in_region
        rest.sort()
        for v in rest:
            if g.owner[v] == MAX and not inq[sigma[v]]:
                w = g.weight[v]
                best, best_u = -1, -1
                for u in g.succ[v]:
                    if inq[u]:
                        x = _add(mu[u], w)
                        if x > best:
                            best, best_u = x, u
                if best <= mu[v]:
                    # an escape that only reaches INF outside
                    best_u = next(u for u in g.succ[v] if not inq[u] and mu[u] == INF)
                sigma[v] = best_u
        olds = [mu[v] for v in rest]
        for v, old in zip(rest, olds):
            mu[v] = INF
            if old != INF:
                self._emit(v, old, INF, "win")
            self.n0.discard(v)
            self.nplus.discard(v)
        for v, old in zip(rest, olds):
            for p in g.pred[v]:
                if not inq[p]:
                    self._notify(p, old, INF)

    # -- checks ------------------------------------------------------------

    def check(self, where=""):
        """Debug assertions after a phase."""
        g, mu = self.g, self.mu
        S = g.S
        for v, x in enumerate(mu):
            if x != INF and x > S:
                raise InvariantError(f"{where}: measure {x} at {v} exceeds S={S}")
        rep = validate_qdr(g, self.qdr, deep=self.deep)
        if not rep.ok:
            self.stats.violations.extend(rep.violations)
            raise InvariantError(f"{where}: {rep.violations[:3]}")

    def run(self):
        g = self.g
        bound = g.n * (g.S + 1)
        while self.pending():
            self.iteration += 1
            ch0 = self.prg0()
            if self.debug:
                self.check("prg0")
            ch1 = self.prg_plus()
            if self.debug:
                self.check("prg+")
            self.stats.solver_passes += ch0 + ch1
            if self.iteration > bound:
                raise InvariantError(f"more than n(S+1)={bound} iterations")
        self.stats.outer_iterations = self.iteration


def qdpm_solve(g: Game, trace: Optional[Callable] = None, debug: bool = False,
               deep: bool = False, timeout=None):
    """Solve ``g`` with the quasi-dominion algorithm.

    Returns ``(Solution, UpdateStats)``.  ``debug`` re-validates the
    representation after every phase (``deep`` adds the expensive checks)
    and asserts the per-run progress properties.
    """
    deadline = timeout if isinstance(timeout, Deadline) else Deadline(timeout)
    t0 = time.perf_counter_ns()
    st = QdpmState(g, trace=trace, debug=debug, deep=deep, deadline=deadline)
    st.run()
    st.stats.time_ns = time.perf_counter_ns() - t0
    r = st.qdr
    return Solution.from_measure(r.mu, r.sigma), st.stats


def solve_state(g: Game, **kw) -> QdpmState:
    """Like :func:`qdpm_solve` but hands back the finished state."""
    st = QdpmState(g, **kw)
    st.run()
    return st
