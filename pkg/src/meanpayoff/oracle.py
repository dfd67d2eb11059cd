"""Ground truth by brute force over positional strategy pairs.

Both players have optimal positional strategies, so MAX wins ``v`` iff
some MAX strategy beats every MIN strategy from ``v``.  A pair of
positional strategies turns the arena into a functional graph; the play
from ``v`` ends in a simple cycle and MAX wins it iff the cycle's weight
sum is positive.  All pairs are evaluated at once with numpy.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

import numpy as np

from .arena import MAX, MIN, Game
from .results import Solution

DEFAULT_BUDGET = 1 << 20


class BudgetExceeded(RuntimeError):
    def __init__(self, count, budget):
        super().__init__(f"{count} strategy pairs exceed the budget of {budget}")
        self.count = count
        self.budget = budget


class PlayOutcome(NamedTuple):
    cycle: list
    cycle_sum: int
    length: int

    @property
    def max_wins(self) -> bool:
        return self.cycle_sum > 0


def play_from(g: Game, smax: dict, smin: dict, start: int) -> PlayOutcome:
    """Follow both strategies from ``start`` until a position repeats."""
    seen = {}
    path = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = smax[v] if g.owner[v] == MAX else smin[v]
    cycle = path[seen[v]:]
    return PlayOutcome(cycle, sum(g.weight[u] for u in cycle), len(cycle))


def strategy_count(owner, succ) -> tuple:
    nmax = nmin = 1
    for o, ss in zip(owner, succ):
        if o == MAX:
            nmax *= len(ss)
        else:
            nmin *= len(ss)
    return nmax, nmin


def _choices(owner, succ, player):
    pos = [v for v, o in enumerate(owner) if o == player]
    rows = list(itertools.product(*[succ[v] for v in pos]))
    table = np.array(rows, dtype=np.int64).reshape(len(rows), len(pos))
    return pos, table


def _pair_graphs(owner, succ, budget):
    """Successor arrays of shape (nmax, nmin, n), one per strategy pair."""
    n = len(owner)
    nmax, nmin = strategy_count(owner, succ)
    if nmax * nmin > budget:
        raise BudgetExceeded(nmax * nmin, budget)
    pmax, tmax = _choices(owner, succ, MAX)
    pmin, tmin = _choices(owner, succ, MIN)
    nxt = np.empty((nmax, nmin, n), dtype=np.int64)
    if pmax:
        nxt[:, :, pmax] = tmax[:, None, :]
    if pmin:
        nxt[:, :, pmin] = tmin[None, :, :]
    return nxt, tmax, pmax


def _cycle_entries(nxt, n):
    # n steps from anywhere land on the cycle
    cur = np.broadcast_to(np.arange(n), nxt.shape).copy()
    for _ in range(n):
        cur = np.take_along_axis(nxt, cur, axis=-1)
    return cur


def _cycle_fold(nxt, entry, values, n, combine, init):
    """Fold ``values`` over the cycle starting at ``entry``."""
    acc = np.full(entry.shape, init, dtype=values.dtype)
    cur = entry
    done = np.zeros(entry.shape, dtype=bool)
    for _ in range(n):
        acc = np.where(done, acc, combine(acc, values[cur]))
        cur = np.take_along_axis(nxt, cur, axis=-1)
        done |= cur == entry
    return acc


def _weights_array(weights):
    big = max((abs(w) for w in weights), default=0) * len(weights)
    return np.array(weights, dtype=np.int64 if big < 2 ** 62 else object)


def _solve_by(owner, succ, good, budget):
    """``good`` maps (nxt, entry) to a bool array: MAX wins that play."""
    n = len(owner)
    nxt, tmax, pmax = _pair_graphs(owner, succ, budget)
    entry = _cycle_entries(nxt, n)
    win = good(nxt, entry)                    # (nmax, nmin, n)
    beats_all = win.all(axis=1)               # (nmax, n)
    win_max = beats_all.any(axis=0)
    witness = {}
    if win_max.any():
        # a single positional strategy wins the whole region
        covers = (beats_all | ~win_max[None, :]).all(axis=1)
        idx = int(np.argmax(covers)) if covers.any() else int(np.argmax(beats_all.sum(axis=1)))
        witness = {v: int(tmax[idx, i]) for i, v in enumerate(pmax) if win_max[v]}
    return win_max, witness


def oracle_solve(g: Game, budget: int = DEFAULT_BUDGET) -> Solution:
    """Exact winners for small games; raises :class:`BudgetExceeded`."""
    w = _weights_array(g.weight)

    def good(nxt, entry):
        total = _cycle_fold(nxt, entry, w, g.n, np.add, 0)
        return total > 0

    win_max, witness = _solve_by(g.owner, g.succ, good, budget)
    wm = {v for v in range(g.n) if win_max[v]}
    return Solution(wm, set(range(g.n)) - wm, witness, [])


def parity_solve(owner, priority, succ, budget: int = DEFAULT_BUDGET) -> set:
    """Brute-force winning region of the even player (owner 0) in a parity
    game where the largest priority seen infinitely often decides."""
    pr = np.array(priority, dtype=np.int64)
    n = len(owner)

    def good(nxt, entry):
        top = _cycle_fold(nxt, entry, pr, n, np.maximum, -1)
        return top % 2 == 0

    win_even, _ = _solve_by(owner, succ, good, budget)
    return {v for v in range(n) if win_even[v]}
