"""Extended-natural measures and progress-measure checks.

A measure is either a non-negative Python ``int`` or the sentinel ``INF``.
``INF`` is ``math.inf``: it orders above every int (big ints included, since
CPython compares them exactly) and is never used in arithmetic, every
addition goes through :func:`stretch`.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from .arena import MAX, Game

INF = math.inf


class LengthMismatch(ValueError):
    pass


def is_inf(x) -> bool:
    return x == INF


def stretch(eta, v: int, g: Game):
    """``max(0, eta + weight(v))``; ``INF`` absorbs."""
    if eta == INF:
        return INF
    x = eta + g.weight[v]
    return x if x > 0 else 0


def add_weight(eta, w: int):
    if eta == INF:
        return INF
    x = eta + w
    return x if x > 0 else 0


def bottom(g: Game) -> list:
    return [0] * g.n


def mf_leq(mu1: Sequence, mu2: Sequence) -> bool:
    if len(mu1) != len(mu2):
        raise LengthMismatch(f"{len(mu1)} != {len(mu2)}")
    return all(a <= b for a, b in zip(mu1, mu2))


def mf_lt(mu1: Sequence, mu2: Sequence) -> bool:
    return mf_leq(mu1, mu2) and list(mu1) != list(mu2)


def max_denotation(mu: Sequence) -> set:
    """Positions with infinite measure (claimed for MAX)."""
    return {v for v, x in enumerate(mu) if x == INF}


def min_denotation(mu: Sequence) -> set:
    return {v for v, x in enumerate(mu) if x != INF}


def satisfies_progress(g: Game, mu: Sequence, v: int) -> bool:
    mv = mu[v]
    if mv == INF:
        return True
    w = g.weight[v]
    if g.owner[v] == MAX:
        return all(add_weight(mu[u], w) <= mv for u in g.succ[v])
    return any(add_weight(mu[u], w) <= mv for u in g.succ[v])


class ProgressCheck(NamedTuple):
    ok: bool
    violators: list

    def __bool__(self):
        return self.ok


def is_progress_measure(g: Game, mu: Sequence, over=None) -> ProgressCheck:
    """Check the local progress conditions on ``over`` (default: all).

    MAX positions must dominate the stretch of every successor, MIN
    positions that of at least one.  Returns the violating positions too.
    """
    if len(mu) != g.n:
        raise LengthMismatch(f"measure has {len(mu)} entries, game {g.n}")
    positions = g.positions() if over is None else sorted(over)
    bad = [v for v in positions if not satisfies_progress(g, mu, v)]
    return ProgressCheck(not bad, bad)


def format_measure(mu: Sequence) -> str:
    return " ".join("inf" if x == INF else str(x) for x in mu)


def parse_measure_value(tok: str):
    t = tok.strip().lower()
    if t in ("inf", "∞", "infinity"):
        return INF
    x = int(t)
    if x < 0:
        raise ValueError(f"negative measure {tok!r}")
    return x
