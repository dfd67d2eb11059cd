"""Weighted two-player arenas.

Positions are dense integers ``0..n-1``.  Every position carries an owner
(``MAX`` or ``MIN``) and a signed integer weight; moves are stored as
successor tuples in input order together with the transposed predecessor
tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

MAX = 0
MIN = 1


class GameError(ValueError):
    """Base class for malformed game descriptions."""


class SinkPosition(GameError):
    def __init__(self, pos):
        super().__init__(f"position {pos} has no successors")
        self.pos = pos


class DanglingEdge(GameError):
    def __init__(self, pos, succ):
        super().__init__(f"position {pos} has out-of-range successor {succ}")
        self.pos = pos
        self.succ = succ


class DuplicateId(GameError):
    def __init__(self, pos):
        super().__init__(f"position {pos} is declared twice")
        self.pos = pos


class DuplicateEdge(GameError):
    def __init__(self, pos, succ):
        super().__init__(f"move ({pos}, {succ}) is listed twice")
        self.pos = pos
        self.succ = succ


class MissingId(GameError):
    def __init__(self, pos):
        super().__init__(f"position ids are not dense: {pos} is missing")
        self.pos = pos


class GameStats(NamedTuple):
    n: int
    m: int
    W: int
    S: int


@dataclass(frozen=True, eq=False)
class Game:
    """Immutable weighted arena.  Build through :func:`build_game`."""

    owner: tuple
    weight: tuple
    succ: tuple
    pred: tuple
    labels: tuple = ()

    @property
    def n(self) -> int:
        return len(self.owner)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.succ)

    @property
    def S(self) -> int:
        return sum(w for w in self.weight if w > 0)

    @property
    def W(self) -> int:
        return max((w for w in self.weight if w > 0), default=0)

    def positions(self) -> range:
        return range(len(self.owner))

    def label(self, v: int) -> str:
        if self.labels and self.labels[v] is not None:
            return self.labels[v]
        return str(v)

    def index(self, label: str) -> int:
        """Position id carrying ``label``."""
        return self.labels.index(label)

    def positions_of(self, player: int) -> list:
        return [v for v, o in enumerate(self.owner) if o == player]

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return (self.owner == other.owner and self.weight == other.weight
                and self.succ == other.succ)

    def __hash__(self):
        return hash((self.owner, self.weight, self.succ))

    def __repr__(self):
        return f"Game(n={self.n}, m={self.m}, S={self.S})"


def _from_lists(owner, weight, succ, labels=()) -> Game:
    n = len(owner)
    pred = [[] for _ in range(n)]
    for v, ss in enumerate(succ):
        for u in ss:
            pred[u].append(v)
    return Game(tuple(owner), tuple(weight), tuple(tuple(s) for s in succ),
                tuple(tuple(p) for p in pred), tuple(labels))


def build_game(raw: Iterable[Sequence]) -> Game:
    """Validate ``(id, weight, owner, successors[, label])`` records.

    Records may come in any order; ids must cover ``0..n-1`` exactly.
    Owners are ``MAX``/``MIN`` (0/1).
    """
    records = {}
    for rec in raw:
        vid = int(rec[0])
        if vid in records:
            raise DuplicateId(vid)
        records[vid] = rec
    n = len(records)
    for vid in records:
        if not 0 <= vid < n:
            missing = next(i for i in range(n) if i not in records)
            raise MissingId(missing)

    owner, weight, succ, labels = [], [], [], []
    for vid in range(n):
        rec = records[vid]
        w, o, ss = rec[1], rec[2], list(rec[3])
        if o not in (MAX, MIN):
            raise GameError(f"position {vid} has invalid owner {o!r}")
        if not ss:
            raise SinkPosition(vid)
        seen = set()
        for u in ss:
            if not 0 <= u < n:
                raise DanglingEdge(vid, u)
            if u in seen:
                raise DuplicateEdge(vid, u)
            seen.add(u)
        owner.append(o)
        weight.append(int(w))
        succ.append(ss)
        labels.append(rec[4] if len(rec) > 4 else None)
    if all(lab is None for lab in labels):
        labels = ()
    return _from_lists(owner, weight, succ, labels)


def game_from_spec(spec: Sequence[tuple]) -> Game:
    """Build a game from labelled rows ``(label, owner, weight, [succ labels])``.

    Handy for writing fixtures by hand.
    """
    ids = {row[0]: i for i, row in enumerate(spec)}
    raw = [(ids[lab], w, o, [ids[s] for s in ss], lab)
           for lab, o, w, ss in spec]
    return build_game(raw)


def stats(g: Game) -> GameStats:
    return GameStats(g.n, g.m, g.W, g.S)


def shift_threshold(g: Game, nu: int) -> Game:
    """Subtract ``nu`` from every weight.

    Player MAX wins the result under the strict 0-mean criterion exactly
    where it wins ``g`` with mean payoff above ``nu``.
    """
    if nu == 0:
        return g
    return Game(g.owner, tuple(w - nu for w in g.weight), g.succ, g.pred,
                g.labels)


def scale_weights(g: Game, factor: int) -> Game:
    if factor <= 0:
        raise ValueError("scale factor must be positive")
    return Game(g.owner, tuple(w * factor for w in g.weight), g.succ, g.pred,
                g.labels)


def check_transpose(g: Game) -> bool:
    forward = {(v, u) for v in g.positions() for u in g.succ[v]}
    backward = {(v, u) for u in g.positions() for v in g.pred[u]}
    return forward == backward and len(forward) == g.m
