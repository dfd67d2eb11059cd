"""Result records shared by all solvers."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .measure import INF


class SolverTimeout(RuntimeError):
    """Raised when a cooperative deadline passes mid-run."""


@dataclass
class UpdateStats:
    algorithm: str = ""
    lift_events: int = 0
    solver_passes: int = 0
    outer_iterations: int = 0
    time_ns: int = 0
    violations: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "lift_events": self.lift_events,
            "solver_passes": self.solver_passes,
            "outer_iterations": self.outer_iterations,
            "time_ns": self.time_ns,
        }


@dataclass
class Solution:
    win_max: set
    win_min: set
    witness_max: dict
    final_measure: list

    @classmethod
    def from_measure(cls, mu, sigma=None):
        win_max = {v for v, x in enumerate(mu) if x == INF}
        win_min = set(range(len(mu))) - win_max
        witness = {}
        if sigma is not None:
            witness = {v: u for v, u in sigma.items() if v in win_max}
        return cls(win_max, win_min, witness, list(mu))

    def winner(self, v: int) -> int:
        """0 when MAX wins ``v``, 1 otherwise (file convention)."""
        return 0 if v in self.win_max else 1

    def partition(self) -> tuple:
        return frozenset(self.win_max), frozenset(self.win_min)


class Deadline:
    """Cooperative timeout; ``check`` is cheap enough for inner loops."""

    __slots__ = ("limit", "_count")

    def __init__(self, seconds=None):
        self.limit = None if seconds is None else time.monotonic() + seconds
        self._count = 0

    def check(self):
        if self.limit is None:
            return
        self._count += 1
        if self._count & 255 == 0 and time.monotonic() > self.limit:
            raise SolverTimeout("deadline exceeded")
