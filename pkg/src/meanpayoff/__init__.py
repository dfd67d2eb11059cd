"""Mean-payoff game solvers: plain progress-measure lifting and the
quasi-dominion algorithm, with a brute-force oracle and file formats."""

from .arena import MAX, MIN, Game, build_game, game_from_spec, shift_threshold, stats
from .brim import brim_solve, brim_solve_traced
from .measure import INF, is_progress_measure, stretch
from .qdpm import QDR, qdpm_solve, validate_qdr
from .results import Solution, SolverTimeout, UpdateStats

__version__ = "0.1.0"
