"""Quasi-dominion progress-measure solver."""

from .engine import InvariantError, QdpmEvent, QdpmState, qdpm_solve, solve_state
from .operators import (EmptyEscape, EmptyTargets, NoOutsideMove, NotClosed,
                        PrgPlusRecord, bef, bep, controlled_lift, dmn, esc, npp,
                        pre, prg0, prg_plus, solve_reference, win_close)
from .qdr import (QDR, QdrReport, SizeLimit, Violation, check_quasi_dominion,
                  qdr_init, qdr_leq, qdr_lt, validate_qdr)
