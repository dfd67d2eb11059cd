"""Search for pairs of representations on which prg+ is not monotone."""

from __future__ import annotations

import itertools
import random
from typing import NamedTuple

from ..arena import MAX, build_game
from .operators import prg_plus
from .qdr import QDR, qdr_lt, validate_qdr


class NotFound(LookupError):
    pass


class NonMonotoneWitness(NamedTuple):
    game: object
    r1: QDR
    r2: QDR
    image1: QDR
    image2: QDR


def _random_game(rng, n, max_deg, lo, hi):
    raw = []
    for v in range(n):
        k = rng.randint(1, min(max_deg, n))
        raw.append((v, rng.randint(lo, hi), rng.randint(0, 1), rng.sample(range(n), k)))
    return build_game(raw)


def valid_qdrs(g, cap=None):
    """All valid representations with finite measures up to ``cap``."""
    cap = g.S if cap is None else cap
    maxes = [v for v in range(g.n) if g.owner[v] == MAX]
    out = []
    for mu in itertools.product(range(cap + 1), repeat=g.n):
        mu = list(mu)
        pos_max = [v for v in maxes if mu[v] > 0]
        for choice in itertools.product(*[g.succ[v] for v in pos_max]):
            r = QDR(mu, dict(zip(pos_max, choice)))
            if validate_qdr(g, r).ok and validate_qdr(g, r, deep=True).ok:
                out.append(r)
    return out


def find_nonmonotone_witness(budget: int = 200, seed: int = 0, n: int = 4,
                             max_deg: int = 2, lo: int = -1, hi: int = 3):
    """Try ``budget`` random small games; return the first pair
    ``r1 < r2`` whose prg+ images satisfy ``image2 < image1``."""
    rng = random.Random(seed)
    for _ in range(budget):
        g = _random_game(rng, n, max_deg, lo, hi)
        if g.S == 0 or g.S > 6:
            continue
        qdrs = valid_qdrs(g)
        images = [prg_plus(g, r) for r in qdrs]
        for i, j in itertools.permutations(range(len(qdrs)), 2):
            if qdr_lt(g, qdrs[i], qdrs[j]) and qdr_lt(g, images[j], images[i]):
                return NonMonotoneWitness(g, qdrs[i], qdrs[j], images[i], images[j])
    raise NotFound(f"no witness within {budget} games")
