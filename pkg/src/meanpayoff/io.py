"""Text formats, the parity encoder, edge splitting and the random generator.

MPG files::

    # optional comment lines
    mpg <max-id>;
    <id> <weight> <owner> <succ,succ,...> ["label"];

Owner 0 is MAX, 1 is MIN.  Parity files use the PGSolver layout with a
``parity`` header and a non-negative priority in place of the weight.
"""

from __future__ import annotations

import re
from typing import NamedTuple

import numpy as np

from .arena import MAX, MIN, Game, GameError, build_game
from .measure import INF, parse_measure_value


class ParseError(ValueError):
    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class InvalidRange(ValueError):
    pass


_HEADER = re.compile(r"^\s*(mpg|parity)\s+(\d+)\s*;?\s*$")
_RECORD = re.compile(
    r'^\s*(\d+)\s+(-?\d+)\s+(\d+)\s+(\d+(?:\s*,\s*\d+)*)\s*(?:"([^"]*)")?\s*;\s*$')


def _lines(text):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(0, f"not UTF-8: {e}") from None
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield no, s


def _parse(text, kind):
    header = None
    rows = []
    for no, s in _lines(text):
        if header is None:
            m = _HEADER.match(s)
            if not m or m.group(1) != kind:
                raise ParseError(no, f"expected '{kind} <max-id>;' header")
            header = int(m.group(2))
            continue
        if s.startswith("start"):
            continue  # PGSolver start-position line
        m = _RECORD.match(s)
        if not m:
            raise ParseError(no, f"malformed record {s[:40]!r}")
        vid, val, owner = int(m.group(1)), int(m.group(2)), int(m.group(3))
        if owner not in (0, 1):
            raise ParseError(no, f"owner must be 0 or 1, got {owner}")
        succ = [int(x) for x in m.group(4).split(",")]
        rows.append((no, vid, val, owner, succ, m.group(5)))
    if header is None:
        raise ParseError(0, "empty input")
    if len(rows) != header + 1:
        raise ParseError(0, f"header announces {header + 1} positions, found {len(rows)}")
    return rows


def parse_mpg(text) -> Game:
    rows = _parse(text, "mpg")
    return build_game([(vid, w, o, ss, lab) for _, vid, w, o, ss, lab in rows])


def _label_suffix(g, v):
    if g.labels and g.labels[v] is not None:
        lab = g.labels[v]
        if '"' in lab or "\n" in lab:
            raise ValueError(f"label {lab!r} cannot be written")
        return f' "{lab}"'
    return ""


def write_mpg(g: Game, comment: str = None) -> str:
    out = []
    if comment:
        out.extend("# " + c for c in comment.splitlines())
    out.append(f"mpg {g.n - 1};")
    for v in g.positions():
        succ = ",".join(map(str, g.succ[v]))
        out.append(f"{v} {g.weight[v]} {g.owner[v]} {succ}{_label_suffix(g, v)};")
    return "\n".join(out) + "\n"


class ParityGame(NamedTuple):
    owner: tuple
    priority: tuple
    succ: tuple
    labels: tuple = ()

    @property
    def n(self):
        return len(self.owner)


def parse_parity(text) -> ParityGame:
    rows = _parse(text, "parity")
    for no, vid, p, _, _, _ in rows:
        if p < 0:
            raise ParseError(no, "negative priority")
    # reuse arena validation for ids and moves
    g = build_game([(vid, p, o, ss, lab) for _, vid, p, o, ss, lab in rows])
    return ParityGame(g.owner, g.weight, g.succ, g.labels)


def write_parity(pg: ParityGame) -> str:
    out = [f"parity {pg.n - 1};"]
    for v in range(pg.n):
        lab = ""
        if pg.labels and pg.labels[v] is not None:
            lab = f' "{pg.labels[v]}"'
        out.append(f"{v} {pg.priority[v]} {pg.owner[v]} {','.join(map(str, pg.succ[v]))}{lab};")
    return "\n".join(out) + "\n"


def parity_to_mpg(pg: ParityGame) -> Game:
    """Weight ``(-n)**p`` per position; the even player becomes MAX.

    On a simple cycle the term of the top priority outweighs all the
    others together, so the cycle sum is positive iff that priority is even.
    """
    n = pg.n
    raw = [(v, (-n) ** pg.priority[v], MAX if pg.owner[v] == 0 else MIN,
            list(pg.succ[v]), pg.labels[v] if pg.labels else None)
           for v in range(n)]
    return build_game(raw)


def edges_to_positions(owner, edges) -> Game:
    """Convert an edge-weighted arena ``[(u, v, w), ...]`` to position weights.

    Each edge gets a fresh middle position carrying its weight; original
    positions keep weight 0.  Ids of the originals are preserved.
    """
    n = len(owner)
    succ = [[] for _ in range(n)]
    extra = []
    for u, v, w in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GameError(f"edge ({u}, {v}) out of range")
        x = n + len(extra)
        succ[u].append(x)
        extra.append((x, w, owner[u], [v]))
    raw = [(v, 0, owner[v], succ[v]) for v in range(n)] + extra
    return build_game(raw)


def generate_random(n: int, max_outdeg: int, weight_lo: int, weight_hi: int,
                    owner_ratio: float = 0.5, seed: int = 0) -> Game:
    """Seeded random arena.

    Draw order (frozen): owners for all positions (MAX with probability
    ``owner_ratio``), then weights for all positions uniform in
    ``[weight_lo, weight_hi]``, then per position an out-degree uniform in
    ``[1, min(max_outdeg, n)]`` and that many distinct uniform successors.
    """
    if n < 1 or max_outdeg < 1 or weight_lo > weight_hi or not 0 <= owner_ratio <= 1:
        raise InvalidRange(f"bad parameters n={n} d={max_outdeg} "
                           f"w=[{weight_lo},{weight_hi}] ratio={owner_ratio}")
    rng = np.random.default_rng(seed)
    owners = np.where(rng.random(n) < owner_ratio, MAX, MIN)
    weights = rng.integers(weight_lo, weight_hi + 1, size=n)
    dmax = min(max_outdeg, n)
    degs = rng.integers(1, dmax + 1, size=n)
    raw = []
    for v in range(n):
        ss = rng.choice(n, size=int(degs[v]), replace=False)
        raw.append((v, int(weights[v]), int(owners[v]), [int(u) for u in ss]))
    return build_game(raw)


def generator_header(n, max_outdeg, weight_lo, weight_hi, owner_ratio, seed) -> str:
    return (f"generate n={n} max_outdeg={max_outdeg} weight_lo={weight_lo} "
            f"weight_hi={weight_hi} owner_ratio={owner_ratio} seed={seed}")


def write_measure(mu, sigma=None) -> str:
    lines = [f"{v} {'inf' if x == INF else x}" for v, x in enumerate(mu)]
    for v, u in sorted((sigma or {}).items()):
        lines.append(f"strategy {v} {u}")
    return "\n".join(lines) + "\n"


def parse_measure(text, n=None):
    """Read ``<id> <value>`` lines plus optional ``strategy <id> <succ>``."""
    mu = {}
    sigma = {}
    for no, s in _lines(text):
        parts = s.rstrip(";").split()
        try:
            if parts[0] == "strategy" and len(parts) == 3:
                sigma[int(parts[1])] = int(parts[2])
            elif len(parts) == 2:
                mu[int(parts[0])] = parse_measure_value(parts[1])
            else:
                raise ValueError("expected two fields")
        except ValueError as e:
            raise ParseError(no, str(e)) from None
    size = len(mu) if n is None else n
    if set(mu) != set(range(size)):
        raise ParseError(0, f"measure must list ids 0..{size - 1} exactly once")
    return [mu[v] for v in range(size)], sigma


def read_winners(text) -> list:
    """Parse ``<id> <0|1>`` solver output (strategy lines skipped)."""
    out = {}
    for no, s in _lines(text):
        parts = s.split()
        if parts[0] == "strategy":
            continue
        if len(parts) != 2 or parts[1] not in ("0", "1"):
            raise ParseError(no, "expected '<id> <0|1>'")
        out[int(parts[0])] = int(parts[1])
    return [out[v] for v in sorted(out)]
