"""Small hand-built games used by tests, demos and the bench suites.

Owners: ``MAX``/``MIN``.  Row format is ``(label, owner, weight, succ labels)``
as accepted by :func:`game_from_spec`.
"""

from .arena import MAX, MIN, Game, game_from_spec
from .qdpm.qdr import QDR


def g_loop() -> Game:
    return game_from_spec([("p0", MAX, 1, ["p0"])])


def g_zero() -> Game:
    return game_from_spec([
        ("p0", MAX, 1, ["p1"]),
        ("p1", MIN, -1, ["p0"]),
    ])


def g_fig1(k: int) -> Game:
    """Four positions; MIN escapes to the zero loop at ``b`` but the measures
    of ``c`` and ``d`` climb one unit at a time up to ``k`` under plain lifting."""
    if k <= 1:
        raise ValueError("k must exceed 1")
    return game_from_spec([
        ("a", MIN, k, ["a", "b", "d"]),
        ("b", MIN, 0, ["b"]),
        ("c", MIN, 0, ["a", "d"]),
        ("d", MAX, 1, ["c"]),
    ])


def g_fig2() -> Game:
    return game_from_spec([
        ("a", MIN, 3, ["e"]),
        ("b", MAX, -1, ["a"]),
        ("c", MIN, 1, ["a", "f"]),
        ("d", MIN, 0, ["b", "c"]),
        ("e", MIN, 0, ["e"]),
        ("f", MAX, 0, ["d", "f"]),
    ])


def _qdr(g, mu, sigma):
    return QDR([mu[g.label(v)] for v in g.positions()],
               {g.index(v): g.index(u) for v, u in sigma.items()})


def fig2_qdr(g: Game = None) -> QDR:
    g = g or g_fig2()
    return _qdr(g, {"a": 3, "b": 2, "c": 1, "d": 1, "e": 0, "f": 1},
                {"b": "a", "f": "d"})


def g_fig3() -> Game:
    return game_from_spec([
        ("a", MIN, 3, ["b"]),
        ("b", MIN, 0, ["b"]),
        ("c", MIN, 2, ["b"]),
        ("d", MIN, 1, ["a", "e"]),
        ("e", MAX, 0, ["c", "d"]),
    ])


def fig3_pair(g: Game = None):
    """Two ordered representations whose images under prg+ swap order."""
    g = g or g_fig3()
    r1 = _qdr(g, {"a": 3, "b": 0, "c": 2, "d": 1, "e": 1}, {"e": "d"})
    r2 = _qdr(g, {"a": 3, "b": 0, "c": 2, "d": 1, "e": 2}, {"e": "c"})
    return r1, r2


def g_sim(k: int) -> Game:
    """Seven positions; a closed MAX region {c, d, g} is found by QDPM in a
    constant number of updates while plain lifting needs a number linear in ``k``."""
    if k <= 2:
        raise ValueError("k must exceed 2")
    return game_from_spec([
        ("a", MIN, k, ["e"]),
        ("b", MIN, -1, ["a", "c"]),
        ("c", MAX, 0, ["f", "d"]),
        ("d", MIN, -1, ["g"]),
        ("e", MIN, 0, ["e"]),
        ("f", MIN, 2, ["b"]),
        ("g", MIN, 2, ["c"]),
    ])


def by_label(g: Game, values) -> dict:
    """``{label: value}`` view of a per-position sequence."""
    return {g.label(v): values[v] for v in g.positions()}


def labels(g: Game, positions) -> set:
    return {g.label(v) for v in positions}


def g_searched() -> Game:
    """Four-position game found by ``find_nonmonotone_witness()`` with its
    default arguments."""
    return game_from_spec([
        ("0", MAX, -1, ["2", "1"]),
        ("1", MIN, 1, ["2"]),
        ("2", MIN, 3, ["3"]),
        ("3", MAX, -1, ["0", "2"]),
    ])


def searched_pair(g: Game = None):
    g = g or g_searched()
    r1 = QDR([1, 2, 3, 0], {0: 1})
    r2 = QDR([2, 2, 3, 0], {0: 2})
    return r1, r2
