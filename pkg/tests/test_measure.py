import pytest

from meanpayoff.arena import MAX, build_game
from meanpayoff.fixtures import g_fig1
from meanpayoff.measure import (INF, LengthMismatch, format_measure, is_progress_measure,
                                max_denotation, mf_leq, mf_lt, parse_measure_value, stretch)


def one(w):
    return build_game([(0, w, MAX, [0])])


def test_stretch():
    assert stretch(5, 0, one(-7)) == 0
    assert stretch(3, 0, one(2)) == 5
    assert stretch(INF, 0, one(-3)) == INF


def test_stretch_big_ints():
    big = 10 ** 400
    assert stretch(big, 0, one(1)) == big + 1
    assert big < INF


def test_order():
    assert mf_leq([0, 0], [0, 0])
    assert mf_leq([0, 0, 0], [3, INF, 1])
    assert not mf_leq([0, 5], [1, 4])
    assert not mf_leq([1, 4], [0, 5])
    assert mf_lt([0, 1], [0, 2]) and not mf_lt([0, 1], [0, 1])
    with pytest.raises(LengthMismatch):
        mf_leq([0], [0, 0])


def fig1_mu(g, **vals):
    return [vals[g.label(v)] for v in g.positions()]


def test_fig1_terminal_is_progress():
    k = 7
    g = g_fig1(k)
    mu = fig1_mu(g, a=k, b=0, c=k, d=k + 1)
    assert is_progress_measure(g, mu)


def test_fig1_first_lift_violators():
    k = 7
    g = g_fig1(k)
    mu = fig1_mu(g, a=k, b=0, c=0, d=1)
    res = is_progress_measure(g, mu)
    assert not res.ok
    assert [g.label(v) for v in res.violators] == ["c"]


def test_all_inf_is_progress():
    g = g_fig1(3)
    assert is_progress_measure(g, [INF] * 4).ok


def test_restricted_check():
    g = g_fig1(3)
    mu = fig1_mu(g, a=3, b=0, c=0, d=1)
    assert is_progress_measure(g, mu, over={g.index("a"), g.index("d")}).ok


def test_denotation_and_format():
    assert max_denotation([0, INF, 3]) == {1}
    assert format_measure([0, INF]) == "0 inf"
    assert parse_measure_value("inf") == INF
    assert parse_measure_value(" 12 ") == 12
    with pytest.raises(ValueError):
        parse_measure_value("-1")
