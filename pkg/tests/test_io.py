import pytest
from hypothesis import given, settings, strategies as st

from meanpayoff.arena import MAX, MIN, DuplicateEdge, GameError, build_game, check_transpose
from meanpayoff.fixtures import g_fig1, g_fig2
from meanpayoff.io import (InvalidRange, ParityGame, ParseError, edges_to_positions,
                           generate_random, parity_to_mpg, parse_measure, parse_mpg,
                           parse_parity, read_winners, write_measure, write_mpg,
                           write_parity)
from meanpayoff.measure import INF
from meanpayoff.oracle import oracle_solve, parity_solve


def test_round_trip_fixtures():
    for g in (g_fig1(7), g_fig2(), generate_random(50, 4, -9, 9, seed=2)):
        assert parse_mpg(write_mpg(g, comment="x")) == g


def test_parse_basic():
    g = parse_mpg('# hi\nmpg 1;\n0 3 0 1 "a";\n1 -2 1 0,1;\n')
    assert g.n == 2 and list(g.weight) == [3, -2]
    assert g.label(0) == "a" and list(g.succ[1]) == [0, 1]
    assert parse_mpg(b"mpg 0;\n0 1 0 0;\n").n == 1


@pytest.mark.parametrize("text", [
    "",
    "mpg 0;\n0 1 2 0;\n",          # owner 2
    "mpg 1;\n0 1 0 0;\n",          # count mismatch
    "parity 0;\n0 1 0 0;\n",       # wrong header
    "mpg 0;\n0 1 0;\n",            # no successors
    b"mpg 0;\n0 1 0 0 \"\xff\";\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_mpg(text)


def test_structural_errors():
    with pytest.raises(GameError):
        parse_mpg("mpg 0;\n0 1 0 1;\n")
    with pytest.raises(DuplicateEdge):
        parse_mpg("mpg 0;\n0 1 0 0,0;\n")


def test_parity_round_trip_and_encoding():
    text = "parity 2;\n0 2 0 1;\n1 3 1 2,0;\n2 0 0 2;\nstart 0;\n"
    pg = parse_parity(text)
    assert parse_parity(write_parity(pg)) == pg
    g = parity_to_mpg(pg)
    assert list(g.weight) == [9, -27, 1]
    assert [g.owner[v] for v in range(3)] == [MAX, MIN, MAX]
    with pytest.raises(ParseError):
        parse_parity("parity 0;\n0 -1 0 0;\n")


def test_parity_encoding_small_agrees():
    pg = ParityGame((0, 1, 1), (1, 2, 3), ((1, 2), (0,), (2, 0)))
    g = parity_to_mpg(pg)
    assert oracle_solve(g).win_max == parity_solve(pg.owner, pg.priority, pg.succ)


def test_edges_to_positions():
    g = edges_to_positions([MAX, MIN], [(0, 1, 5), (1, 0, -3), (1, 1, 0)])
    assert g.n == 5
    assert list(g.succ[0]) == [2] and list(g.succ[1]) == [3, 4]
    assert g.weight[2] == 5 and g.owner[3] == MIN
    assert check_transpose(g)
    with pytest.raises(GameError):
        edges_to_positions([MAX], [(0, 3, 1)])


def test_generator_deterministic():
    a = generate_random(100, 5, -10, 10, seed=42)
    assert a == generate_random(100, 5, -10, 10, seed=42)
    assert a != generate_random(100, 5, -10, 10, seed=43)
    assert all(1 <= len(a.succ[v]) <= 5 for v in a.positions())
    assert all(-10 <= w <= 10 for w in a.weight)


def test_generator_desk_shape():
    g = generate_random(5000, 10, -15000, 15000, seed=1)
    assert g.n == 5000 and g.m <= 50000
    assert check_transpose(g)


@pytest.mark.parametrize("args", [(0, 3, 0, 1), (5, 0, 0, 1), (5, 3, 2, 1)])
def test_generator_ranges(args):
    with pytest.raises(InvalidRange):
        generate_random(*args)


def test_measure_files():
    text = write_measure([0, 3, INF], {1: 2})
    assert parse_measure(text, 3) == ([0, 3, INF], {1: 2})
    with pytest.raises(ParseError):
        parse_measure("0 1\n", 2)
    assert read_winners("0 1\n1 0\nstrategy 1 0\n") == [1, 0]


games = st.integers(1, 6).flatmap(lambda n: st.lists(
    st.tuples(st.integers(-50, 50), st.sampled_from([MAX, MIN]),
              st.sets(st.integers(0, n - 1), min_size=1)),
    min_size=n, max_size=n))


@settings(max_examples=150, deadline=None)
@given(games)
def test_round_trip_property(rows):
    g = build_game([(v, w, o, sorted(ss)) for v, (w, o, ss) in enumerate(rows)])
    h = parse_mpg(write_mpg(g))
    assert h == g and check_transpose(h)


@settings(max_examples=300, deadline=None)
@given(st.binary(max_size=80) | st.text(max_size=80))
def test_parser_fuzz(data):
    try:
        parse_mpg(data)
    except (ParseError, GameError):
        pass
