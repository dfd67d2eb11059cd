import pytest

from meanpayoff.brim import brim_lift, brim_lift_at, brim_solve, brim_solve_traced
from meanpayoff.fixtures import by_label, g_fig1, g_loop, g_sim, g_zero
from meanpayoff.io import generate_random
from meanpayoff.measure import INF, is_progress_measure, mf_leq
from meanpayoff.results import SolverTimeout


def test_lift_at_fig1():
    k = 6
    g = g_fig1(k)
    mu0 = [0] * 4
    assert brim_lift_at(g, mu0, g.index("a")) == k
    assert brim_lift_at(g, mu0, g.index("d")) == 1


def test_lift_cap():
    assert brim_lift_at(g_loop(), [1], 0) == INF


@pytest.mark.parametrize("schedule", ["worklist", "global"])
def test_fig1_terminal(schedule):
    k = 9
    g = g_fig1(k)
    sol, st = brim_solve(g, schedule=schedule)
    assert by_label(g, sol.final_measure) == {"a": k, "b": 0, "c": k, "d": k + 1}
    assert sol.win_max == set()
    assert st.lift_events >= 2 * k


def test_fig1_global_pass_count():
    for k in (2, 3, 10, 50):
        _, st = brim_solve(g_fig1(k), schedule="global")
        assert st.solver_passes == 2 * k + 1


def test_loop_and_zero():
    sol, _ = brim_solve(g_loop())
    assert sol.win_max == {0} and sol.final_measure == [INF]
    assert brim_solve(g_zero())[0].win_min == {0, 1}


def test_trace_fig1_first_pass():
    g = g_fig1(3)
    events = []
    brim_solve_traced(g, events)
    first = {g.label(e.position) for e in events if e.pass_index == 1}
    assert first == {"a", "d"}
    assert len(events) == brim_solve(g)[1].lift_events


def test_trace_loop():
    events = []
    brim_solve_traced(g_loop(), events)
    assert [(e.old, e.new) for e in events] == [(0, 1), (1, INF)]


def test_trace_callable_matches_plain():
    g = generate_random(30, 3, -5, 5, seed=4)
    seen = []
    a, _ = brim_solve_traced(g, seen.append)
    b, _ = brim_solve(g)
    assert a.final_measure == b.final_measure


def test_sim_global_counts():
    for k in (3, 5, 20):
        _, st = brim_solve(g_sim(k), schedule="global")
        assert st.lift_events == 5 * k + 9


def test_terminal_progress_and_bound():
    for seed in range(30):
        g = generate_random(40, 4, -20, 20, seed=seed)
        sol, _ = brim_solve(g)
        mu = sol.final_measure
        assert is_progress_measure(g, mu)
        assert all(x == INF or x <= g.S for x in mu)


def test_lift_monotone():
    g = generate_random(20, 3, -5, 5, seed=2)
    mu1 = [0] * g.n
    mu2 = brim_lift(g, mu1)
    assert mf_leq(mu1, mu2)
    assert mf_leq(brim_lift(g, mu1), brim_lift(g, mu2))


def test_schedules_agree():
    for seed in range(20):
        g = generate_random(25, 3, -9, 9, seed=seed)
        assert brim_solve(g)[0].final_measure == brim_solve(g, schedule="global")[0].final_measure


def test_per_position_lift_count():
    g = generate_random(30, 3, -5, 5, seed=11)
    events = []
    brim_solve_traced(g, events)
    counts = {}
    for e in events:
        counts[e.position] = counts.get(e.position, 0) + 1
    assert max(counts.values()) <= g.S + 1


def test_timeout():
    with pytest.raises(SolverTimeout):
        brim_solve(g_fig1(200000), timeout=0.0)


def test_bad_schedule():
    with pytest.raises(ValueError):
        brim_solve(g_loop(), schedule="lifo")


def test_witness_wins_region():
    # ties among infinite successors used to close zero cycles
    from meanpayoff.qdpm import check_quasi_dominion
    for seed in range(400):
        g = generate_random(1 + seed % 10, 3, -6, 6, seed=seed)
        sol, _ = brim_solve(g)
        W = sol.win_max
        assert set(sol.witness_max) == {v for v in W if g.owner[v] == 0}
        assert all(u in W for u in sol.witness_max.values())
        assert check_quasi_dominion(g, W, sol.witness_max, weak=True)
