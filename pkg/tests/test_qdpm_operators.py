import pytest

from meanpayoff.fixtures import (by_label, fig2_qdr, fig3_pair, g_fig1, g_fig2, g_fig3,
                                 g_loop, g_sim, labels)
from meanpayoff.measure import INF
from meanpayoff.qdpm import (QDR, EmptyEscape, EmptyTargets, NoOutsideMove, NotClosed,
                             PrgPlusRecord, bef, bep, controlled_lift, dmn, esc, npp, prg0,
                             prg_plus, qdr_init, qdr_lt, validate_qdr, win_close)
from meanpayoff.qdpm.witness import NotFound, find_nonmonotone_witness


@pytest.fixture
def fig2():
    g = g_fig2()
    return g, fig2_qdr(g)


def ids(g, *names):
    return {g.index(x) for x in names}


def test_fig2_npp_dmn(fig2):
    g, r = fig2
    assert labels(g, npp(g, r)) == {"c"}
    assert labels(g, dmn(g, r)) == {"c", "d", "f"}


def test_fig2_escapes(fig2):
    g, r = fig2
    assert labels(g, esc(g, r, ids(g, "c", "f"))) == {"c", "f"}
    assert labels(g, esc(g, r, ids(g, "c", "d", "f"))) == {"c", "d"}


def test_fig2_forfeits(fig2):
    g, r = fig2
    Q = ids(g, "c", "d", "f")
    assert bef(g, r.mu, Q, g.index("c")) == 3
    assert bef(g, r.mu, Q, g.index("d")) == 1
    assert labels(g, bep(g, r, Q)) == {"d"}


def test_fig2_prg_plus_first_batch(fig2):
    g, r = fig2
    rec = PrgPlusRecord()
    out = prg_plus(g, r, rec)
    assert labels(g, rec.batches[0]) == {"d"}
    assert rec.forfeits == sorted(rec.forfeits)
    assert validate_qdr(g, out, deep=True)


def test_bef_errors(fig2):
    g, r = fig2
    with pytest.raises(NoOutsideMove):
        bef(g, r.mu, set(range(g.n)), 0)
    with pytest.raises(EmptyEscape):
        bep(g, r, set())


def test_bef_inf():
    g = g_fig1(3)
    mu = [INF, 0, 1, 1]
    assert bef(g, mu, ids(g, "c", "d"), g.index("c")) == INF  # only exit is a
    mu = [INF, 0, 0, 0]
    assert bef(g, mu, ids(g, "c"), g.index("c")) == 0


def test_controlled_lift_fig1():
    k = 5
    g = g_fig1(k)
    c, d = g.index("c"), g.index("d")
    r = QDR([k, 0, 1, 1], {d: c})
    out = controlled_lift(g, r, {c}, set(range(4)) - {c, d})
    assert out.mu[c] == k
    assert controlled_lift(g, r, set(), {0}) == r
    with pytest.raises(EmptyTargets):
        controlled_lift(g, r, {d}, {0})


def test_controlled_lift_to_inf():
    g = g_fig1(3)
    d, c = g.index("d"), g.index("c")
    r = QDR([0, 0, INF, 0], {})
    out = controlled_lift(g, r, {d}, {c})
    assert out.mu[d] == INF and out.sigma[d] == c


def test_fig1_phases():
    k = 6
    g = g_fig1(k)
    r = prg0(g, qdr_init(g))
    assert by_label(g, r.mu) == {"a": k, "b": 0, "c": 0, "d": 1}
    r = prg_plus(g, r)
    r = prg0(g, r)
    assert by_label(g, r.mu)["c"] == 1
    assert labels(g, npp(g, r)) == {"d"}
    assert labels(g, dmn(g, r)) == {"c", "d"}
    rec = PrgPlusRecord()
    r = prg_plus(g, r, rec)
    assert rec.forfeits == [k - 1, k]
    assert [labels(g, b) for b in rec.batches] == [{"c"}, {"d"}]
    assert by_label(g, r.mu) == {"a": k, "b": 0, "c": k, "d": k + 1}
    assert npp(g, r) == set() and prg0(g, r) == r


def test_win_close():
    g = g_loop()
    r = QDR([1], {0: 0})
    assert win_close(g, r, {0}).mu == [INF]
    assert win_close(g, r, set()) == r
    g = g_fig1(3)
    with pytest.raises(NotClosed):
        win_close(g, QDR([3, 0, 1, 1], {3: 2}), {g.index("c"), g.index("d")})


def test_sim_win_redirects_witness():
    k = 5
    g = g_sim(k)
    c, d, gg = g.index("c"), g.index("d"), g.index("g")
    mu = {"a": k, "b": k - 1, "c": 2, "d": 3, "e": 0, "f": k + 1, "g": 4}
    r = QDR([mu[g.label(v)] for v in g.positions()], {c: g.index("f")})
    out = win_close(g, r, {c, d, gg})
    assert labels(g, {v for v in g.positions() if out.mu[v] == INF}) == {"c", "d", "g"}
    assert out.sigma[c] == d


def test_fig3_non_monotone():
    g = g_fig3()
    r1, r2 = fig3_pair(g)
    s1, s2 = prg_plus(g, r1), prg_plus(g, r2)
    assert by_label(g, s1.mu) == {"a": 3, "b": 0, "c": 2, "d": 4, "e": 4}
    assert by_label(g, s2.mu) == {"a": 3, "b": 0, "c": 2, "d": 3, "e": 2}
    assert qdr_lt(g, r1, r2) and qdr_lt(g, s2, s1)
    assert prg_plus(g, s2).mu == s1.mu


def test_witness_search():
    w = find_nonmonotone_witness()
    for r in (w.r1, w.r2, w.image1, w.image2):
        assert validate_qdr(w.game, r, deep=True)
    assert qdr_lt(w.game, w.r1, w.r2) and qdr_lt(w.game, w.image2, w.image1)
    with pytest.raises(NotFound):
        find_nonmonotone_witness(budget=0)
