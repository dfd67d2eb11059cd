"""Exhaustive parity-vs-encoded-MPG comparison on every small arena.

The winner of a play under fixed positional strategies depends only on the
set of positions on the cycle it ends in.  For one arena we compute that set
(as a bitmask) for every strategy pair and start, once.  Then both winning
conditions are tabulated per (mask, priority vector) and every priority
vector is checked with array lookups.  Arenas are enumerated up to
renaming of positions; since all priority vectors are tried, each orbit
stands for all its members.
"""

import itertools

import numpy as np

from meanpayoff.arena import MAX
from meanpayoff.io import ParityGame, parity_to_mpg
from meanpayoff.oracle import _cycle_entries, _cycle_fold, _pair_graphs


def arena_reps(n):
    """One (owner, succ) per orbit of arenas on n positions under renaming."""
    subsets = [s for s in range(1, 1 << n)]
    owners = np.array(list(itertools.product((0, 1), repeat=n)), dtype=np.int64)
    rows = np.array(list(itertools.product(subsets, repeat=n)), dtype=np.int64)
    adj = (rows[:, :, None] >> np.arange(n)) & 1            # (A, n, n)
    own = np.repeat(owners, len(rows), axis=0)
    adj = np.tile(adj, (len(owners), 1, 1))
    bits = n + n * n

    def code(o, a):
        flat = np.concatenate([o, a.reshape(len(a), -1)], axis=1)
        return flat @ (1 << np.arange(bits, dtype=np.int64))

    base = code(own, adj)
    canon = base.copy()
    for perm in itertools.permutations(range(n)):
        p = list(perm)
        canon = np.minimum(canon, code(own[:, p], adj[:, p][:, :, p]))
    keep = np.nonzero(base == canon)[0]
    out = []
    for i in keep:
        succ = [[u for u in range(n) if adj[i, v, u]] for v in range(n)]
        out.append(([int(x) for x in own[i]], succ))
    return out


def priority_vectors(n, top):
    return np.array(list(itertools.product(range(top + 1), repeat=n)), dtype=np.int64)


def tables(n, pvs):
    """Per (mask, pv): does the even player win a play looping on ``mask``,
    once by the parity rule and once by the sign of the encoded weights."""
    masks = np.arange(1 << n)
    member = (masks[:, None] >> np.arange(n)) & 1            # (M, n)
    top = np.where(member[:, None, :] == 1, pvs[None, :, :], -1).max(axis=2)
    parity = top % 2 == 0
    loops = [[v] for v in range(n)]
    weights = np.array([parity_to_mpg(ParityGame(tuple([0] * n), tuple(int(x) for x in pv),
                                                 tuple(loops))).weight
                        for pv in pvs], dtype=np.int64)       # (P, n)
    mpg = member @ weights.T > 0
    parity[0] = mpg[0] = False                                # empty mask never occurs
    return parity, mpg


def winners(owner, succ, table):
    """Even-player winners for every priority vector: bool (n, P)."""
    n = len(owner)
    nxt, _, _ = _pair_graphs(owner, succ, 1 << 20)
    entry = _cycle_entries(nxt, n)
    mask = _cycle_fold(nxt, entry, 1 << np.arange(n, dtype=np.int64), n, np.bitwise_or, 0)
    good = table[mask]                                       # (nmax, nmin, n, P)
    return good.all(axis=1).any(axis=0)


def compare_all(n, top=4):
    """Returns (games covered, orbit representatives, mismatches)."""
    pvs = priority_vectors(n, top)
    parity, mpg = tables(n, pvs)
    reps = arena_reps(n)
    bad = 0
    for owner, succ in reps:
        owner_mpg = [MAX if o == 0 else 1 for o in owner]
        a = winners(owner, succ, parity)
        b = winners(owner_mpg, succ, mpg)
        bad += int((a != b).any(axis=0).sum())
    total = 2 ** n * (2 ** n - 1) ** n * len(pvs)
    return total, len(reps) * len(pvs), bad
