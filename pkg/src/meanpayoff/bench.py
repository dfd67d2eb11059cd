"""Benchmark runner: instances x algorithms -> flat stats records."""

from __future__ import annotations

import csv
import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from . import fixtures
from .arena import Game
from .brim import brim_solve
from .io import generate_random, parse_mpg
from .oracle import BudgetExceeded, oracle_solve
from .qdpm import qdpm_solve
from .results import Deadline, SolverTimeout, UpdateStats

ALGOS = ("qdpm", "brim", "oracle")
DEFAULT_KS = (3, 10, 100, 1000, 10000)
DEFAULT_DEGREES = (10, 20, 40, 80)


@dataclass
class StatsRecord:
    algorithm: str
    n: int
    m: int
    W: str
    S: str
    lift_events: int = 0
    solver_passes: int = 0
    outer_iterations: int = 0
    time_ns: int = 0
    win_max_size: int = 0
    win_min_size: int = 0
    params: str = ""
    status: str = "ok"
    partition: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self))


FIELDS = [f.name for f in fields(StatsRecord)]


def partition_digest(win_max) -> str:
    """Short hash of the MAX region, so rows can be compared across algorithms."""
    text = ",".join(map(str, sorted(win_max)))
    return hashlib.sha1(text.encode()).hexdigest()[:16]


def solve_with(algo: str, g: Game, timeout=None, **kw):
    if algo == "qdpm":
        return qdpm_solve(g, timeout=timeout, **kw)
    if algo == "brim":
        return brim_solve(g, timeout=timeout, **kw)
    if algo == "oracle":
        t0 = time.perf_counter_ns()
        sol = oracle_solve(g)
        return sol, UpdateStats(algorithm="oracle", time_ns=time.perf_counter_ns() - t0)
    raise ValueError(f"unknown algorithm {algo!r}")


def make_record(algo, g, params, sol=None, st=None, status="ok") -> StatsRecord:
    rec = StatsRecord(algo, g.n, g.m, str(g.W), str(g.S), params=params, status=status)
    if st is not None:
        rec.lift_events = st.lift_events
        rec.solver_passes = st.solver_passes
        rec.outer_iterations = st.outer_iterations
        rec.time_ns = st.time_ns
    if sol is not None:
        rec.win_max_size = len(sol.win_max)
        rec.win_min_size = len(sol.win_min)
        rec.partition = partition_digest(sol.win_max)
    return rec


# instance specs are plain tuples so they pickle cheaply into workers

def suite_instances(suite: str, n=5000, degrees=DEFAULT_DEGREES, count=20,
                    ks=DEFAULT_KS, lo=-15000, hi=15000, seed0=1):
    if suite == "random":
        return [("random", n, d, lo, hi, seed0 + i) for d in degrees for i in range(count)]
    if suite in ("fig1", "sim"):
        return [(suite, k) for k in ks]
    raise ValueError(f"unknown suite {suite!r}")


def dir_instances(path) -> list:
    return [("file", str(p)) for p in sorted(Path(path).glob("*.mpg"))]


def load_instance(spec):
    """Returns ``(game, params string)``."""
    kind = spec[0]
    if kind == "random":
        _, n, d, lo, hi, seed = spec
        return generate_random(n, d, lo, hi, seed=seed), f"random n={n} d={d} w=[{lo},{hi}] seed={seed}"
    if kind == "fig1":
        return fixtures.g_fig1(spec[1]), f"fig1 k={spec[1]}"
    if kind == "sim":
        return fixtures.g_sim(spec[1]), f"sim k={spec[1]}"
    if kind == "file":
        return parse_mpg(Path(spec[1]).read_text()), f"file {spec[1]}"
    raise ValueError(f"unknown instance kind {kind!r}")


def run_one(spec, algo, timeout=None) -> StatsRecord:
    g, params = load_instance(spec)
    try:
        sol, st = solve_with(algo, g, timeout=None if timeout is None else Deadline(timeout))
    except SolverTimeout:
        return make_record(algo, g, params, status="timeout")
    except BudgetExceeded:
        return make_record(algo, g, params, status="budget")
    return make_record(algo, g, params, sol, st)


def _run_task(args):
    return run_one(*args)


def run_bench(instances, algos, timeout=None, jobs=1):
    """Run every algorithm on every instance; records come back in task order."""
    tasks = [(spec, algo, timeout) for spec in instances for algo in algos]
    if jobs <= 1:
        return [_run_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks))


def write_csv(records, fh):
    w = csv.DictWriter(fh, fieldnames=FIELDS)
    w.writeheader()
    for r in records:
        w.writerow(asdict(r))


def read_csv(fh) -> list:
    return list(csv.DictReader(fh))


def partition_mismatches(rows) -> list:
    """Instances where two finished algorithms disagree on the MAX region."""
    seen = {}
    bad = []
    for r in rows:
        if r["status"] != "ok":
            continue
        prev = seen.setdefault(r["params"], r)
        if prev["partition"] != r["partition"]:
            bad.append((r["params"], prev["algorithm"], r["algorithm"]))
    return bad
