"""``mpg`` command line: solve, generate, convert, check, bench."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench
from .arena import GameError, shift_threshold
from .io import (InvalidRange, ParseError, generate_random, generator_header,
                 parse_measure, parse_mpg, parse_parity, parity_to_mpg,
                 write_measure, write_mpg)
from .measure import INF, is_progress_measure
from .oracle import BudgetExceeded
from .qdpm import QDR, SizeLimit, validate_qdr
from .qdpm.engine import solve_state


def _fail(msg, code=1):
    print(f"error: {msg}", file=sys.stderr)
    return code


def _read_game(path):
    return parse_mpg(Path(path).read_text(encoding="utf-8"))


def _fmt(x):
    return "inf" if x == INF else str(x)


def cmd_solve(args) -> int:
    try:
        g = _read_game(args.input)
    except (OSError, ParseError, GameError) as e:
        return _fail(e)
    if args.threshold:
        g = shift_threshold(g, args.threshold)
    trace_fh = open(args.trace, "w") if args.trace else None
    emit = None
    if trace_fh is not None:
        def emit(ev):
            trace_fh.write("\t".join(_fmt(x) if not isinstance(x, str) else x for x in ev) + "\n")
    kw = {}
    if args.algo != "oracle":
        kw["trace"] = emit
    if args.algo == "brim":
        kw["schedule"] = args.schedule
    try:
        sol, st = bench.solve_with(args.algo, g, timeout=args.timeout, **kw)
    except BudgetExceeded as e:
        return _fail(e, 2)
    finally:
        if trace_fh is not None:
            trace_fh.close()
    lines = [f"{v} {sol.winner(v)}" for v in g.positions()]
    lines += [f"strategy {v} {u}" for v, u in sorted(sol.witness_max.items())]
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.measure and sol.final_measure:
        sigma = sol.witness_max
        if args.algo == "qdpm":
            # the full witness, finite positive positions included
            sigma = solve_state(g).qdr.sigma
        Path(args.measure).write_text(write_measure(sol.final_measure, sigma))
    if args.stats:
        rec = bench.make_record(args.algo, g, f"file {args.input}", sol, st)
        if args.stats == "-":
            print(rec.to_json(), file=sys.stderr)
        else:
            Path(args.stats).write_text(rec.to_json() + "\n")
    return 0


def cmd_generate(args) -> int:
    try:
        g = generate_random(args.n, args.max_outdeg, args.weight_lo, args.weight_hi,
                            args.owner_ratio, args.seed)
    except InvalidRange as e:
        return _fail(e)
    head = generator_header(args.n, args.max_outdeg, args.weight_lo, args.weight_hi,
                            args.owner_ratio, args.seed)
    text = write_mpg(g, comment=head)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_convert(args) -> int:
    try:
        pg = parse_parity(Path(args.input).read_text(encoding="utf-8"))
        g = parity_to_mpg(pg)
    except (OSError, ParseError, GameError) as e:
        return _fail(e)
    text = write_mpg(g, comment=f"converted from parity file {args.input}")
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(args) -> int:
    try:
        g = _read_game(args.input)
    except (OSError, ParseError, GameError) as e:
        return _fail(e)
    if not args.solution:
        print(f"ok: n={g.n} m={g.m} W={g.W} S={g.S}")
        return 0
    try:
        mu, sigma = parse_measure(Path(args.solution).read_text(), g.n)
    except (OSError, ParseError) as e:
        return _fail(e)
    problems = []
    pm = is_progress_measure(g, mu)
    for v in pm.violators:
        problems.append(f"progress violated at {g.label(v)}")
    r = QDR(mu, {v: u for v, u in sigma.items() if mu[v] > 0})
    # positive MAX positions without a witness get their best successor;
    # a cycle failure may then be the fill-in's fault, not the measure's
    filled = []
    for v in g.positions():
        if g.owner[v] == 0 and mu[v] > 0 and v not in r.sigma:
            r.sigma[v] = max(g.succ[v], key=lambda u: (mu[u], -g.succ[v].index(u)))
            filled.append(v)
    try:
        rep = validate_qdr(g, r, deep=True)
    except SizeLimit:
        rep = validate_qdr(g, r)
    for viol in rep.violations:
        if viol.condition == "1a" and filled:
            names = " ".join(g.label(v) for v in filled[:10])
            print(f"note: 1a not confirmed, no witness given for {names}")
            continue
        where = "" if viol.position is None else f" at {g.label(viol.position)}"
        problems.append(f"{viol.condition}{where}: {viol.detail}")
    for p in problems:
        print(p)
    if problems:
        return 1
    print("ok")
    return 0


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in bench.ALGOS:
            return _fail(f"unknown algorithm {a}")
    if args.dir:
        if not Path(args.dir).is_dir():
            return _fail(f"{args.dir} is not a directory")
        instances = bench.dir_instances(args.dir)
    else:
        ks = [int(k) for k in args.ks.split(",")]
        degrees = [int(d) for d in args.degrees.split(",")]
        instances = bench.suite_instances(args.suite, n=args.n, degrees=degrees,
                                          count=args.count, ks=ks, seed0=args.seed)
    records = bench.run_bench(instances, algos, timeout=args.timeout, jobs=args.jobs)
    try:
        if args.csv:
            with open(args.csv, "w", newline="") as fh:
                bench.write_csv(records, fh)
        else:
            bench.write_csv(records, sys.stdout)
    except OSError as e:
        return _fail(e)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mpg", description="Mean-payoff game solver")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("solve", help="solve an MPG file")
    p.add_argument("--algo", choices=["qdpm", "brim", "oracle"], default="qdpm")
    p.add_argument("--input", required=True)
    p.add_argument("--threshold", type=int, default=0)
    p.add_argument("--stats", nargs="?", const="-", default=None,
                   help="write stats JSON to this path (stderr if no path)")
    p.add_argument("--trace")
    p.add_argument("--output")
    p.add_argument("--measure", help="also write the final measure here")
    p.add_argument("--schedule", choices=["worklist", "global"], default="worklist")
    p.add_argument("--timeout", type=float)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write a seeded random MPG")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-outdeg", type=int, default=10)
    p.add_argument("--weight-lo", type=int, default=-15000)
    p.add_argument("--weight-hi", type=int, default=15000)
    p.add_argument("--owner-ratio", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("convert", help="parity file to MPG")
    p.add_argument("--from", dest="src", choices=["parity"], default="parity")
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="validate a game and optionally a measure")
    p.add_argument("--input", required=True)
    p.add_argument("--solution")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="run algorithms over a suite")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--dir")
    src.add_argument("--suite", choices=["random", "fig1", "sim"])
    p.add_argument("--algos", default="qdpm,brim")
    p.add_argument("--timeout", type=float)
    p.add_argument("--csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--n", type=int, default=5000)
    p.add_argument("--degrees", default="10,20,40,80")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--ks", default="3,10,100,1000,10000")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
