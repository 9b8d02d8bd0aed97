"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from .decision import Decider, split_instance
from .geometry import ContractError, InputError, in_convex_position, smallest_enclosing_disk
from .instances import (
    KINDS,
    check_record,
    format_instance,
    generate,
    parse_xy_flag,
    read_instance,
    solution_record,
    to_json,
)
from .oracle import brute_contiguous, brute_restricted, brute_two_center
from .solver import solve_convex, solve_restricted
from .validation import check_group_width, check_radius


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _resolve_o(args, inst):
    if getattr(args, "o", None):
        return parse_xy_flag(args.o)
    return inst.o


def _mode(requested, pts, o):
    if requested != "auto":
        return requested
    if o is not None:
        return "restricted"
    if in_convex_position(pts):
        return "convex"
    raise InputError("cannot pick a mode: give o (directive or --o) or use convex-position input")


def _solve(pts, o, mode, g, bisect, threads=1):
    if mode == "restricted":
        if o is None:
            raise InputError("restricted mode needs an o directive or --o")
        return solve_restricted(pts, o, g=g, bisect=bisect, threads=threads)
    return solve_convex(pts, g=g, bisect=bisect)


def cmd_solve(args) -> int:
    inst = read_instance(args.file)
    pts, o = inst.points, _resolve_o(args, inst)
    mode = _mode(args.mode, pts, o)
    g = check_group_width(args.group_width)
    t0 = time.perf_counter()
    sol = _solve(pts, o, mode, g, args.bisect, args.threads)
    dt = time.perf_counter() - t0
    rec = solution_record(sol, pts, o if mode == "restricted" else None, mode, dt if args.timing else None)
    if args.verify:
        errs = check_record(rec, pts)
        if len(pts) <= args.verify_cap:
            ref = (brute_restricted(pts, o) if mode == "restricted" else brute_contiguous(pts)).radius
            rec["oracle_radius"] = ref
            if abs(ref - sol.radius) > 1e-9 * max(ref, 1e-300) and not sol.meta.get("o_enlarged"):
                errs.append(f"radius {sol.radius!r} differs from oracle {ref!r}")
        rec["verified"] = not errs
        if errs:
            print(to_json(rec))
            raise ContractError("; ".join(errs))
    print(to_json(rec))
    return 0


def cmd_decide(args) -> int:
    r = check_radius(args.r)
    inst = read_instance(args.file)
    pts, o = inst.points, _resolve_o(args, inst)
    if o is None:
        raise InputError("decide needs an o directive or --o")
    for k, p in enumerate(pts):
        if p == o:
            raise InputError(f"point {k} coincides with o")
    g = check_group_width(args.group_width)
    rec = {"r": r, "decision": "no"}
    for ax in ("x", "y"):
        d = Decider(split_instance(pts, o, ax), g)(r)
        if d:
            rec = {"r": r, "decision": "yes", "axis": ax, "i": d.i, "j": d.j}
            break
    print(to_json(rec))
    return 0


def cmd_gen(args) -> int:
    inst = generate(args.kind, args.n, args.seed, args.overlap)
    sys.stdout.write(format_instance(inst.points, inst.o))
    return 0


def cmd_oracle(args) -> int:
    inst = read_instance(args.file)
    pts, o = inst.points, _resolve_o(args, inst)
    if args.mode == "restricted":
        if o is None:
            raise InputError("restricted oracle needs an o directive or --o")
        res = brute_restricted(pts, o)
    elif args.mode == "convex":
        if not in_convex_position(pts):
            raise InputError("points are not in convex position")
        res = brute_contiguous(pts)
    else:
        res = brute_two_center(pts)
    rec = {
        "mode": args.mode,
        "n": len(pts),
        "radius": res.radius,
        "partition": list(res.partition),
        "enumeration_count": res.enumeration_count,
    }
    print(to_json(rec))
    return 0


def bench_decide(pts, o, g=16):
    """Wall time for one decision (trees built at the probe radius) near the
    optimum of the x-axis split, estimated from the single-disk bound."""
    inst = split_instance(pts, o, "x")
    r = 0.75 * smallest_enclosing_disk(pts).radius
    t0 = time.perf_counter()
    Decider(inst, g)(r)
    return time.perf_counter() - t0


def cmd_bench(args) -> int:
    sizes = [int(float(s)) for s in args.sizes.split(",") if s]
    ops = [s for s in args.ops.split(",") if s]
    for op in ops:
        if op not in ("decide", "solve"):
            raise InputError(f"unknown bench operation {op!r}")
    g = check_group_width(args.group_width)
    print(f"{'operation':<10} {'n':>8} {'reps':>5} {'median_s':>12}")
    for op in ops:
        for n in sizes:
            times = []
            for rep in range(args.reps):
                inst = generate(args.kind, n, args.seed + rep)
                o = inst.o if inst.o is not None else (0.0, 0.0)
                if op == "decide":
                    times.append(bench_decide(inst.points, o, g))
                else:
                    t0 = time.perf_counter()
                    mode = "convex" if args.kind == "convex" else "restricted"
                    _solve(inst.points, o, mode, g, args.bisect)
                    times.append(time.perf_counter() - t0)
            print(f"{op:<10} {n:>8} {args.reps:>5} {statistics.median(times):>12.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twocenter", description="Restricted and convex-position planar two-center solver.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def common(sp, needs_file=True):
        if needs_file:
            sp.add_argument("file", help="instance file (planar2center v1)")
        sp.add_argument("--o", help="restriction point X,Y (overrides the file directive)")
        sp.add_argument("--group-width", type=int, default=16, help="rows per group (default 16)")

    s = sub.add_parser("solve", help="solve an instance")
    common(s)
    s.add_argument("--mode", choices=("restricted", "convex", "auto"), default="auto")
    s.add_argument("--bisect", action="store_true", help="float bisection instead of candidate search")
    s.add_argument("--verify", action="store_true", help="re-check containment and compare with the oracle")
    s.add_argument("--verify-cap", type=int, default=25, help="largest n compared with the oracle")
    s.add_argument("--threads", type=int, default=1, help="run the two axis deciders concurrently")
    s.add_argument("--timing", action="store_true", help="include wall time in the record")
    s.set_defaults(func=cmd_solve)

    d = sub.add_parser("decide", help="is the optimum at most R?")
    common(d)
    d.add_argument("--r", type=float, required=True)
    d.set_defaults(func=cmd_decide)

    gp = sub.add_parser("gen", help="write a seeded random instance")
    gp.add_argument("kind", choices=KINDS)
    gp.add_argument("n", type=int)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--overlap", type=float, default=0.5, help="two-cluster overlap fraction in [0, 1]")
    gp.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="median wall time per operation and size")
    b.add_argument("--kind", choices=KINDS, default="two-cluster")
    b.add_argument("--sizes", default="1000,2000")
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--ops", default="decide,solve")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--group-width", type=int, default=16)
    b.add_argument("--bisect", action="store_true")
    b.set_defaults(func=cmd_bench)

    o = sub.add_parser("oracle", help="brute-force reference answer")
    common(o)
    o.add_argument("--mode", choices=("restricted", "convex", "two-center"), default="restricted")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ContractError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
