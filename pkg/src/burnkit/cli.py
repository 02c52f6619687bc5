"""Command-line entry point.

One operation per invocation, line-oriented file formats, and stable
exit codes so pipelines can script every workflow: 0 success, 1 a
verification or extraction failure (including unsolvable instances
when a witness was requested), 2 malformed input, 3 search budget
exhausted.  BURN_BUDGET in the environment overrides the default
search budget; an explicit --budget flag overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .burning import (
    greedy_burn,
    read_schedule,
    simulate,
    verify_schedule,
    write_schedule,
)
from .errors import (
    BudgetExceededError,
    ExtractionError,
    InputError,
    ScheduleError,
)
from .exact import DEFAULT_NODE_BUDGET, exact_burning_number
from .graph import (
    build_grid,
    build_interval_graph,
    build_path,
    build_path_forest,
    build_permutation_graph,
    read_graph,
    read_intervals,
    write_graph,
    write_intervals,
)
from .grid import GridSpec, burn_grid_2approx
from .interval_reduction import (
    construct_ig,
    partition_to_schedule,
    schedule_to_partition,
)
from .partition import (
    read_instance,
    solve_3partition,
    verify_partition,
    write_instance,
)
from .permutation_reduction import (
    construct_px,
    partition_to_schedule_pg,
    read_permutation,
    schedule_to_partition_pg,
    write_permutation,
)

OK, FAILED, MALFORMED, EXHAUSTED = 0, 1, 2, 3

WORKED_EXAMPLE = (10, 11, 12, 14, 15, 16)


def _budget(args: argparse.Namespace) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("BURN_BUDGET")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"BURN_BUDGET must be an integer, got {env!r}")
    return DEFAULT_NODE_BUDGET


def _emit(args: argparse.Namespace, payload: dict, text: list[str]) -> None:
    if getattr(args, "report", "text") == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text:
            print(line)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


# --- gen ------------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "path":
        g = build_path(args.n)
    elif args.family == "grid":
        g = build_grid(args.rows, args.cols)
    elif args.family == "forest":
        lengths = list(args.lengths or ())
        if args.random:
            rng = random.Random(args.seed)
            lengths.extend(
                rng.randint(1, args.max_len) for _ in range(args.random)
            )
        g = build_path_forest(lengths)
    elif args.family == "pg":
        perm = read_permutation(_read(args.perm))
        g = build_permutation_graph(len(perm), perm)
    else:
        g = build_interval_graph(read_intervals(_read(args.intervals)))
    _write(args.out, write_graph(g))
    print(f"wrote graph with {g.n} vertices and {g.m} edges to {args.out}")
    return OK


# --- verify / greedy / exact ------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(_read(args.graph))
    sched = read_schedule(_read(args.schedule))
    complete = verify_schedule(g, sched)
    outcome = simulate(g, sched)
    assert outcome.complete == complete
    payload = {"complete": complete, "rounds": outcome.rounds_used}
    _emit(args, payload, [
        f"schedule is valid and {'complete' if complete else 'incomplete'}",
        f"rounds = {outcome.rounds_used}",
    ])
    return OK if complete else FAILED


def _cmd_greedy(args: argparse.Namespace) -> int:
    g = read_graph(_read(args.graph))
    sched = greedy_burn(g)
    outcome = simulate(g, sched)
    assert outcome.complete
    if args.out:
        _write(args.out, write_schedule(sched))
    payload = {"rounds": len(sched), "schedule": list(sched)}
    _emit(args, payload, [
        f"rounds = {len(sched)}",
        "schedule = " + " ".join(str(v) for v in sched),
    ])
    return OK


def _cmd_exact(args: argparse.Namespace) -> int:
    g = read_graph(_read(args.graph))
    result = exact_burning_number(g, node_budget=_budget(args))
    if args.out:
        _write(args.out, write_schedule(result.witness))
    payload = {
        "k": result.k,
        "schedule": list(result.witness),
        "nodes_explored": result.nodes_explored,
    }
    _emit(args, payload, [
        f"k = {result.k}",
        "schedule = " + " ".join(str(v) for v in result.witness),
    ])
    return OK


# --- grid -------------------------------------------------------------------


def _grid_payload(report) -> dict:
    return {
        "rows": report.grid.rows,
        "cols": report.grid.cols,
        "rounds": report.rounds_used,
        "lower_bound": report.lower_bound,
        "upper_bound": report.upper_bound,
        "ratio": report.ratio,
        "schedule": list(report.schedule),
    }


def _grid_report_for(side: int):
    return burn_grid_2approx(GridSpec(side, side))


def _cmd_grid(args: argparse.Namespace) -> int:
    if args.sweep:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_grid_report_for, args.sweep))
        for report in reports:
            payload = _grid_payload(report)
            del payload["schedule"]
            if args.report == "json":
                print(json.dumps(payload, sort_keys=True))
            else:
                print(
                    f"{report.grid.rows}x{report.grid.cols}: "
                    f"rounds={report.rounds_used} "
                    f"lower={report.lower_bound} "
                    f"upper={report.upper_bound} "
                    f"ratio={report.ratio:.4f}"
                )
        return OK
    if args.rows is None or args.cols is None:
        raise InputError("grid needs --rows and --cols (or --sweep)")
    report = burn_grid_2approx(GridSpec(args.rows, args.cols))
    if args.out:
        _write(args.out, write_schedule(report.schedule))
    upper = report.upper_bound
    _emit(args, _grid_payload(report), [
        f"rounds = {report.rounds_used}",
        f"lower_bound = {report.lower_bound}",
        f"upper_bound = {'-' if upper is None else upper}",
        f"ratio = {report.ratio:.4f}",
    ])
    return OK


# --- 3-partition and the reductions ----------------------------------------


def _cmd_3part(args: argparse.Namespace) -> int:
    inst = read_instance(_read(args.infile))
    partition = solve_3partition(inst, node_budget=_budget(args))
    if partition is None:
        _emit(args, {"solvable": False, "triples": None},
              ["no distinct 3-partition exists"])
        return FAILED
    assert verify_partition(inst, partition)
    payload = {
        "solvable": True,
        "triples": [list(t) for t in partition.triples],
    }
    _emit(args, payload, [
        "triples = " + "; ".join(
            " ".join(str(a) for a in t) for t in partition.triples
        ),
    ])
    return OK


def _cmd_reduce_ig(args: argparse.Namespace) -> int:
    inst = read_instance(_read(args.infile))
    art = construct_ig(inst)
    if args.emit_graph:
        _write(args.emit_graph, write_graph(art.graph))
    if args.emit_intervals:
        _write(args.emit_intervals, write_intervals(art.representation))
    lines = [
        f"m = {art.derived.m}",
        f"vertices = {art.graph.n}",
        f"target rounds = {art.target_rounds}",
    ]
    payload = {
        "m": art.derived.m,
        "vertices": art.graph.n,
        "target_rounds": art.target_rounds,
        "witness": None,
    }
    if args.witness:
        partition = solve_3partition(inst, node_budget=_budget(args))
        if partition is None:
            _emit(args, payload, lines)
            print("instance has no solution, no witness written",
                  file=sys.stderr)
            return FAILED
        sched = partition_to_schedule(art, partition)
        _write(args.witness, write_schedule(sched))
        payload["witness"] = list(sched)
        lines.append(f"witness of {len(sched)} rounds written to "
                     f"{args.witness}")
    _emit(args, payload, lines)
    return OK


def _cmd_extract_ig(args: argparse.Namespace) -> int:
    inst = read_instance(_read(args.artifact))
    art = construct_ig(inst)
    sched = read_schedule(_read(args.schedule))
    partition = schedule_to_partition(art, sched)
    assert verify_partition(inst, partition)
    payload = {"triples": [list(t) for t in partition.triples]}
    _emit(args, payload, [
        "triples = " + "; ".join(
            " ".join(str(a) for a in t) for t in partition.triples
        ),
    ])
    return OK


def _cmd_reduce_pg(args: argparse.Namespace) -> int:
    inst = read_instance(_read(args.infile))
    art = construct_px(inst)
    if args.emit_graph:
        _write(args.emit_graph, write_graph(art.graph))
    if args.emit_perm:
        _write(args.emit_perm, write_permutation(art.permutation))
    lines = [
        f"m = {art.derived.m}",
        f"vertices = {art.graph.n}",
        f"components = {len(art.segments)}",
        f"target rounds = {art.target_rounds}",
    ]
    payload = {
        "m": art.derived.m,
        "vertices": art.graph.n,
        "components": len(art.segments),
        "target_rounds": art.target_rounds,
        "witness": None,
    }
    if args.witness:
        partition = solve_3partition(inst, node_budget=_budget(args))
        if partition is None:
            _emit(args, payload, lines)
            print("instance has no solution, no witness written",
                  file=sys.stderr)
            return FAILED
        sched = partition_to_schedule_pg(art, partition)
        _write(args.witness, write_schedule(sched))
        payload["witness"] = list(sched)
        lines.append(f"witness of {len(sched)} rounds written to "
                     f"{args.witness}")
    _emit(args, payload, lines)
    return OK


def _cmd_extract_pg(args: argparse.Namespace) -> int:
    inst = read_instance(_read(args.artifact))
    art = construct_px(inst)
    sched = read_schedule(_read(args.schedule))
    partition = schedule_to_partition_pg(art, sched)
    assert verify_partition(inst, partition)
    payload = {"triples": [list(t) for t in partition.triples]}
    _emit(args, payload, [
        "triples = " + "; ".join(
            " ".join(str(a) for a in t) for t in partition.triples
        ),
    ])
    return OK


# --- demos ------------------------------------------------------------------


def _demo_interval() -> int:
    inst = read_instance(" ".join(str(a) for a in WORKED_EXAMPLE))
    print("instance:", " ".join(str(a) for a in inst.elements))
    partition = solve_3partition(inst)
    assert partition is not None
    print("solution:", "; ".join(
        " ".join(str(a) for a in t) for t in partition.triples
    ))
    art = construct_ig(inst)
    print(f"interval gadget: {art.graph.n} vertices, "
          f"spine {art.spine_len}, decides at {art.target_rounds} rounds")
    sched = partition_to_schedule(art, partition)
    outcome = simulate(art.graph, sched)
    assert outcome.complete and outcome.rounds_used == art.target_rounds
    print(f"schedule burns everything in {outcome.rounds_used} rounds")
    back = schedule_to_partition(art, sched)
    assert verify_partition(inst, back)
    print("extracted partition matches:", "; ".join(
        " ".join(str(a) for a in t) for t in back.triples
    ))
    return OK


def _demo_permutation() -> int:
    inst = read_instance(" ".join(str(a) for a in WORKED_EXAMPLE))
    print("instance:", " ".join(str(a) for a in inst.elements))
    partition = solve_3partition(inst)
    assert partition is not None
    art = construct_px(inst)
    orders = " ".join(str(seg.size) for seg in art.segments)
    print(f"path forest gadget: {art.graph.n} vertices, "
          f"component orders {orders}")
    sched = partition_to_schedule_pg(art, partition)
    outcome = simulate(art.graph, sched)
    assert outcome.complete and outcome.rounds_used == art.target_rounds
    print(f"schedule burns everything in {outcome.rounds_used} rounds")
    result = exact_burning_number(art.graph)
    assert result.k == art.target_rounds
    print(f"exact search agrees: burning number = {result.k}")
    back = schedule_to_partition_pg(art, sched)
    assert verify_partition(inst, back)
    print("extracted partition matches:", "; ".join(
        " ".join(str(a) for a in t) for t in back.triples
    ))
    return OK


_DEMOS = {"s5.2": _demo_interval, "s6.3": _demo_permutation}


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burn",
        description="graph burning toolkit",
    )
    parser.add_argument(
        "--demo",
        choices=sorted(_DEMOS),
        help="run a built-in end-to-end example and exit",
    )
    sub = parser.add_subparsers(dest="command")

    gen = sub.add_parser("gen", help="write a graph file")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    g_path = gen_sub.add_parser("path")
    g_path.add_argument("--n", type=int, required=True)
    g_grid = gen_sub.add_parser("grid")
    g_grid.add_argument("--rows", type=int, required=True)
    g_grid.add_argument("--cols", type=int, required=True)
    g_forest = gen_sub.add_parser("forest")
    g_forest.add_argument("--lengths", type=int, nargs="*")
    g_forest.add_argument("--random", type=int, default=0,
                          help="append this many random lengths")
    g_forest.add_argument("--seed", type=int, default=0)
    g_forest.add_argument("--max-len", type=int, default=12)
    g_pg = gen_sub.add_parser("pg")
    g_pg.add_argument("--perm", required=True)
    g_ig = gen_sub.add_parser("ig")
    g_ig.add_argument("--intervals", required=True)
    for p in (g_path, g_grid, g_forest, g_pg, g_ig):
        p.add_argument("--out", required=True)
        p.set_defaults(func=_cmd_gen)

    verify = sub.add_parser("verify", help="check a schedule against a graph")
    verify.add_argument("--graph", required=True)
    verify.add_argument("--schedule", required=True)
    verify.set_defaults(func=_cmd_verify)

    greedy = sub.add_parser("greedy", help="fast complete schedule")
    greedy.add_argument("--graph", required=True)
    greedy.add_argument("--out")
    greedy.set_defaults(func=_cmd_greedy)

    exact = sub.add_parser("exact", help="exact burning number with witness")
    exact.add_argument("--graph", required=True)
    exact.add_argument("--budget", type=int)
    exact.add_argument("--out")
    exact.set_defaults(func=_cmd_exact)

    grid = sub.add_parser("grid", help="heuristic burner with bounds")
    grid.add_argument("--rows", type=int)
    grid.add_argument("--cols", type=int)
    grid.add_argument("--sweep", type=int, nargs="+",
                      help="square sides to burn, in order")
    grid.add_argument("--jobs", type=int, default=None)
    grid.add_argument("--out")
    grid.set_defaults(func=_cmd_grid)

    part = sub.add_parser("3part", help="solve a distinct 3-partition")
    part.add_argument("--in", dest="infile", required=True)
    part.add_argument("--budget", type=int)
    part.set_defaults(func=_cmd_3part)

    rig = sub.add_parser("reduce-ig", help="instance to interval gadget")
    rig.add_argument("--in", dest="infile", required=True)
    rig.add_argument("--emit-graph")
    rig.add_argument("--emit-intervals")
    rig.add_argument("--witness")
    rig.add_argument("--budget", type=int)
    rig.set_defaults(func=_cmd_reduce_ig)

    xig = sub.add_parser("extract-ig",
                         help="schedule on the interval gadget to triples")
    xig.add_argument("--artifact", required=True,
                     help="instance file the gadget was built from")
    xig.add_argument("--schedule", required=True)
    xig.set_defaults(func=_cmd_extract_ig)

    rpg = sub.add_parser("reduce-pg", help="instance to permutation gadget")
    rpg.add_argument("--in", dest="infile", required=True)
    rpg.add_argument("--emit-graph")
    rpg.add_argument("--emit-perm")
    rpg.add_argument("--witness")
    rpg.add_argument("--budget", type=int)
    rpg.set_defaults(func=_cmd_reduce_pg)

    xpg = sub.add_parser("extract-pg",
                         help="schedule on the permutation gadget to triples")
    xpg.add_argument("--artifact", required=True,
                     help="instance file the gadget was built from")
    xpg.add_argument("--schedule", required=True)
    xpg.set_defaults(func=_cmd_extract_pg)

    for p in (verify, greedy, exact, grid, part, rig, xig, rpg, xpg):
        p.add_argument("--report", choices=("text", "json"), default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.demo:
            return _DEMOS[args.demo]()
        if not getattr(args, "command", None):
            parser.print_usage(sys.stderr)
            return MALFORMED
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXHAUSTED
    except (ScheduleError, ExtractionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
