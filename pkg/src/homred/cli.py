"""Command-line front end.

Exit codes: 0 = YES / pass, 1 = NO / fail, 2 = error.
"""
from __future__ import annotations

import argparse
import os
import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .campaign import DEFAULT_ORACLE_CEILING, run_campaign
from .coloring import ColorExhausted, ColoringParams, ParameterError, balanced_color, verify_balanced
from .graph import max_degree, square
from .grouping import GroupingError, build_grouping, singleton_grouping, verify_grouping
from .params import admissible_L_range, admissible_r_max, constants, theorem_params
from .reduction import InstanceTooLarge, compile_instance
from .solvers import BudgetExceeded, check_3coloring, check_list_hom, solve_3coloring, solve_hom, solve_list_hom

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


@dataclass
class RunConfig:
    seed: int = 0
    mode: str = "relaxed"
    trials: int = 0
    budget: Optional[int] = None
    input: Optional[Path] = None
    output: Optional[Path] = None


def oracle_ceiling() -> int:
    return int(os.environ.get("HOMRED_ORACLE_CEILING", DEFAULT_ORACLE_CEILING))


def _emit(obj: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        io.dump_json(obj, out)
        return

    def walk(d: dict, indent: str) -> None:
        for key, value in d.items():
            if isinstance(value, dict):
                out.write(f"{indent}{key}:\n")
                walk(value, indent + "  ")
            else:
                out.write(f"{indent}{key}: {value}\n")

    walk(obj, "")


def _write_or_print(obj: dict, path: Optional[Path]) -> None:
    if path is None:
        io.dump_json(obj, sys.stdout)
    else:
        with open(path, "w") as fp:
            io.dump_json(obj, fp)


def _coloring_params(args, g) -> ColoringParams:
    d = args.d if args.d is not None else max_degree(g)
    if args.mode == "paper":
        if args.L is None:
            raise CliError("paper mode needs --L (or use `reduce`, which derives L = lambda*r)")
        return ColoringParams.for_paper(d, args.L)
    L = args.L if args.L is not None else max(max_degree(square(g)) + 1, -(-g.n // 3), 1)
    return ColoringParams.relaxed(d, L, alpha=Fraction(args.alpha), beta=Fraction(args.beta), tau=Fraction(args.tau))


def cmd_gen(args) -> int:
    cfg = RunConfig(seed=args.seed, output=args.output)
    g = io.random_graph(args.n, args.max_degree, random.Random(cfg.seed))
    text = io.dumps_dimacs(g, f"random graph n={args.n} max_degree={args.max_degree} seed={cfg.seed}")
    if cfg.output is None:
        sys.stdout.write(text)
    else:
        cfg.output.write_text(text)
    return EXIT_YES


def cmd_color(args) -> int:
    g = io.read_graph(args.graph)
    params = _coloring_params(args, g)
    col = balanced_color(g, params)
    rep = verify_balanced(g, col)
    _write_or_print({"L": params.L, "mode": args.mode, "color": list(col.color),
                     "class_sizes": {str(k): v for k, v in col.class_sizes.items()},
                     "verified": rep.ok, "violations": [list(map(str, v)) for v in rep.violations]},
                    args.output)
    return EXIT_YES if rep.ok else EXIT_NO


def _grouping_for(args, g):
    if args.mode == "singleton":
        return singleton_grouping(g), 1
    r = args.r
    d = args.d if args.d is not None else max_degree(g)
    if args.mode == "paper":
        rmax = admissible_r_max(g.n, max(d, 1))
        if rmax == 0:
            raise CliError(f"no admissible r for n={g.n}, d={d} in paper mode (admissible_r_max = 0)")
        r = r if r is not None else rmax
        if r > rmax:
            raise CliError(f"r={r} exceeds admissible_r_max={rmax}")
        params = ColoringParams.for_paper(d, constants(d).lam * r)
    else:
        r = r if r is not None else 1
        params = _coloring_params(args, g)
    return build_grouping(g, r, params), r


def cmd_group(args) -> int:
    g = io.read_graph(args.graph)
    grp, r = _grouping_for(args, g)
    rep = verify_grouping(grp, r)
    obj = io.grouping_to_json(grp)
    obj.update({"r": r, "verified": rep.ok, "violations": [list(map(str, v)) for v in rep.violations]})
    _write_or_print(obj, args.output)
    return EXIT_YES if rep.ok else EXIT_NO


def cmd_reduce(args) -> int:
    start = time.perf_counter()
    g = io.read_graph(args.graph)
    grp, r = _grouping_for(args, g)
    rep = verify_grouping(grp, r)
    if not rep.ok:
        raise CliError(f"grouping failed verification: {rep.violations[:3]}")
    inst = compile_instance(g, grp)
    inst.meta.update({"mode": args.mode, "r": r, "L": grp.L, "seed": args.seed})
    report = inst.size_report(r)
    if args.timing:
        report["wall_time_s"] = round(time.perf_counter() - start, 4)
    if args.output is not None:
        io.write_instance(inst, args.output)
        report["instance"] = str(args.output)
    else:
        io.dump_json(io.instance_to_json(inst), sys.stdout)
    _emit(report, args.json, sys.stderr if args.output is None else sys.stdout)
    if not (report["g_prime_within_n_over_r"] and report["h_within_bound"]):
        raise CliError(f"size bound violated: {report}")
    return EXIT_YES


def _is_instance(path: Path) -> bool:
    with open(path) as fp:
        return fp.read(1) == "{"


def cmd_solve(args) -> int:
    budget = args.budget
    if args.problem == "3col":
        g = io.read_graph(args.file)
        col = solve_3coloring(g, budget)
        if col is None:
            print("NO")
            return EXIT_NO
        assert check_3coloring(g, col).ok
        print("YES")
        print(" ".join(map(str, col)))
        return EXIT_YES
    if args.problem == "hom":
        if args.target is None:
            raise CliError("hom needs --target H")
        g, h = io.read_graph(args.file), io.read_graph(args.target)
        m = solve_hom(g, h, budget)
        lists = None
    else:
        inst = io.read_instance(args.file)
        g, h, lists = inst.g_prime, inst.h, inst.lists
        m = solve_list_hom(g, h, lists, budget)
    if m is None:
        print("NO")
        return EXIT_NO
    assert check_list_hom(g, h, lists, m).ok
    print("YES")
    print(" ".join(str(x + 1) for x in m))
    return EXIT_YES


def cmd_verify(args) -> int:
    ceiling = oracle_ceiling()
    if args.n_max > ceiling:
        raise CliError(f"n_max={args.n_max} exceeds oracle ceiling {ceiling} (HOMRED_ORACLE_CEILING)")
    start = time.perf_counter()
    report = run_campaign(args.n_max, args.d, args.trials, args.seed, corrupt=args.corrupt_edge_rule)
    obj = report.as_dict()
    if args.timing:
        obj["wall_time_s"] = round(time.perf_counter() - start, 3)
    _emit(obj, args.json)
    return EXIT_YES if report.ok else EXIT_NO


def params_report(d: int, n: Optional[int], D: float, q: float, log2_h: Optional[float]) -> dict:
    k = constants(d, q=q, D=D)
    obj: dict = {"constants": k.as_dict()}
    if n is not None:
        rng = admissible_L_range(n, d)
        obj["admissible"] = {
            "n": n,
            "L_range": list(rng) if rng else None,
            "r_max": admissible_r_max(n, d),
            "paper_mode_infeasible": rng is None,
            "paper_grouping_infeasible": admissible_r_max(n, d) == 0,
        }
        if log2_h is not None:
            obj["theorem"] = theorem_params(n, D, q, log2_h).as_dict()
    return obj


def cmd_params(args) -> int:
    _emit(params_report(args.d, args.n, args.D, args.q, args.log2_h), args.json)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homred", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, modes=("paper", "relaxed")):
        sp.add_argument("--mode", choices=modes, default="relaxed")
        sp.add_argument("--d", type=int, help="degree bound (default: max degree of the input)")
        sp.add_argument("--L", type=int, help="number of colors")
        sp.add_argument("--alpha", default="4")
        sp.add_argument("--beta", default="4")
        sp.add_argument("--tau", default="3")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("-o", "--output", type=Path)

    sp = sub.add_parser("gen", help="random graph with bounded degree (DIMACS)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-degree", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", type=Path)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("color", help="balanced coloring of a graph")
    sp.add_argument("graph", type=Path)
    common(sp)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("group", help="grouping of a graph")
    sp.add_argument("graph", type=Path)
    sp.add_argument("--r", type=int)
    common(sp, ("paper", "relaxed", "singleton"))
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("reduce", help="compile 3-Coloring into a LIST-HOM instance")
    sp.add_argument("graph", type=Path)
    sp.add_argument("--r", type=int)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall time in the report")
    common(sp, ("paper", "relaxed", "singleton"))
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("solve", help="exact solver")
    sp.add_argument("file", type=Path)
    sp.add_argument("--problem", choices=("3col", "hom", "listhom"), default=None)
    sp.add_argument("--target", type=Path, help="target graph H for --problem hom")
    sp.add_argument("--budget", type=int)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="equisatisfiability campaign on random graphs")
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--d", type=int, default=4)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    sp.add_argument("--corrupt-edge-rule", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("params", help="hardness constants and admissible ranges")
    sp.add_argument("--d", type=int, default=4)
    sp.add_argument("--n", type=int)
    sp.add_argument("--D", type=float, default=1.0)
    sp.add_argument("--q", type=float, default=1.0)
    sp.add_argument("--log2-h", type=float)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_params)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "solve" and args.problem is None:
        args.problem = "listhom" if _is_instance(args.file) else "3col"
    try:
        return args.func(args)
    except (CliError, ParameterError, ColorExhausted, GroupingError, BudgetExceeded,
            InstanceTooLarge, io.FormatError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
