"""Exact solver for Maker-Breaker domination games.

Exit codes: 0 success, 1 verification/property failure, 2 usage or parse
error, 3 resource cap (order or time budget) exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence

from . import props as props_mod
from .constructions import FAMILIES, ParameterError, construct
from .game import GameVariant, Role
from .graph import GraphError, from_edge_list
from .solver import INF, BudgetExceeded, SolverError, SolveSpec, best_line, classify_outcome, solve_value
from .verify import THEOREMS, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
DEFAULT_MAX_N = 16
DEFAULT_BUDGET = 120.0
BUDGET_ENV = "MBDOM_BUDGET_SECS"


class CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def encode(value):
    """JSON-safe form: ``inf`` becomes the string ``"infinity"``."""
    if isinstance(value, float) and value == INF:
        return "infinity"
    if isinstance(value, dict):
        return {k: encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return value


def _dump(obj) -> str:
    return json.dumps(encode(obj))


def _budget(args) -> float | None:
    if args.budget_secs is not None:
        return args.budget_secs if args.budget_secs > 0 else None
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            val = float(env)
        except ValueError:
            raise CliError(EXIT_USAGE, f"{BUDGET_ENV} must be a number, got {env!r}") from None
        return val if val > 0 else None
    return DEFAULT_BUDGET


def _read_graph(args):
    try:
        if args.input in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(EXIT_USAGE, f"cannot read input: {exc}") from None
    try:
        g = from_edge_list(text)
    except GraphError as exc:
        raise CliError(EXIT_USAGE, f"parse error: {exc}") from None
    if g.n > args.max_n:
        raise CliError(EXIT_CAP, f"graph order {g.n} exceeds solve cap {args.max_n} (raise with --max-n)")
    return g


def _solve(g, spec, args):
    try:
        return solve_value(g, spec, threads=args.threads, budget_secs=_budget(args))
    except BudgetExceeded:
        raise CliError(EXIT_CAP, f"time budget of {_budget(args)} s exceeded") from None


def cmd_solve(args) -> int:
    g = _read_graph(args)
    spec = SolveSpec(GameVariant(args.game), Role(args.scored), Role(args.start))
    r = _solve(g, spec, args)
    out = {
        "game": spec.variant.value,
        "scored": spec.scored.value,
        "start": spec.starter.value,
        "value": r.value,
        "optimal_first_moves": list(r.optimal_first_moves),
        "nodes": r.stats.nodes,
        "millis": round(r.stats.elapsed * 1000, 3),
    }
    if args.line and r.value != INF and r.value != 0:
        out["line"] = [[role.value, v] for role, v in best_line(g, spec)]
    print(_dump(out))
    return EXIT_OK


def cmd_outcome(args) -> int:
    g = _read_graph(args)
    variant = GameVariant(args.game)
    d = _solve(g, SolveSpec(variant, Role.DOMINATOR, Role.DOMINATOR), args)
    s = _solve(g, SolveSpec(variant, Role.DOMINATOR, Role.STALLER), args)
    try:
        o = classify_outcome(d.value, s.value)
    except SolverError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(_dump({"game": variant.value, "outcome": o.value, "d_game": d.value, "s_game": s.value,
                 "nodes": d.stats.nodes + s.stats.nodes,
                 "millis": round((d.stats.elapsed + s.stats.elapsed) * 1000, 3)}))
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.family is None:
        raise CliError(EXIT_USAGE, "construct needs --family; one of " + ", ".join(FAMILIES))
    try:
        c = construct(args.family, k=args.k, l=args.l, n=args.n)
    except (ParameterError, GraphError) as exc:
        ranges = "; ".join(f"{name}: {valid}" for name, (_, _, valid) in FAMILIES.items())
        raise CliError(EXIT_USAGE, f"{exc}\nvalid ranges: {ranges}") from None
    sys.stdout.write(c.edge_list())
    return EXIT_OK


def _emit_report(report: dict, args, summary: list[str]) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(encode(report), fh, indent=2)
    if args.json:
        print(_dump(report))
    else:
        print("\n".join(summary))


def cmd_verify(args) -> int:
    if args.theorem not in THEOREMS:
        raise CliError(EXIT_USAGE, f"unknown theorem {args.theorem!r}; choose from {', '.join(THEOREMS)}")
    try:
        report = verify(args.theorem, args.max_k, args.max_l, args.stretch, threads=args.threads,
                        budget_secs=_budget(args), clique=args.n or 4)
    except BudgetExceeded:
        raise CliError(EXIT_CAP, f"time budget of {_budget(args)} s exceeded") from None
    except ParameterError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from None
    summary = []
    for inst in report.instances:
        flag = "PASS" if inst.passed else "FAIL"
        vals = ", ".join(f"{c.quantity}={encode(c.computed)}" + ("" if c.passed else f" (expected {encode(c.expected)})")
                         for c in inst.checks)
        summary.append(f"{flag} {inst.family}{inst.params} n={inst.n}: {vals} [{inst.millis:.1f} ms]")
    summary.append(f"theorem {report.theorem}: {'PASS' if report.passed else 'FAIL'}")
    _emit_report(report.to_dict(), args, summary)
    if not report.passed:
        for inst in report.instances:
            if not inst.passed:
                print(f"failing instance (replay: {inst.replay}):\n{inst.edge_list}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_props(args) -> int:
    if args.n_cap > 7:
        raise CliError(EXIT_USAGE, "--n-cap must be at most 7")
    report = props_mod.run_props(args.n_cap, args.samples, args.seed, args.oracle_max_n)
    data = report.to_dict()
    data.update({"n_cap": args.n_cap, "samples": args.samples, "seed": args.seed})
    summary = [f"{p}: {report.checks[p]} checks" for p in props_mod.PROPERTIES]
    summary.append(f"{report.graphs} graphs, {len(report.counterexamples)} counterexamples: "
                   f"{'PASS' if report.passed else 'FAIL'}")
    for ce in report.counterexamples[:5]:
        summary.append(f"counterexample [{ce['property']}] {ce['detail']}\n{ce['edge_list']}")
    _emit_report(data, args, summary)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="root-split workers (default 1)")
    common.add_argument("--budget-secs", type=float, default=None,
                        help=f"per-solve wall-clock budget; default ${BUDGET_ENV} or {DEFAULT_BUDGET:g}; 0 disables")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--input", default="-", help="edge-list file, or - for stdin")
    graph_in.add_argument("--game", choices=[v.value for v in GameVariant], default="mbtd")
    graph_in.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="refuse larger graphs (exit 3)")

    p = argparse.ArgumentParser(prog="mbdom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common, graph_in], help="game value for one variant, scored player and starter")
    s.add_argument("--scored", choices=[r.value for r in Role], default="dominator")
    s.add_argument("--start", choices=[r.value for r in Role], default="dominator")
    s.add_argument("--line", action="store_true", help="also print one optimal play")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("outcome", parents=[common, graph_in], help="outcome class D, S or N")
    o.set_defaults(func=cmd_outcome)

    c = sub.add_parser("construct", help="emit a construction as an edge list")
    c.add_argument("--family", choices=list(FAMILIES))
    c.add_argument("--k", type=int)
    c.add_argument("--l", type=int)
    c.add_argument("--n", type=int)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check a result's closed-form values on its instance grid")
    v.add_argument("--theorem", required=True)
    v.add_argument("--max-k", type=int)
    v.add_argument("--max-l", type=int)
    v.add_argument("--n", type=int, help="clique order for the 2.2 families (default 4)")
    v.add_argument("--stretch", action="store_true", help="include the larger stretch instances")
    v.add_argument("--out", help="also write the JSON report here")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("props", parents=[common], help="property suite over small graphs")
    pr.add_argument("--n-cap", type=int, default=6)
    pr.add_argument("--samples", type=int, default=200)
    pr.add_argument("--seed", type=int, default=42)
    pr.add_argument("--oracle-max-n", type=int, default=7)
    pr.add_argument("--out", help="also write the JSON report here")
    pr.set_defaults(func=cmd_props)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"mbdom: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
