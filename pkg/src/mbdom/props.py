"""Property checks over every small connected graph plus seeded random graphs."""

from __future__ import annotations

import math
import random
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field

import networkx as nx

from . import solver
from .domination import domination_number, find_pairing_total_dominating_set, total_domination_number
from .game import GameVariant, Role
from .graph import Graph, is_connected, to_edge_list
from .solver import INF, SolveSpec, SolverError

D, S = Role.DOMINATOR, Role.STALLER
SPECS = {
    "gamma_MB": SolveSpec(GameVariant.MBD, D, D),
    "gamma_MB'": SolveSpec(GameVariant.MBD, D, S),
    "gamma_SMB": SolveSpec(GameVariant.MBD, S, D),
    "gamma_SMB'": SolveSpec(GameVariant.MBD, S, S),
    "gamma_MBT": SolveSpec(GameVariant.MBTD, D, D),
    "gamma_MBT'": SolveSpec(GameVariant.MBTD, D, S),
}
PROPERTIES = ("chain", "mbd_chain", "upper_bounds", "outcome", "oracle", "edge_monotone", "pairing_bound")


def connected_graphs(max_n: int) -> Iterator[Graph]:
    """All connected graphs up to isomorphism with ``1 <= n <= max_n`` (``max_n <= 7``)."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    for i, h in enumerate(nx.graph_atlas_g()):
        n = h.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(h):
            yield Graph.from_edges(n, sorted(tuple(sorted(e)) for e in h.edges()), f"atlas{i}")


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """Random spanning tree plus each remaining pair with a random density."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    p = rng.uniform(0.1, 0.7)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@dataclass
class PropsReport:
    graphs: int = 0
    checks: Counter = field(default_factory=Counter)
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "checks": {p: self.checks[p] for p in PROPERTIES},
            "counterexamples": self.counterexamples,
            "pass": self.passed,
        }


def _le(a: float, b: float) -> bool:
    return a <= b


def check_graph(g: Graph, rng: random.Random, report: PropsReport, oracle_max_n: int,
                all_non_edges: bool = False, origin: str = "") -> None:
    vals = {name: solver.solve(g, spec.variant, spec.scored, spec.starter) for name, spec in SPECS.items()}
    gamma, gamma_t = domination_number(g), total_domination_number(g)
    mbt, mbt_p = vals["gamma_MBT"], vals["gamma_MBT'"]
    mb, mb_p = vals["gamma_MB"], vals["gamma_MB'"]

    def fail(prop: str, detail: str) -> None:
        report.counterexamples.append({
            "property": prop, "detail": detail, "origin": origin,
            "edge_list": to_edge_list(g),
            "values": {k: ("infinity" if v == INF else v) for k, v in vals.items()},
        })

    def check(prop: str, ok: bool, detail: str) -> None:
        report.checks[prop] += 1
        if not ok:
            fail(prop, detail)

    check("chain", _le(max(gamma_t, mb), mbt) and _le(mbt, mbt_p),
          f"max(gamma_t={gamma_t}, gamma_MB={mb}) <= gamma_MBT={mbt} <= gamma_MBT'={mbt_p}")
    check("mbd_chain", _le(gamma, mb) and _le(mb, mb_p), f"gamma={gamma} <= gamma_MB={mb} <= gamma_MB'={mb_p}")
    check("upper_bounds", (mbt == INF or mbt <= math.ceil(g.n / 2)) and (mbt_p == INF or mbt_p <= g.n // 2),
          f"n={g.n}: gamma_MBT={mbt}, gamma_MBT'={mbt_p}")
    ok = True
    for a, b in ((mbt, mbt_p), (mb, mb_p)):
        try:
            solver.classify_outcome(a, b)
        except SolverError:
            ok = False
    check("outcome", ok, "Dominator wins the S-game but loses the D-game")
    if g.n <= oracle_max_n:
        bad = [name for name, spec in SPECS.items() if solver.naive_value(g, spec) != vals[name]]
        check("oracle", not bad, f"solver disagrees with the naive oracle on {bad}")
    non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if non_edges:
        picks = non_edges if all_non_edges else [rng.choice(non_edges)]
        for u, v in picks:
            bigger = solver.solve(g.add_edge(u, v), GameVariant.MBTD)
            check("edge_monotone", _le(bigger, mbt), f"adding edge {u} {v}: gamma_MBT {mbt} -> {bigger}")
    for k in range(1, g.n // 2 + 1):
        if find_pairing_total_dominating_set(g, k) is not None:
            check("pairing_bound", _le(mbt_p, k), f"{k}-pairing exists but gamma_MBT'={mbt_p}")
            break


def run_props(n_cap: int = 6, samples: int = 200, seed: int = 42, oracle_max_n: int = 7) -> PropsReport:
    """Exhaustive pass over connected graphs with ``n <= n_cap``, then
    ``samples`` random connected graphs with ``n`` in ``{n_cap+1, n_cap+2}``."""
    rng = random.Random(seed)
    report = PropsReport()
    for g in connected_graphs(min(n_cap, 7)):
        report.graphs += 1
        check_graph(g, rng, report, oracle_max_n, all_non_edges=True, origin=g.name)
    for i in range(samples):
        n = n_cap + 1 + (i % 2)
        g = random_connected_graph(n, rng)
        assert is_connected(g)
        report.graphs += 1
        check_graph(g, rng, report, oracle_max_n, origin=f"seed={seed} sample={i}")
    return report
