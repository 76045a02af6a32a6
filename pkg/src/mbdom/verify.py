"""Check the closed-form invariant values of the constructions on finite grids.

Grids are keyed by result id (``"2.1"`` ... ``"3.3"``).  Expected values come
from formulas such as ``gamma_MBT(G_l) = 2l`` evaluated per grid point, so
nothing is tabulated by hand.
"""

from __future__ import annotations

import math
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field

from .constructions import Construction, construct
from .domination import domination_number, find_pairing_total_dominating_set, total_domination_number
from .game import GameVariant, Role
from .solver import SolveSpec, solve_value

D, S = Role.DOMINATOR, Role.STALLER
QUANTITIES: dict[str, SolveSpec] = {
    "gamma_MB": SolveSpec(GameVariant.MBD, D, D),
    "gamma_MB'": SolveSpec(GameVariant.MBD, D, S),
    "gamma_MBT": SolveSpec(GameVariant.MBTD, D, D),
    "gamma_MBT'": SolveSpec(GameVariant.MBTD, D, S),
}


class UnknownTheorem(KeyError):
    pass


@dataclass
class Instance:
    family: str
    params: dict[str, int]
    expected: dict[str, object]
    stretch: bool = False


@dataclass
class Check:
    quantity: str
    expected: object
    computed: object
    passed: bool


@dataclass
class InstanceResult:
    family: str
    params: dict[str, int]
    n: int
    checks: list[Check]
    nodes: int
    millis: float
    passed: bool
    edge_list: str
    replay: str


@dataclass
class VerificationReport:
    theorem: str
    grid: dict[str, object]
    instances: list[InstanceResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.instances)

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem, "grid": self.grid, "pass": self.passed}
        out["instances"] = [asdict(r) for r in self.instances]
        return out


def _thm21(max_k: int | None, max_l: int | None, stretch: bool, **_: int) -> list[Instance]:
    L = max_l or 3
    grid = []
    for l in range(1, L + 1):
        n = 4 * l
        grid.append(Instance("Gl", {"l": l}, {
            "gamma_t": 2 * l, "gamma_MBT": 2 * l, "gamma_MBT'": 2 * l,
            "ceil(n/2)": 2 * l, "floor(n/2)": 2 * l, "n": n}))
    for l in range(1, L):
        grid.append(Instance("GlPrime", {"l": l}, {
            "gamma_t": 2 * l + 1, "gamma_MBT": 2 * l + 1, "ceil(n/2)": 2 * l + 1, "n": 4 * l + 2}))
    for l in range(1, L):
        grid.append(Instance("GlDoublePrime", {"l": l}, {
            "gamma_MBT'": 2 * l + 1, "floor(n/2)": 2 * l + 1, "n": 4 * l + 3}))
    return grid


def _thm22(max_k: int | None, max_l: int | None, stretch: bool, clique: int = 4) -> list[Instance]:
    K = max_k or 3
    grid = []
    for k in range(2, K + 1):
        grid.append(Instance("Gkn", {"k": k, "n": clique}, {
            "gamma": k, "gamma_t": k, "gamma_MB": k, "gamma_MBT": k, "n": k * clique + 1}))
    for k in range(2, K + 1):
        # H_{3,4} has 14 vertices: run it only on request
        big = k * clique + 2 > 13
        grid.append(Instance("Hkn", {"k": k, "n": clique}, {
            "gamma": k, "gamma_t": k, "gamma_MB'": k, "gamma_MBT'": k,
            "pairing": k, "n": k * clique + 2}, stretch=big))
    return grid


def _thm31(max_k: int | None, max_l: int | None, stretch: bool, **_: int) -> list[Instance]:
    L = max_l or 5
    grid = [Instance("Cycle", {"n": 4}, {"gamma": 2, "gamma_MB": 2, "gamma_MBT": 2})]
    for l in range(3, L + 1):
        grid.append(Instance("G2l", {"l": l}, {"gamma_MB": 2, "gamma_MBT": l, "n": 3 * l - 1}))
    K = max_k or 3
    for k in range(3, K + 1):
        for l in range(k, min(L, 3) + 1):
            grid.append(Instance("Gkl", {"k": k, "l": l}, {"gamma_MB": k, "gamma_MBT": l, "n": 3 * (k + l - 2) + 2}))
    return grid


def _thm32(max_k: int | None, max_l: int | None, stretch: bool, **_: int) -> list[Instance]:
    L = max_l or 4
    grid = [Instance("Cycle", {"n": 4}, {"gamma_MB'": 2, "gamma_MBT'": 2})]
    for l in range(3, L + 1):
        grid.append(Instance("H2l", {"l": l}, {"gamma_MB'": 2, "gamma_MBT'": l, "n": 3 * l}))
    K = max_k or 3
    for k in range(3, K + 1):
        for l in range(k, min(L, 3) + 1):
            grid.append(Instance("Hkl", {"k": k, "l": l}, {"gamma_MB'": k, "gamma_MBT'": l,
                                                           "n": 3 * (k + l - 2) + 3}, stretch=True))
    return grid


def _thm33(max_k: int | None, max_l: int | None, stretch: bool, **_: int) -> list[Instance]:
    K, L = max_k or 3, max_l or 3
    grid = []
    for k in range(2, K + 1):
        for l in range(k, L + 1):
            grid.append(Instance("Fkl", {"k": k, "l": l}, {"gamma_MBT": k, "gamma_MBT'": l, "n": 3 * (k + l - 2) + 2}))
    return grid


THEOREMS: dict[str, Callable[..., list[Instance]]] = {
    "2.1": _thm21,
    "2.2": _thm22,
    "3.1": _thm31,
    "3.2": _thm32,
    "3.3": _thm33,
}


def grid_for(theorem: str, max_k: int | None = None, max_l: int | None = None,
             stretch: bool = False, clique: int = 4) -> list[Instance]:
    if theorem not in THEOREMS:
        raise UnknownTheorem(theorem)
    grid = THEOREMS[theorem](max_k, max_l, stretch, clique=clique)
    grid = [i for i in grid if stretch or not i.stretch]
    return sorted(grid, key=lambda i: (i.family, sorted(i.params.items())))


def _replay(c: Construction) -> str:
    flags = " ".join(f"--{k} {v}" for k, v in c.params.items())
    return f"mbdom construct --family {c.family} {flags}"


def run_instance(inst: Instance, threads: int = 1, budget_secs: float | None = None) -> InstanceResult:
    c = construct(inst.family, **inst.params)
    g = c.graph
    t0 = time.perf_counter()
    nodes = 0
    checks = []
    for quantity, expected in inst.expected.items():
        if quantity in QUANTITIES:
            r = solve_value(g, QUANTITIES[quantity], threads=threads, budget_secs=budget_secs)
            nodes += r.stats.nodes
            computed = r.value
        elif quantity == "gamma":
            computed = domination_number(g)
        elif quantity == "gamma_t":
            computed = total_domination_number(g)
        elif quantity == "pairing":
            found = find_pairing_total_dominating_set(g, expected)
            computed = expected if found is not None else None
        elif quantity == "n":
            computed = g.n
        elif quantity == "ceil(n/2)":
            computed = math.ceil(g.n / 2)
        elif quantity == "floor(n/2)":
            computed = g.n // 2
        else:  # pragma: no cover
            raise KeyError(quantity)
        checks.append(Check(quantity, expected, computed, computed == expected))
    millis = (time.perf_counter() - t0) * 1000
    return InstanceResult(c.family, dict(c.params), g.n, checks, nodes, round(millis, 3),
                          all(ch.passed for ch in checks), c.edge_list(), _replay(c))


def verify(theorem: str, max_k: int | None = None, max_l: int | None = None, stretch: bool = False,
           threads: int = 1, budget_secs: float | None = None, clique: int = 4) -> VerificationReport:
    grid = grid_for(theorem, max_k, max_l, stretch, clique)
    report = VerificationReport(theorem, {"max_k": max_k, "max_l": max_l, "stretch": stretch, "clique": clique,
                                          "instances": [f"{i.family}{i.params}" for i in grid]})
    for inst in grid:
        report.instances.append(run_instance(inst, threads, budget_secs))
    return report
