"""Exact optimal-play values of the Maker-Breaker (total) domination games.

The value of a position is the number of moves the *scored* player still
needs to win when both sides play optimally: the scored player minimises it
and the opponent maximises it, with ``inf`` ("cannot win") absorbing.

======================  ===========  ===========  ===========
invariant               variant      scored       starter
======================  ===========  ===========  ===========
gamma_MB / gamma_MB'    MBD          Dominator    D / S
gamma_SMB / gamma_SMB'  MBD          Staller      D / S
gamma_MBT / gamma_MBT'  MBTD         Dominator    D / S
======================  ===========  ===========  ===========
"""

from __future__ import annotations

import enum
import math
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .game import (
    GameState,
    GameVariant,
    Role,
    apply_move,
    dominator_has_won,
    legal_moves,
    new_game,
    staller_has_won,
    winning_masks,
)
from .graph import Graph, VertexSet

INF = math.inf
DEFAULT_TABLE_CAP = 1 << 26
ORACLE_CAP = 8

GameValue = int | float


class BudgetExceeded(RuntimeError):
    pass


class SolverError(RuntimeError):
    pass


class NoLineError(SolverError):
    pass


class Outcome(str, enum.Enum):
    D = "D"
    S = "S"
    N = "N"


@dataclass(frozen=True)
class SolveSpec:
    variant: GameVariant
    scored: Role = Role.DOMINATOR
    starter: Role = Role.DOMINATOR

    def __post_init__(self) -> None:
        object.__setattr__(self, "variant", GameVariant(self.variant))
        object.__setattr__(self, "scored", Role(self.scored))
        object.__setattr__(self, "starter", Role(self.starter))


@dataclass
class SolveStats:
    nodes: int = 0
    table_hits: int = 0
    elapsed: float = 0.0


@dataclass
class SolveResult:
    value: GameValue
    optimal_first_moves: VertexSet
    stats: SolveStats = field(default_factory=SolveStats)


def _from_kernel(v: int) -> GameValue:
    return INF if v >= K.INF else int(v)


class _Search:
    """Kernel inputs and transposition table for one (graph, spec) pair."""

    def __init__(self, g: Graph, spec: SolveSpec, table_cap: int = DEFAULT_TABLE_CAP) -> None:
        if g.n > K.MAX_KERNEL_ORDER:
            raise SolverError(f"solver supports at most {K.MAX_KERNEL_ORDER} vertices, got {g.n}")
        self.g = g
        self.spec = spec
        self.masks = np.array(winning_masks(g, spec.variant), dtype=np.int64)
        self.pow3 = np.array([3**i for i in range(g.n)], dtype=np.int64)
        self.full = g.full_mask
        self.scored_is_dom = spec.scored is Role.DOMINATOR
        states = 3**g.n
        self.perfect = states <= table_cap
        if self.perfect:
            self.table8 = np.full(states, K.EMPTY, dtype=np.int8)
            self.table64 = np.zeros(1, dtype=np.int64)
            self.tmask = 0
        else:
            size = 1 << min(table_cap.bit_length() - 1, (states - 1).bit_length())
            self.table8 = np.zeros(1, dtype=np.int8)
            self.table64 = np.full(size, K.EMPTY, dtype=np.int64)
            self.tmask = size - 1
        self.abort = np.zeros(1, dtype=np.int64)
        self.stats = np.zeros(2, dtype=np.int64)
        self._stats_lock = threading.Lock()

    def code(self, st: GameState) -> int:
        return sum(int(self.pow3[v]) for v in st.claimed_d) + sum(2 * int(self.pow3[v]) for v in st.claimed_s)

    def children(self, st: GameState, moves: list[int], threads: int = 1) -> list[GameValue]:
        d, s = st.claimed_d.bits, st.claimed_s.bits
        dom = st.to_move is Role.DOMINATOR
        code = self.code(st)
        chunks = [moves[i::threads] for i in range(threads)] if threads > 1 else [moves]
        results: dict[int, int] = {}

        def run(chunk: list[int]) -> None:
            if not chunk:
                return
            arr = np.array(chunk, dtype=np.int64)
            out = np.zeros(len(chunk), dtype=np.int64)
            stats = np.zeros(2, dtype=np.int64)
            K.child_values(self.masks, self.g.n, self.full, self.pow3, d, s, code, dom,
                           self.scored_is_dom, arr, self.table8, self.table64, self.perfect,
                           self.tmask, stats, self.abort, out)
            with self._stats_lock:
                self.stats += stats
                results.update(zip(chunk, out.tolist()))

        if len(chunks) == 1:
            run(chunks[0])
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                list(pool.map(run, chunks))
        if self.abort[0]:
            raise BudgetExceeded("search budget exhausted")
        return [_from_kernel(results[v]) for v in moves]


def _terminal_value(g: Graph, spec: SolveSpec, st: GameState) -> GameValue | None:
    dom = dominator_has_won(g, spec.variant, st)
    stal = staller_has_won(g, spec.variant, st)
    if spec.scored is Role.DOMINATOR:
        return 0 if dom else (INF if stal else None)
    return 0 if stal else (INF if dom else None)


def _combine(spec: SolveSpec, st: GameState, values: list[GameValue]) -> GameValue:
    if st.to_move is spec.scored:
        return 1 + min(values)
    return max(values)


def _default_threads() -> int:
    return int(os.environ.get("MBDOM_THREADS", "1"))


def solve_value(g: Graph, spec: SolveSpec, threads: int | None = None,
                budget_secs: float | None = None, table_cap: int = DEFAULT_TABLE_CAP) -> SolveResult:
    """Game value for ``spec`` on ``g`` plus the optimal first moves.

    The first moves are those of the starting player that attain the value.
    When the scored player starts and cannot win there is no optimum, and the
    move set is empty.  ``threads > 1`` splits the root moves across workers
    sharing one transposition table; the result is identical either way.
    """
    spec = SolveSpec(spec.variant, spec.scored, spec.starter)
    threads = threads or _default_threads()
    K.warm_up()
    t0 = time.perf_counter()
    st = new_game(g, spec.starter)
    term = _terminal_value(g, spec, st)
    if term is not None:
        return SolveResult(term, VertexSet(), SolveStats(0, 0, time.perf_counter() - t0))
    search = _Search(g, spec, table_cap)
    timer = None
    if budget_secs is not None:
        timer = threading.Timer(budget_secs, lambda: search.abort.__setitem__(0, 1))
        timer.daemon = True
        timer.start()
    try:
        moves = list(legal_moves(g, st))
        values = search.children(st, moves, threads)
    finally:
        if timer is not None:
            timer.cancel()
    value = _combine(spec, st, values)
    if st.to_move is spec.scored:
        best = [v for v, x in zip(moves, values) if 1 + x == value and value != INF]
    else:
        best = [v for v, x in zip(moves, values) if x == value]
    stats = SolveStats(int(search.stats[K.NODES]), int(search.stats[K.HITS]), time.perf_counter() - t0)
    return SolveResult(value, VertexSet(best), stats)


def solve(g: Graph, variant: GameVariant | str, scored: Role | str = Role.DOMINATOR,
          starter: Role | str = Role.DOMINATOR, **kwargs) -> GameValue:
    """Shorthand returning only the value."""
    return solve_value(g, SolveSpec(variant, scored, starter), **kwargs).value


def invariants(g: Graph, **kwargs) -> dict[str, GameValue]:
    """The six named game invariants of ``g``."""
    D, S = Role.DOMINATOR, Role.STALLER
    table = {
        "gamma_MB": (GameVariant.MBD, D, D),
        "gamma_MB'": (GameVariant.MBD, D, S),
        "gamma_SMB": (GameVariant.MBD, S, D),
        "gamma_SMB'": (GameVariant.MBD, S, S),
        "gamma_MBT": (GameVariant.MBTD, D, D),
        "gamma_MBT'": (GameVariant.MBTD, D, S),
    }
    return {name: solve(g, *args, **kwargs) for name, args in table.items()}


def outcome(g: Graph, variant: GameVariant | str, **kwargs) -> Outcome:
    d_start = solve(g, variant, Role.DOMINATOR, Role.DOMINATOR, **kwargs)
    s_start = solve(g, variant, Role.DOMINATOR, Role.STALLER, **kwargs)
    return classify_outcome(d_start, s_start)


def classify_outcome(d_start: GameValue, s_start: GameValue) -> Outcome:
    if d_start != INF and s_start != INF:
        return Outcome.D
    if d_start == INF and s_start == INF:
        return Outcome.S
    if s_start == INF:
        return Outcome.N
    raise SolverError(
        "Dominator wins only when Staller starts; an extra move can never hurt him, so this is a solver bug"
    )


def naive_value(g: Graph, spec: SolveSpec, cap: int = ORACLE_CAP) -> GameValue:
    """Reference value straight from the recursive definition.

    No memoisation, pruning or move ordering.  Refuses graphs above ``cap``.
    """
    if g.n > cap:
        raise SolverError(f"naive oracle refuses n={g.n} > cap {cap}")
    spec = SolveSpec(spec.variant, spec.scored, spec.starter)

    def value(st: GameState) -> GameValue:
        term = _terminal_value(g, spec, st)
        if term is not None:
            return term
        return _combine(spec, st, [value(apply_move(st, v)) for v in legal_moves(g, st)])

    return value(new_game(g, spec.starter))


def best_line(g: Graph, spec: SolveSpec, table_cap: int = DEFAULT_TABLE_CAP) -> list[tuple[Role, int]]:
    """One optimal play from the start until the scored player wins.

    At every turn the lowest-numbered optimal move is taken, so the line is
    deterministic.  Raises :class:`NoLineError` when the value is infinite.
    """
    spec = SolveSpec(spec.variant, spec.scored, spec.starter)
    search = _Search(g, spec, table_cap)
    st = new_game(g, spec.starter)
    line: list[tuple[Role, int]] = []
    if _terminal_value(g, spec, st) == INF:
        raise NoLineError("scored player has no winning strategy")
    while _terminal_value(g, spec, st) is None:
        moves = list(legal_moves(g, st))
        values = search.children(st, moves)
        value = _combine(spec, st, values)
        if value == INF:
            raise NoLineError("scored player has no winning strategy")
        want = value - 1 if st.to_move is spec.scored else value
        v = next(m for m, x in zip(moves, values) if x == want)
        line.append((st.to_move, v))
        st = apply_move(st, v)
    return line
