"""Game-tree search kernels.

The same source runs compiled under numba or as plain Python.  Set
``MBDOM_JIT=0`` before import to force the Python path (handy for
debugging, profiling and for the benchmark in ``benchmarks/``).

Positions are pairs of bitmasks ``(d, s)`` for Dominator's and Staller's
vertices.  ``masks`` holds one neighbourhood per vertex; Dominator wins
once ``d`` meets all of them and Staller wins once ``s`` contains one.
Values count the scored player's remaining moves; ``INF`` means the
scored player cannot win.  A position is also addressed by its base-3
code ``sum(pow3[v] * owner(v))`` (1 = Dominator, 2 = Staller), which is
the transposition-table key.
"""

from __future__ import annotations

import os

import numpy as np

INF = 100
EMPTY = -1
ABORTED = -1
MAX_KERNEL_ORDER = 34

_flag = os.environ.get("MBDOM_JIT", "1").strip().lower()
USE_JIT = _flag not in ("0", "false", "no", "off")

if USE_JIT:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        USE_JIT = False

if not USE_JIT:

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(fn):
            return fn

        return wrap


# stats slots
NODES = 0
HITS = 1


@njit(cache=True, nogil=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def dominator_won(masks, d):
    for i in range(masks.shape[0]):
        if masks[i] & d == 0:
            return False
    return True


@njit(cache=True, nogil=True)
def staller_won(masks, s):
    for i in range(masks.shape[0]):
        if masks[i] & ~s == 0:
            return True
    return False


@njit(cache=True, nogil=True)
def tt_index(code, perfect, mask):
    if perfect:
        return code
    return (code ^ (code >> 23)) & mask


@njit(cache=True, nogil=True)
def tt_load(table8, table64, code, perfect, mask):
    if perfect:
        return np.int64(table8[code])
    e = table64[tt_index(code, perfect, mask)]
    if e >= 0 and (e >> 8) == code:
        return e & 0xFF
    return EMPTY


@njit(cache=True, nogil=True)
def tt_store(table8, table64, code, val, perfect, mask):
    if perfect:
        table8[code] = val
    else:
        # single 64-bit word per entry: concurrent writers never tear an entry
        table64[tt_index(code, perfect, mask)] = (code << 8) | val


@njit(cache=True, nogil=True)
def order_moves(masks, n, d, s, free, dom_to_move):
    """Free vertices, most promising first for the player to move.

    Dominator prefers vertices meeting many still-unmet neighbourhoods;
    Staller prefers vertices of neighbourhoods she has nearly filled.
    Ties keep ascending vertex order.
    """
    cnt = popcount(free)
    moves = np.empty(cnt, dtype=np.int64)
    score = np.zeros(cnt, dtype=np.int64)
    k = 0
    for v in range(n):
        if (free >> v) & 1:
            moves[k] = v
            k += 1
    for i in range(masks.shape[0]):
        m = masks[i]
        if m & d:
            continue
        if dom_to_move:
            for j in range(cnt):
                if (m >> moves[j]) & 1:
                    score[j] += 1
        else:
            left = popcount(m & ~s)
            w = np.int64(1) << (2 * max(0, 12 - left))
            for j in range(cnt):
                if (m >> moves[j]) & 1:
                    score[j] += w
    idx = np.argsort(-score, kind="mergesort")
    return moves[idx]


@njit(cache=True, nogil=True)
def lower_bound(masks, n, d, s, free, scored_is_dom):
    """Cheap lower bound on the scored player's remaining moves (scored player to move)."""
    if scored_is_dom:
        unmet = 0
        best_cover = 0
        for v in range(n):
            if (free >> v) & 1:
                c = 0
                for i in range(masks.shape[0]):
                    if masks[i] & d == 0 and (masks[i] >> v) & 1:
                        c += 1
                if c > best_cover:
                    best_cover = c
        for i in range(masks.shape[0]):
            if masks[i] & d == 0:
                unmet += 1
        if best_cover == 0:
            return INF
        return (unmet + best_cover - 1) // best_cover
    need = INF
    for i in range(masks.shape[0]):
        m = masks[i]
        if m & d == 0:
            left = popcount(m & ~s)
            if left < need:
                need = left
    return need


@njit(cache=True, nogil=True)
def immediate_win(masks, d, s, free, dom_to_move):
    """True if the player to move wins with a single move."""
    if dom_to_move:
        common = free
        for i in range(masks.shape[0]):
            if masks[i] & d == 0:
                common &= masks[i]
                if common == 0:
                    return False
        return True
    for i in range(masks.shape[0]):
        m = masks[i]
        if m & d == 0 and popcount(m & ~s) == 1:
            return True
    return False


NEED = -2


@njit(cache=True, nogil=True)
def settle(masks, d, s, code, dom_to_move, scored_is_dom, table8, table64, perfect, tmask, stats):
    """Value of a position if it is decided without expanding it, else ``NEED``."""
    if dominator_won(masks, d):
        return 0 if scored_is_dom else INF
    if staller_won(masks, s):
        return INF if scored_is_dom else 0
    cached = tt_load(table8, table64, code, perfect, tmask)
    if cached != EMPTY:
        stats[HITS] += 1
        return cached
    # masks lie inside V(G), so the unbounded complement is a safe free set here
    if immediate_win(masks, d, s, ~(d | s), dom_to_move):
        val = 1 if dom_to_move == scored_is_dom else INF
        tt_store(table8, table64, code, val, perfect, tmask)
        return val
    return NEED


@njit(cache=True, nogil=True)
def search(masks, n, full, pow3, d0, s0, code0, dom0, scored_is_dom,
           table8, table64, perfect, tmask, stats, abort):
    """Exact value of position ``(d0, s0)``; ``ABORTED`` if ``abort[0]`` was raised.

    Depth-first minimax with an explicit frame stack (one frame per ply).
    The scored player's frames stop early once they reach their lower bound;
    the opponent's frames stop once some reply is a loss for the scored player.
    """
    v = settle(masks, d0, s0, code0, dom0, scored_is_dom, table8, table64, perfect, tmask, stats)
    if v != NEED:
        return v
    depth = n + 1
    fd = np.empty(depth, dtype=np.int64)
    fs = np.empty(depth, dtype=np.int64)
    fcode = np.empty(depth, dtype=np.int64)
    fdom = np.empty(depth, dtype=np.bool_)
    fmoves = np.empty((depth, n), dtype=np.int64)
    fcount = np.empty(depth, dtype=np.int64)
    fnext = np.empty(depth, dtype=np.int64)
    fbest = np.empty(depth, dtype=np.int64)
    ffloor = np.empty(depth, dtype=np.int64)

    top = 0
    d, s, code, dom = d0, s0, code0, dom0
    while True:
        # open a frame for (d, s, code, dom); settle() already returned NEED for it
        if abort[0] != 0:
            return ABORTED
        stats[NODES] += 1
        free = full & ~(d | s)
        moves = order_moves(masks, n, d, s, free, dom)
        fd[top] = d
        fs[top] = s
        fcode[top] = code
        fdom[top] = dom
        fcount[top] = moves.shape[0]
        fmoves[top, :moves.shape[0]] = moves
        fnext[top] = 0
        if dom == scored_is_dom:
            fbest[top] = INF
            ffloor[top] = max(2, lower_bound(masks, n, d, s, free, scored_is_dom))
        else:
            fbest[top] = 0
            ffloor[top] = 0

        # advance until a child needs its own frame
        opened = False
        while not opened:
            f = top
            if fnext[f] < fcount[f]:
                mv = fmoves[f, fnext[f]]
                fnext[f] += 1
                bit = np.int64(1) << mv
                if fdom[f]:
                    d, s, code, dom = fd[f] | bit, fs[f], fcode[f] + pow3[mv], False
                else:
                    d, s, code, dom = fd[f], fs[f] | bit, fcode[f] + 2 * pow3[mv], True
                cv = settle(masks, d, s, code, dom, scored_is_dom, table8, table64, perfect, tmask, stats)
                if cv == NEED:
                    top += 1
                    opened = True
                    continue
            else:
                cv = fbest[f]
                tt_store(table8, table64, fcode[f], cv, perfect, tmask)
                if f == 0:
                    return cv
                top -= 1
                f = top
            # fold child value cv into frame f
            if fdom[f] == scored_is_dom:
                if cv < INF and cv + 1 < fbest[f]:
                    fbest[f] = cv + 1
                    if fbest[f] <= ffloor[f]:
                        fnext[f] = fcount[f]
            else:
                if cv > fbest[f]:
                    fbest[f] = cv
                    if cv >= INF:
                        fnext[f] = fcount[f]


@njit(cache=True, nogil=True)
def child_values(masks, n, full, pow3, d, s, code, dom_to_move, scored_is_dom, moves,
                 table8, table64, perfect, tmask, stats, abort, out):
    """Exact value after each move in ``moves``, written to ``out``."""
    owner = 1 if dom_to_move else 2
    for j in range(moves.shape[0]):
        v = moves[j]
        bit = np.int64(1) << v
        if dom_to_move:
            out[j] = search(masks, n, full, pow3, d | bit, s, code + owner * pow3[v], False,
                            scored_is_dom, table8, table64, perfect, tmask, stats, abort)
        else:
            out[j] = search(masks, n, full, pow3, d, s | bit, code + owner * pow3[v], True,
                            scored_is_dom, table8, table64, perfect, tmask, stats, abort)
        if out[j] == ABORTED:
            return


_warm = False


def warm_up() -> None:
    """Load (or compile) the kernels once so later timings measure search only."""
    global _warm
    if _warm:
        return
    masks = np.array([0b011, 0b111, 0b110], dtype=np.int64)
    pow3 = np.array([1, 3, 9], dtype=np.int64)
    out = np.zeros(3, dtype=np.int64)
    child_values(masks, 3, 0b111, pow3, 0, 0, 0, True, True, np.arange(3, dtype=np.int64),
                 np.full(27, EMPTY, dtype=np.int8), np.zeros(1, dtype=np.int64), True, 0,
                 np.zeros(2, dtype=np.int64), np.zeros(1, dtype=np.int64), out)
    _warm = True
