"""Domination predicates, exact (total) domination numbers and pairing total dominating sets.

Both classical problems are hitting-set problems over neighbourhood masks:
a set dominates iff it meets every closed neighbourhood, and totally
dominates iff it meets every open neighbourhood.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence

from .graph import Graph, GraphError, VertexSet, popcount

INF = math.inf


def _mask(d: Iterable[int]) -> int:
    return d.bits if isinstance(d, VertexSet) else VertexSet(d).bits


def _hits_all(masks: Sequence[int], d: int) -> bool:
    return all(m & d for m in masks)


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    return _hits_all(g.closed_masks(), _mask(d))


def is_total_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    return _hits_all(g.adj, _mask(d))


def _greedy_cover(masks: Sequence[int], n: int) -> int:
    chosen = 0
    pending = [m for m in masks]
    while pending:
        best = max(range(n), key=lambda x: sum(1 for m in pending if (m >> x) & 1))
        chosen |= 1 << best
        pending = [m for m in pending if not (m >> best) & 1]
    return popcount(chosen)


def _min_hitting_set(masks: Sequence[int], n: int) -> int | float:
    """Smallest number of vertices meeting every mask, or ``inf`` if some mask is empty.

    Tries budgets 1, 2, ... up to the greedy bound.  Each level branches on the
    vertices of the first unhit mask and cuts when the remaining unhit masks
    cannot be covered with the remaining budget.
    """
    if any(m == 0 for m in masks):
        return INF
    masks = sorted(set(masks), key=popcount)
    upper = _greedy_cover(masks, n)
    # per-vertex: which masks it hits
    cover = [0] * n
    for i, m in enumerate(masks):
        for v in VertexSet.from_mask(m):
            cover[v] |= 1 << i
    all_masks = (1 << len(masks)) - 1
    max_cover = max(popcount(c) for c in cover)

    def feasible(unhit: int, budget: int) -> bool:
        if unhit == 0:
            return True
        if budget == 0 or popcount(unhit) > budget * max_cover:
            return False
        first = (unhit & -unhit).bit_length() - 1
        for v in VertexSet.from_mask(masks[first]):
            if feasible(unhit & ~cover[v], budget - 1):
                return True
        return False

    for k in range(1, upper):
        if feasible(all_masks, k):
            return k
    return upper


def domination_number(g: Graph) -> int:
    return int(_min_hitting_set(g.closed_masks(), g.n))


def total_domination_number(g: Graph) -> int | float:
    return _min_hitting_set(g.adj, g.n)


def brute_force_number(g: Graph, total: bool) -> int | float:
    """Reference 2^n enumeration; only for tests."""
    masks = g.adj if total else g.closed_masks()
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if _hits_all(masks, VertexSet(combo).bits):
                return k
    return INF


Pairing = list[tuple[int, int]]


def _check_pairing(g: Graph, pairs: Sequence[tuple[int, int]]) -> None:
    seen: set[int] = set()
    for u, v in pairs:
        for x in (u, v):
            if not (isinstance(x, int) and 0 <= x < g.n):
                raise GraphError(f"pair vertex {x!r} out of range")
            if x in seen:
                raise GraphError(f"vertex {x} appears in more than one pair position")
            seen.add(x)


def is_pairing_total_dominating_set(g: Graph, pairs: Sequence[tuple[int, int]]) -> bool:
    """True iff every choice of one vertex per pair is a total dominating set.

    Checks all ``2**k`` selections explicitly.
    """
    _check_pairing(g, pairs)
    for choice in itertools.product(*pairs):
        if not is_total_dominating_set(g, choice):
            return False
    return True


def find_pairing_total_dominating_set(g: Graph, k: int) -> Pairing | None:
    """Search for ``k`` disjoint pairs forming a pairing total dominating set.

    Every selection meets ``N(x)`` exactly when some pair lies inside
    ``N(x)``, so the search covers vertices one at a time by placing a pair
    inside the neighbourhood of the lowest uncovered vertex.  Leftover pairs
    are padded from unused vertices, which cannot break the property.
    """
    if 2 * k > g.n:
        raise GraphError(f"cannot place {k} disjoint pairs in {g.n} vertices")
    adj = g.adj
    full = g.full_mask

    def uncovered(pairs: list[tuple[int, int]]) -> int:
        out = 0
        for x in range(g.n):
            if not any((adj[x] >> a) & 1 and (adj[x] >> b) & 1 for a, b in pairs):
                out |= 1 << x
        return out

    def search(pairs: list[tuple[int, int]], used: int) -> Pairing | None:
        todo = uncovered(pairs)
        if todo == 0:
            free = [x for x in range(g.n) if not (used >> x) & 1]
            pad = [(free[2 * i], free[2 * i + 1]) for i in range(k - len(pairs))]
            return sorted(pairs + pad)
        if len(pairs) == k:
            return None
        x = (todo & -todo).bit_length() - 1
        cand = list(VertexSet.from_mask(adj[x] & full & ~used))
        for a, b in itertools.combinations(cand, 2):
            found = search(pairs + [(a, b)], used | (1 << a) | (1 << b))
            if found is not None:
                return found
        return None

    return search([], 0)
