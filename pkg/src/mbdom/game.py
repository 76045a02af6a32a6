"""Rules of the Maker-Breaker domination (MBD) and total domination (MBTD) games.

Dominator plays Maker on the hypergraph of neighbourhoods: closed ones for
MBD, open ones for MBTD.  He wins once his vertices meet every
neighbourhood; Staller wins as soon as she owns an entire neighbourhood,
because no completion of Dominator's set can then reach that vertex.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError, VertexSet


class GameVariant(str, enum.Enum):
    MBD = "mbd"
    MBTD = "mbtd"


class Role(str, enum.Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"

    @property
    def other(self) -> Role:
        return Role.STALLER if self is Role.DOMINATOR else Role.DOMINATOR


class IllegalMoveError(GraphError):
    pass


def winning_masks(g: Graph, variant: GameVariant) -> tuple[int, ...]:
    """Neighbourhood masks Dominator has to meet (one per vertex)."""
    return g.closed_masks() if variant is GameVariant.MBD else g.adj


@dataclass(frozen=True)
class GameState:
    claimed_d: VertexSet
    claimed_s: VertexSet
    to_move: Role

    def __post_init__(self) -> None:
        object.__setattr__(self, "to_move", Role(self.to_move))
        if self.claimed_d.bits & self.claimed_s.bits:
            raise ValueError("claimed sets overlap")

    def consistent_with(self, starter: Role) -> bool:
        """Whether strict alternation from ``starter`` can reach this state.

        Not enforced on construction: the win predicates are also handy on
        hypothetical positions.  ``new_game`` and ``apply_move`` preserve it.
        """
        diff = len(self.claimed_d) - len(self.claimed_s)
        if Role(starter) is Role.DOMINATOR:
            return diff == (0 if self.to_move is Role.DOMINATOR else 1)
        return diff == (-1 if self.to_move is Role.DOMINATOR else 0)


def new_game(g: Graph, starter: Role) -> GameState:
    return GameState(VertexSet(), VertexSet(), Role(starter))


def legal_moves(g: Graph, st: GameState) -> VertexSet:
    return VertexSet.from_mask(g.full_mask & ~(st.claimed_d.bits | st.claimed_s.bits))


def apply_move(st: GameState, v: int, g: Graph | None = None) -> GameState:
    """Return the state after the player to move claims ``v``.

    Passing ``g`` also rejects vertices outside ``0..n-1``.
    """
    if not isinstance(v, int) or v < 0 or (g is not None and v >= g.n):
        raise IllegalMoveError(f"vertex {v!r} out of range")
    if v in st.claimed_d or v in st.claimed_s:
        raise IllegalMoveError(f"vertex {v} already claimed")
    bit = VertexSet.from_mask(1 << v)
    if st.to_move is Role.DOMINATOR:
        return GameState(st.claimed_d | bit, st.claimed_s, Role.STALLER)
    return GameState(st.claimed_d, st.claimed_s | bit, Role.DOMINATOR)


def dominator_has_won(g: Graph, variant: GameVariant, st: GameState) -> bool:
    d = st.claimed_d.bits
    return all(m & d for m in winning_masks(g, variant))


def staller_has_won(g: Graph, variant: GameVariant, st: GameState) -> bool:
    s = st.claimed_s.bits
    return any(m & ~s == 0 for m in winning_masks(g, variant))
