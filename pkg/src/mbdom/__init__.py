"""Exact solver for Maker-Breaker domination and total domination games."""

from .constructions import Construction, ParameterError, construct
from .domination import (
    domination_number,
    find_pairing_total_dominating_set,
    is_dominating_set,
    is_pairing_total_dominating_set,
    is_total_dominating_set,
    total_domination_number,
)
from .game import GameState, GameVariant, Role, apply_move, legal_moves, new_game
from .graph import (
    EdgeListParseError,
    Graph,
    GraphError,
    VertexSet,
    closed_neighborhood,
    from_edge_list,
    is_connected,
    open_neighborhood,
    to_edge_list,
)
from .solver import (
    INF,
    Outcome,
    SolveResult,
    SolveSpec,
    best_line,
    invariants,
    naive_value,
    outcome,
    solve,
    solve_value,
)

__version__ = "0.1.0"
