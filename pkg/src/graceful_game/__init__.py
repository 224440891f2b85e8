"""Exact engine for the two-player graceful labeling game.

Alice tries to complete a graceful labeling (distinct vertex labels from
{0..m} with all induced edge differences distinct); Bob tries to make that
impossible.  The package builds the classic graph families, enumerates
graceful labelings exactly, solves the game perfectly at desk scale,
executes and exhaustively verifies scripted winning strategies, and serves
interactive games over HTTP.
"""

from .budget import Budget
from .engine import (
    GameState,
    Move,
    Player,
    Status,
    legal_moves,
    new_game,
    play_move,
    random_playout,
    replay,
    status,
)
from .errors import (
    BudgetExceededError,
    GameOverError,
    GracefulGameError,
    IllegalMoveError,
    InvalidParamsError,
    NotApplicableError,
    NotGracefulError,
    NotYourTurnError,
    OffScriptError,
    SizeMismatchError,
    TooLargeError,
)
from .graphs import (
    FamilySpec,
    Graph,
    automorphisms,
    build_family,
    diameter,
    find_isomorphism,
    graph_from_json,
    graph_to_json,
    path_power,
    to_dot,
)
from .labeling import (
    RAW,
    UP_TO_AUTOMORPHISM,
    PartialLabeling,
    apply_move,
    canonical_form,
    complement,
    empty_labeling,
    enumerate_graceful,
    is_alpha,
    is_graceful,
    is_legal_move,
)
from .solver import (
    ACCEPTANCE_SPECS,
    SolveResult,
    best_move,
    completable,
    game_value,
    solve,
    solve_state,
    solve_table,
    state_key,
)
from .strategies import (
    StrategyId,
    StrategyVerdict,
    forbidden_first_labels,
    replay_counterexample,
    scripted_move,
    verify_strategy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
