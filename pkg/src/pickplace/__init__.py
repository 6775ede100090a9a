"""Procedural pick-and-place text games with symbolic solver modules.

Four benchmark games (object placement, map navigation, arithmetic,
sorting), each procedurally generated into disjoint train/dev/test splits.
Deterministic solver modules watch the observation stream and inject extra
valid actions; oracle agents replay gold trajectories for imitation
learning exports.
"""

from .actions import Action, enumerate_env_actions, execute_env, parse
from .dataset import (
    export_dataset,
    parse_bc,
    serialize_bc,
    write_bc_file,
    write_trajectories_jsonl,
    write_variations_jsonl,
)
from .episode import STEP_CAP, Episode, ValidActionSet
from .errors import (
    AgentFailure,
    ContainerClosed,
    EngineError,
    ExhaustedSpace,
    InvalidAction,
    NoKnownPath,
    NoSuchEntity,
    NotPortable,
    NothingObserved,
    SessionClosed,
    UnknownTarget,
    UnrecognizedCommand,
)
from .games import (
    GAME_IDS,
    GAMES,
    SPLITS,
    VARIATIONS_PER_SPLIT,
    EpisodeVariation,
    derive_seed,
    get_game,
)
from .harness import (
    ActionStats,
    EpisodeResult,
    EvalSummary,
    OracleReplayAgent,
    RandomAgent,
    TrajectoryRecord,
    action_stats,
    align_action,
    evaluate,
    oracle_factory,
    random_factory,
    run_episode,
)
from .modules import (
    CalculatorModule,
    KnowledgeBase,
    KnowledgeModule,
    NavigationModule,
    SorterModule,
    SymbolicModule,
    load_default_kb,
)
from .quantities import Quantity
from .world import Observation, WorldState, render_inventory, render_room

__version__ = "0.1.0"

__all__ = [
    "Action",
    "ActionStats",
    "AgentFailure",
    "CalculatorModule",
    "ContainerClosed",
    "EngineError",
    "Episode",
    "EpisodeResult",
    "EpisodeVariation",
    "EvalSummary",
    "ExhaustedSpace",
    "GAMES",
    "GAME_IDS",
    "InvalidAction",
    "KnowledgeBase",
    "KnowledgeModule",
    "NavigationModule",
    "NoKnownPath",
    "NoSuchEntity",
    "NotPortable",
    "NothingObserved",
    "Observation",
    "OracleReplayAgent",
    "Quantity",
    "RandomAgent",
    "STEP_CAP",
    "SPLITS",
    "SessionClosed",
    "SorterModule",
    "SymbolicModule",
    "TrajectoryRecord",
    "UnknownTarget",
    "UnrecognizedCommand",
    "VARIATIONS_PER_SPLIT",
    "ValidActionSet",
    "WorldState",
    "action_stats",
    "align_action",
    "derive_seed",
    "enumerate_env_actions",
    "evaluate",
    "execute_env",
    "export_dataset",
    "get_game",
    "load_default_kb",
    "oracle_factory",
    "parse",
    "parse_bc",
    "random_factory",
    "render_inventory",
    "render_room",
    "run_episode",
    "serialize_bc",
    "write_bc_file",
    "write_trajectories_jsonl",
    "write_variations_jsonl",
    "__version__",
]
