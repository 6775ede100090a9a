"""The four benchmark games."""

from __future__ import annotations

from .arithmetic import ArithmeticGame, ArithmeticParams
from .base import (
    SPLITS,
    VARIATIONS_PER_SPLIT,
    EpisodeVariation,
    Game,
    ScoreTracker,
    derive_seed,
    split_offset,
)
from .mapreader import MapParams, MapReaderGame
from .sorting import SortingGame, SortingParams
from .twc import TwcGame, TwcParams

GAMES: dict[str, Game] = {
    game.game_id: game
    for game in (MapReaderGame(), ArithmeticGame(), SortingGame(), TwcGame())
}
GAME_IDS: tuple[str, ...] = tuple(GAMES)


def get_game(game_id: str) -> Game:
    try:
        return GAMES[game_id]
    except KeyError:
        raise ValueError(f"unknown game {game_id!r}; choose from {', '.join(GAME_IDS)}") from None


__all__ = [
    "SPLITS",
    "VARIATIONS_PER_SPLIT",
    "EpisodeVariation",
    "Game",
    "ScoreTracker",
    "derive_seed",
    "split_offset",
    "get_game",
    "GAMES",
    "GAME_IDS",
    "ArithmeticGame",
    "ArithmeticParams",
    "SortingGame",
    "SortingParams",
    "MapReaderGame",
    "MapParams",
    "TwcGame",
    "TwcParams",
]
