"""Shared machinery for the four benchmark games.

Each game ships 100 variations per split (train, dev, test).  The defining
problem of every variation is drawn from a per-game pool of 300 unique
problems so the splits can never share one; cosmetic choices (names,
furniture filler) come from a second RNG derived from the variation index.
Everything is a pure function of the game id and the variation address,
so regeneration is exactly reproducible.
"""

from __future__ import annotations

import hashlib
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from ..errors import ExhaustedSpace
from ..modules import SymbolicModule
from ..world import WorldState

SPLITS = ("train", "dev", "test")
VARIATIONS_PER_SPLIT = 100
_POOL_SIZE = VARIATIONS_PER_SPLIT * len(SPLITS)
_MAX_DRAWS = 200_000


def derive_seed(*parts: object) -> int:
    """Stable 64-bit seed from a sequence of label parts."""
    digest = hashlib.sha256("/".join(str(p) for p in parts).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def split_offset(split: str) -> int:
    if split not in SPLITS:
        raise ValueError(f"unknown split {split!r}")
    return SPLITS.index(split) * VARIATIONS_PER_SPLIT


@dataclass
class EpisodeVariation:
    game_id: str
    split: str
    index: int
    seed: int                      # global problem index, unique across splits
    task_description: str
    params: Any                    # per-game params dataclass
    gold_with_modules: list[str] = field(default_factory=list)
    gold_no_modules: list[str] = field(default_factory=list)


class ScoreTracker(ABC):
    """Per-episode scoring state machine, updated after each world action."""

    score: float = 0.0
    done: bool = False

    @abstractmethod
    def update(self, state: WorldState, action) -> None:
        ...


class Game(ABC):
    game_id: str = ""

    # -- problem pool ----------------------------------------------------

    @abstractmethod
    def sample_problem(self, rng: random.Random) -> tuple[Any, Any]:
        """Draw one candidate problem; returns (uniqueness_key, payload)."""

    def problem_pool(self) -> list[Any]:
        return _pool_for(type(self), self.game_id)

    # -- variation construction ------------------------------------------

    @abstractmethod
    def build_params(self, payload: Any, rng: random.Random) -> Any:
        """Dress a pooled problem up with cosmetic choices."""

    @abstractmethod
    def build_world(self, params: Any) -> WorldState:
        ...

    @abstractmethod
    def task_description(self, params: Any) -> str:
        ...

    @abstractmethod
    def oracle_actions(self, params: Any) -> list[str]:
        """Gold action surfaces with module commands included."""

    def is_module_action(self, surface: str) -> bool:
        from ..actions import MODULE, parse

        return parse(surface).verb == MODULE

    @abstractmethod
    def make_tracker(self, params: Any) -> ScoreTracker:
        ...

    def make_module(self, params: Any) -> SymbolicModule | None:
        return None

    def generate(self, split: str, index: int) -> EpisodeVariation:
        if not 0 <= index < VARIATIONS_PER_SPLIT:
            raise ValueError(f"index {index} outside 0..{VARIATIONS_PER_SPLIT - 1}")
        seed = split_offset(split) + index
        payload = self.problem_pool()[seed]
        rng = random.Random(derive_seed("variation", self.game_id, seed))
        params = self.build_params(payload, rng)
        gold = self.oracle_actions(params)
        return EpisodeVariation(
            game_id=self.game_id,
            split=split,
            index=index,
            seed=seed,
            task_description=self.task_description(params),
            params=params,
            gold_with_modules=gold,
            gold_no_modules=[a for a in gold if not self.is_module_action(a)],
        )


@lru_cache(maxsize=None)
def _pool_for(game_cls: type, game_id: str) -> list[Any]:
    """300 unique problem payloads for one game, in a fixed global order."""
    game = game_cls()
    rng = random.Random(derive_seed("problem-pool", game_id))
    keys: set[Any] = set()
    pool: list[Any] = []
    draws = 0
    while len(pool) < _POOL_SIZE:
        draws += 1
        if draws > _MAX_DRAWS:
            raise ExhaustedSpace(
                f"{game_id}: only {len(pool)} unique problems in {draws} draws"
            )
        key, payload = game.sample_problem(rng)
        if key in keys:
            continue
        keys.add(key)
        pool.append(payload)
    return pool
