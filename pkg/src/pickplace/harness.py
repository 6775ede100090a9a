"""Episode runners: agents, trajectory recording, evaluation, statistics.

A trajectory record captures everything an imitation learner needs for one
decision: the task line, the three observation channels, the previous
action and its observation, the chosen action, and the valid action set
it was chosen from.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from typing import Callable, Protocol

from .episode import Episode
from .errors import AgentFailure, InvalidAction
from .games import VARIATIONS_PER_SPLIT, EpisodeVariation, derive_seed, get_game
from .world import Observation


@dataclass
class TrajectoryRecord:
    game_id: str
    split: str
    index: int
    step: int
    task: str
    obs: str
    inv: str
    look: str
    prev_action: str
    prev_obs: str
    target: str
    score: float
    valid_actions: list[str] = field(default_factory=list)


@dataclass
class EpisodeResult:
    variation: EpisodeVariation
    score: float
    steps: int
    records: list[TrajectoryRecord]


class Agent(Protocol):
    def act(self, observation: Observation, task: str, valid: list[str]) -> str:
        ...


class RandomAgent:
    def __init__(self, rng: random.Random):
        self.rng = rng

    def act(self, observation: Observation, task: str, valid: list[str]) -> str:
        return self.rng.choice(valid)


class OracleReplayAgent:
    """Plays back a fixed action list, one action per step."""

    def __init__(self, plan: list[str]):
        self.plan = list(plan)
        self.cursor = 0

    def act(self, observation: Observation, task: str, valid: list[str]) -> str:
        if self.cursor >= len(self.plan):
            raise AgentFailure("gold plan exhausted before the episode ended")
        action = self.plan[self.cursor]
        self.cursor += 1
        return action


def _normalize(text: str) -> str:
    return re.sub(r"\s+", " ", text).strip().lower()


def align_action(utterance: str, valid: list[str]) -> str:
    """Map free text onto the closest valid action surface.

    Exact match (after case and whitespace normalization) wins; otherwise
    the candidate with the highest unigram cosine similarity, earliest
    enumeration order breaking ties.
    """
    if not valid:
        raise InvalidAction("there are no valid actions to align with")
    wanted = _normalize(utterance)
    for surface in valid:
        if _normalize(surface) == wanted:
            return surface
    words = set(wanted.split())
    best, best_score = valid[0], -1.0
    for surface in valid:
        candidate = set(_normalize(surface).split())
        if words and candidate:
            overlap = len(words & candidate)
            score = overlap / math.sqrt(len(words) * len(candidate))
        else:
            score = 0.0
        if score > best_score:
            best, best_score = surface, score
    return best


def run_episode(
    variation: EpisodeVariation,
    agent: Agent,
    modules: bool = True,
    step_cap: int = 50,
) -> EpisodeResult:
    episode = Episode(variation, modules=modules, step_cap=step_cap)
    records: list[TrajectoryRecord] = []
    while not episode.over:
        valid = episode.valid_actions().surfaces()
        observation = episode.observation
        chosen = agent.act(observation, episode.task_description, valid)
        records.append(
            TrajectoryRecord(
                game_id=variation.game_id,
                split=variation.split,
                index=variation.index,
                step=len(records),
                task=episode.task_description,
                obs=observation.text,
                inv=observation.inv_text,
                look=observation.look_text,
                prev_action=records[-1].target if records else "",
                prev_obs=records[-1].obs if records else "",
                target=chosen,
                score=0.0,
                valid_actions=valid,
            )
        )
        episode.step(chosen)
        records[-1].score = episode.score
    return EpisodeResult(
        variation=variation,
        score=episode.score,
        steps=episode.steps,
        records=records,
    )


AgentFactory = Callable[[EpisodeVariation], Agent]


def oracle_factory(modules: bool = True) -> AgentFactory:
    def make(variation: EpisodeVariation) -> Agent:
        plan = variation.gold_with_modules if modules else variation.gold_no_modules
        return OracleReplayAgent(plan)

    return make


def random_factory(run_seed: int = 0) -> AgentFactory:
    def make(variation: EpisodeVariation) -> Agent:
        rng = random.Random(
            derive_seed(
                "random-agent",
                variation.game_id,
                variation.split,
                variation.index,
                run_seed,
            )
        )
        return RandomAgent(rng)

    return make


@dataclass
class EvalSummary:
    game_id: str
    split: str
    modules: bool
    episodes: int
    mean_score: float
    mean_steps: float
    results: list[EpisodeResult] = field(default_factory=list)


def evaluate(
    make_agent: AgentFactory,
    game_id: str,
    split: str = "test",
    modules: bool = True,
    episodes: int = VARIATIONS_PER_SPLIT,
    step_cap: int = 50,
) -> EvalSummary:
    game = get_game(game_id)
    results = []
    for index in range(episodes):
        variation = game.generate(split, index)
        results.append(run_episode(variation, make_agent(variation), modules, step_cap))
    return EvalSummary(
        game_id=game_id,
        split=split,
        modules=modules,
        episodes=episodes,
        mean_score=sum(r.score for r in results) / len(results),
        mean_steps=sum(r.steps for r in results) / len(results),
        results=results,
    )


@dataclass
class ActionStats:
    game_id: str
    modules: bool
    episodes: int
    steps_sampled: int
    minimum: int
    mean: float
    maximum: int


def action_stats(
    game_id: str,
    modules: bool = True,
    episodes: int = 10,
    step_cap: int = 50,
    run_seed: int = 0,
) -> ActionStats:
    """Valid-action counts measured by a random agent on training episodes."""
    game = get_game(game_id)
    counts: list[int] = []
    for index in range(episodes):
        variation = game.generate("train", index)
        rng = random.Random(derive_seed("action-stats", game_id, index, run_seed))
        episode = Episode(variation, modules=modules, step_cap=step_cap)
        while not episode.over:
            surfaces = episode.valid_actions().surfaces()
            counts.append(len(surfaces))
            episode.step(rng.choice(surfaces))
    return ActionStats(
        game_id=game_id,
        modules=modules,
        episodes=episodes,
        steps_sampled=len(counts),
        minimum=min(counts),
        mean=sum(counts) / len(counts),
        maximum=max(counts),
    )
