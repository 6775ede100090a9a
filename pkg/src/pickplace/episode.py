"""Episode runtime: one playable instance of a generated variation.

Each step the agent sees three text channels (feedback, inventory, room),
picks one surface string out of the valid action set, and the dispatcher
routes it: module commands are answered by the attached solver module
without touching the world, everything else goes to the world executor.
Every action, module or environment, consumes exactly one step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import MODULE, Action, enumerate_env_actions, execute_env, parse
from .errors import InvalidAction, SessionClosed
from .games import EpisodeVariation, get_game
from .world import Observation, render_inventory, render_room

STEP_CAP = 50

COMPLETION_TEXT = "Game completed."


@dataclass
class ValidActionSet:
    """The step's action inventory: environment actions plus module commands."""

    env: list[Action]
    module: list[Action]

    def surfaces(self) -> list[str]:
        return [a.surface for a in self.env] + [a.surface for a in self.module]

    def __len__(self) -> int:
        return len(self.env) + len(self.module)

    def __contains__(self, surface: str) -> bool:
        return any(a.surface == surface for a in self.env) or any(
            a.surface == surface for a in self.module
        )


class Episode:
    def __init__(
        self,
        variation: EpisodeVariation,
        modules: bool = True,
        step_cap: int = STEP_CAP,
    ):
        self.variation = variation
        self.game = get_game(variation.game_id)
        self.task_description = variation.task_description
        self.state = self.game.build_world(variation.params)
        self.state.seed = variation.seed
        self.tracker = self.game.make_tracker(variation.params)
        self.module = self.game.make_module(variation.params) if modules else None
        self.step_cap = step_cap
        opening = render_room(self.state)
        if self.module is not None:
            self.module.observe(opening)
        self._observation = self._wrap(opening)

    # -- read side ---------------------------------------------------------

    @property
    def observation(self) -> Observation:
        return self._observation

    @property
    def score(self) -> float:
        return self.state.score

    @property
    def steps(self) -> int:
        return self.state.step_count

    @property
    def over(self) -> bool:
        return self.state.done or self.state.step_count >= self.step_cap

    def valid_actions(self) -> ValidActionSet:
        if self.over:
            return ValidActionSet([], [])
        module_actions = self.module.enumerate() if self.module is not None else []
        return ValidActionSet(enumerate_env_actions(self.state), module_actions)

    # -- write side ----------------------------------------------------------

    def step(self, surface: str) -> Observation:
        if self.over:
            raise SessionClosed("the episode is over")
        action = parse(surface)
        if action.verb == MODULE:
            text = self._module_step(action)
        else:
            text = self._env_step(action)
        self.state.step_count += 1
        if self.module is not None:
            self.module.observe(text)
        self._observation = self._wrap(text)
        return self._observation

    def _module_step(self, action: Action) -> str:
        if self.module is None:
            raise InvalidAction(f"no module answers {action.surface!r}")
        return self.module.respond(action)

    def _env_step(self, action: Action) -> str:
        text = execute_env(self.state, action)
        self.tracker.update(self.state, action)
        self.state.score = self.tracker.score
        if self.tracker.done:
            self.state.done = True
            text = COMPLETION_TEXT
        return text

    def _wrap(self, text: str) -> Observation:
        return Observation(
            text=text,
            inv_text=render_inventory(self.state),
            look_text=render_room(self.state),
        )
