"""Sorting game.

One kitchen holding 3-5 quantified items that share a dimension (mass,
length, volume, or plain counts) but use mixed units.  The items must go
into the box in increasing order of normalized quantity; a wrong
placement ends the episode with score zero.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .. import actions as A
from .. import world as W
from ..modules import SorterModule, SymbolicModule
from ..quantities import DIMENSION_UNITS, Quantity
from ..world import Entity, Room, WorldState
from . import decor
from .base import Game, ScoreTracker

TASK = (
    "Your task is to sort objects by quantity. First, place the object with the "
    "smallest quantity in the box. Then, place the objects with the next smallest "
    "quantity in the box, and repeat until all objects have been placed in the box."
)

MATERIALS: dict[str, tuple[str, ...]] = {
    "mass": (
        "oak", "cedar", "brick", "marble", "copper", "steel", "iron", "granite",
        "limestone", "clay", "sand", "gravel", "chalk", "charcoal", "quartz",
        "slate", "flour", "sugar", "salt", "rice",
    ),
    "length": (
        "rope", "wire", "ribbon", "string", "cable", "chain", "cord", "yarn",
        "twine", "fabric",
    ),
    "volume": (
        "water", "milk", "juice", "oil", "vinegar", "syrup", "paint", "glue",
        "broth", "cider",
    ),
    "count": (
        "marbles", "seashells", "buttons", "pebbles", "beads", "screws", "bolts",
        "washers", "pegs", "tokens",
    ),
}

DIMENSIONS = tuple(MATERIALS)


@dataclass
class SortingParams:
    items: list[Quantity]  # room order
    ascending: list[Quantity]


class SortingTracker(ScoreTracker):
    def __init__(self, expected: list[str]):
        self.expected = expected  # compact names in ascending order
        self.placed = 0

    def update(self, state: WorldState, action: A.Action) -> None:
        if action.verb != A.PUT or action.args[1] != "box":
            return
        if action.args[0] == self.expected[self.placed]:
            self.placed += 1
            self.score = self.placed / len(self.expected)
            if self.placed == len(self.expected):
                self.done = True
        else:
            # out-of-order placement forfeits the episode
            self.score = 0.0
            self.done = True


class SortingGame(Game):
    game_id = "sorting"

    def sample_problem(self, rng: random.Random) -> tuple[tuple, tuple]:
        n = rng.randint(3, 5)
        dimension = rng.choice(DIMENSIONS)
        units = DIMENSION_UNITS.get(dimension, (None,))
        normals: set[Fraction] = set()
        measures: list[tuple[int, str | None]] = []
        while len(measures) < n:
            count = rng.randint(1, 99)
            unit = rng.choice(units)
            normalized = Quantity(count, unit, "x").normalized
            if normalized in normals:
                continue
            normals.add(normalized)
            measures.append((count, unit))
        key = tuple(sorted(normals))
        return key, (dimension, tuple(measures))

    def build_params(self, payload: tuple, rng: random.Random) -> SortingParams:
        dimension, measures = payload
        names = rng.sample(MATERIALS[dimension], len(measures))
        items = [
            Quantity(count, unit, name)
            for (count, unit), name in zip(measures, names)
        ]
        return SortingParams(
            items=items,
            ascending=sorted(items, key=lambda q: q.normalized),
        )

    def task_description(self, params: SortingParams) -> str:
        return TASK

    def build_world(self, params: SortingParams) -> WorldState:
        room = Room(id="kitchen", name="kitchen")
        state = WorldState(rooms={room.id: room}, entities={}, agent_location=room.id)

        def add(entity: Entity, into: Entity | None = None) -> Entity:
            state.entities[entity.id] = entity
            (into.contents if into else room.contents).append(entity.id)
            return entity

        for spec in decor.SORTING_KITCHEN_FRONT:
            add(decor.make_furniture(room.id, spec))
        add(Entity(id="box", name="box", kind=W.CONTAINER, article="a", open=True))
        for spec in decor.SORTING_KITCHEN_BACK:
            add(decor.make_furniture(room.id, spec))

        counter = state.entities["kitchen:counter"]
        chair = state.entities["kitchen:dining chair"]
        half = math.ceil(len(params.items) / 2)
        for i, item in enumerate(params.items):
            add(
                Entity(
                    id=f"item:{item.compact_name}",
                    name=item.compact_name,
                    kind=W.PORTABLE,
                    article="",
                    quantity=item,
                ),
                into=counter if i < half else chair,
            )
        return state

    def oracle_actions(self, params: SortingParams) -> list[str]:
        plan = ["sort ascending"]
        for item in params.ascending:
            plan.append(f"take {item.compact_name}")
            plan.append(f"put {item.compact_name} in box")
        return plan

    def make_tracker(self, params: SortingParams) -> ScoreTracker:
        return SortingTracker([q.compact_name for q in params.ascending])

    def make_module(self, params: SortingParams) -> SymbolicModule:
        return SorterModule()
