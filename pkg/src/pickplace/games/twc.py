"""Object placement game.

One furnished room with a single misplaced household object on the floor.
The agent must put it where it usually belongs; the knowledge base module
knows the usual places.  Placing the target anywhere ends the episode:
a canonical container scores 1.0, anything else forfeits.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .. import actions as A
from .. import world as W
from ..modules import KnowledgeModule, SymbolicModule, load_default_kb
from ..world import Entity, Room, WorldState
from . import decor
from .base import Game, ScoreTracker

TASK = (
    "Your task is to pick up objects, then place them in their usual locations "
    "in the environment."
)


def _article(name: str) -> str:
    return "an" if name[0] in "aeiou" else "a"


@lru_cache(maxsize=1)
def _room_receptacles() -> dict[str, tuple[str, ...]]:
    """Open container names per placement room, in listing order."""
    return {
        room: tuple(
            name
            for name, _, style in specs
            if style in (decor.OPEN, decor.SURFACE)
        )
        for room, specs in decor.PLACEMENT_ROOMS.items()
    }


@lru_cache(maxsize=1)
def _rooms_by_object() -> dict[str, tuple[str, ...]]:
    """Rooms where each object has at least one canonical container open."""
    kb = load_default_kb()
    receptacles = _room_receptacles()
    placeable: dict[str, tuple[str, ...]] = {}
    for obj in kb.objects:
        canonicals = set(kb.canonical_containers(obj))
        rooms = tuple(
            room for room, names in receptacles.items() if canonicals & set(names)
        )
        if rooms:
            placeable[obj] = rooms
    return placeable


@lru_cache(maxsize=1)
def _objects_by_room() -> dict[str, tuple[str, ...]]:
    by_room: dict[str, list[str]] = {room: [] for room in decor.PLACEMENT_ROOMS}
    for obj, rooms in _rooms_by_object().items():
        for room in rooms:
            by_room[room].append(obj)
    return {room: tuple(objs) for room, objs in by_room.items()}


@dataclass
class TwcParams:
    target: str
    room: str
    canonicals: tuple[str, ...]     # knowledge base order
    destination: str                # first canonical present in the room
    distractors: tuple[str, ...]    # open containers here that are not canonical
    inert: tuple[tuple[str, str], ...]  # correctly placed (object, container)


class TwcTracker(ScoreTracker):
    def __init__(self, target: str, canonicals: tuple[str, ...]):
        self.target = target
        self.canonicals = canonicals

    def update(self, state: WorldState, action: A.Action) -> None:
        if action.verb == A.TAKE and action.args[0] == self.target:
            self.score = max(self.score, 0.5)
        elif action.verb == A.PUT and action.args[0] == self.target:
            # the target's first placement decides the episode
            self.score = 1.0 if action.args[1] in self.canonicals else 0.0
            self.done = True


class TwcGame(Game):
    game_id = "twc"

    def sample_problem(self, rng: random.Random) -> tuple[str, str]:
        obj = rng.choice(sorted(_rooms_by_object()))
        return obj, obj

    def build_params(self, payload: str, rng: random.Random) -> TwcParams:
        kb = load_default_kb()
        target = payload
        room = rng.choice(_rooms_by_object()[target])
        receptacles = _room_receptacles()[room]
        canonicals = tuple(kb.canonical_containers(target))
        destination = next(c for c in canonicals if c in receptacles)
        inert_pool = [o for o in _objects_by_room()[room] if o != target]
        inert_obj = rng.choice(inert_pool)
        inert_dest = next(
            c for c in kb.canonical_containers(inert_obj) if c in receptacles
        )
        return TwcParams(
            target=target,
            room=room,
            canonicals=canonicals,
            destination=destination,
            distractors=tuple(n for n in receptacles if n not in canonicals),
            inert=((inert_obj, inert_dest),),
        )

    def task_description(self, params: TwcParams) -> str:
        return TASK

    def build_world(self, params: TwcParams) -> WorldState:
        room = Room(id=params.room, name=params.room)
        state = WorldState(rooms={room.id: room}, entities={}, agent_location=room.id)
        for spec in decor.PLACEMENT_ROOMS[params.room]:
            furniture = decor.make_furniture(room.id, spec)
            state.entities[furniture.id] = furniture
            room.contents.append(furniture.id)
        target = Entity(
            id=params.target,
            name=params.target,
            kind=W.PORTABLE,
            article=_article(params.target),
        )
        state.entities[target.id] = target
        room.contents.insert(1, target.id)  # on the floor, near the top of the listing
        for obj, container in params.inert:
            entity = Entity(id=obj, name=obj, kind=W.PORTABLE, article=_article(obj))
            state.entities[entity.id] = entity
            state.entities[f"{room.id}:{container}"].contents.append(entity.id)
        return state

    def oracle_actions(self, params: TwcParams) -> list[str]:
        return [
            f"query {params.target}",
            f"take {params.target}",
            f"put {params.target} in {params.destination}",
        ]

    def make_tracker(self, params: TwcParams) -> ScoreTracker:
        return TwcTracker(params.target, params.canonicals)

    def make_module(self, params: TwcParams) -> SymbolicModule:
        return KnowledgeModule(load_default_kb())
