"""Action grammar: parsing, enumeration, and execution of world actions.

The environment understands six verbs (take, put ... in ..., read, move,
look around, inventory).  Solver modules contribute their own commands;
those are parsed here into module actions but answered by the module that
owns them, never by the executor.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import world as W
from .errors import InvalidAction, UnrecognizedCommand
from .world import WorldState

# verb tags
TAKE = "take"
PUT = "put"
READ = "read"
MOVE = "move"
LOOK = "look"
INVENTORY = "inventory"
MODULE = "module"

_ARTICLES = ("the ", "a ", "an ")
_CALC_OPS = ("add", "sub", "mul", "div")


@dataclass(frozen=True)
class Action:
    verb: str
    args: tuple[str, ...]
    surface: str

    def __str__(self) -> str:  # pragma: no cover - convenience only
        return self.surface


def take(name: str) -> Action:
    return Action(TAKE, (name,), f"take {name}")


def put(name: str, container: str) -> Action:
    return Action(PUT, (name, container), f"put {name} in {container}")


def read(name: str) -> Action:
    return Action(READ, (name,), f"read {name}")


def move(direction: str) -> Action:
    return Action(MOVE, (direction,), f"move {direction}")


def look_around() -> Action:
    return Action(LOOK, (), "look around")


def inventory() -> Action:
    return Action(INVENTORY, (), "inventory")


def module_action(surface: str, *args: str) -> Action:
    return Action(MODULE, tuple(args), surface)


def _clean_arg(text: str, what: str) -> str:
    text = text.strip()
    if not text:
        raise UnrecognizedCommand(f"missing {what}")
    if any(text.startswith(a) for a in _ARTICLES):
        # commands reference things by bare display name, never "the X"
        raise UnrecognizedCommand(f"do not use articles: {text!r}")
    return text


def parse(text: str) -> Action:
    """Turn an utterance into a structured action.

    Raises UnrecognizedCommand when the text fits no known command shape.
    Parsing is state-free; whether the action is currently valid is the
    dispatcher's business.
    """
    utterance = re.sub(r"\s+", " ", text).strip().lower()
    if not utterance:
        raise UnrecognizedCommand("empty utterance")
    if utterance == "look around":
        return look_around()
    if utterance == "inventory":
        return inventory()
    head, _, rest = utterance.partition(" ")
    if head == "take":
        return take(_clean_arg(rest, "object"))
    if head == "put":
        item, sep, container = rest.rpartition(" in ")
        if not sep:
            raise UnrecognizedCommand(text)
        return put(_clean_arg(item, "object"), _clean_arg(container, "container"))
    if head == "read":
        return read(_clean_arg(rest, "object"))
    if head == "move":
        if rest not in W.DIRECTIONS:
            raise UnrecognizedCommand(text)
        return move(rest)
    if head == "query":
        name = _clean_arg(rest, "query subject")
        return module_action(f"query {name}", "query", name)
    if utterance.startswith("next step to "):
        room = _clean_arg(utterance[len("next step to "):], "room")
        return module_action(f"next step to {room}", "next_step", room)
    if head in _CALC_OPS:
        parts = rest.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise UnrecognizedCommand(text)
        return module_action(f"{head} {parts[0]} {parts[1]}", head, *parts)
    if head == "sort":
        if rest not in ("ascending", "descending"):
            raise UnrecognizedCommand(text)
        return module_action(f"sort {rest}", "sort", rest)
    raise UnrecognizedCommand(text)


def enumerate_env_actions(state: WorldState) -> list[Action]:
    """All environment actions executable right now, in a stable order.

    Returns an empty list once the episode is done.
    """
    if state.done:
        return []
    actions: list[Action] = []
    for entity in W.visible_portables(state):
        actions.append(take(entity.name))
    receptacles = W.open_receptacles(state)
    for eid in state.inventory:
        held = state.entities[eid]
        for receptacle in receptacles:
            actions.append(put(held.name, receptacle.name))
    for eid in state.inventory:
        held = state.entities[eid]
        if held.kind == W.READABLE:
            actions.append(read(held.name))
    room = state.rooms[state.agent_location]
    for direction in W.DIRECTIONS:
        if direction in room.connections:
            actions.append(move(direction))
    actions.append(look_around())
    actions.append(inventory())
    return actions


def _visible_by_name(state: WorldState, name: str) -> W.Entity:
    for entity in W.visible_portables(state):
        if entity.name == name:
            return entity
    raise InvalidAction(f"you do not see any {name} you can take")


def _held_by_name(state: WorldState, name: str) -> W.Entity:
    for eid in state.inventory:
        if state.entities[eid].name == name:
            return state.entities[eid]
    raise InvalidAction(f"you are not holding any {name}")


def _receptacle_by_name(state: WorldState, name: str) -> W.Entity:
    for entity in W.open_receptacles(state):
        if entity.name == name:
            return entity
    raise InvalidAction(f"there is no open {name} here")


def execute_env(state: WorldState, action: Action) -> str:
    """Apply an environment action to the world and return its feedback text.

    Preconditions mirror enumerate_env_actions: every enumerated action
    executes without error, anything else raises InvalidAction.
    """
    if state.done:
        raise InvalidAction("the game is over")
    if action.verb == TAKE:
        entity = _visible_by_name(state, action.args[0])
        W.move_entity(state, entity.id, ("inventory", ""))
        return f"You take the {entity.name}."
    if action.verb == PUT:
        entity = _held_by_name(state, action.args[0])
        receptacle = _receptacle_by_name(state, action.args[1])
        W.move_entity(state, entity.id, ("container", receptacle.id))
        return f"You put the {entity.name} in the {receptacle.name}."
    if action.verb == READ:
        entity = _held_by_name(state, action.args[0])
        if entity.kind != W.READABLE or entity.text is None:
            raise InvalidAction(f"there is nothing to read on the {entity.name}")
        return entity.text
    if action.verb == MOVE:
        room = state.rooms[state.agent_location]
        dest = room.connections.get(action.args[0])
        if dest is None:
            raise InvalidAction(f"you cannot go {action.args[0]} from here")
        state.agent_location = dest
        return W.render_room(state)
    if action.verb == LOOK:
        return W.render_room(state)
    if action.verb == INVENTORY:
        return W.render_inventory(state)
    raise InvalidAction(f"the environment cannot execute {action.surface!r}")
