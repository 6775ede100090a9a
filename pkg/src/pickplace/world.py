"""World model: rooms, entities, and the text renderer.

Everything an agent reads is produced here from fixed sentence templates,
so rendering is a pure function of world state.  Entity listing order is
the order entities were inserted at generation time.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContainerClosed, NoSuchEntity, NotPortable
from .quantities import Quantity

Direction = str
RoomId = str
EntityId = str

DIRECTIONS: tuple[Direction, ...] = ("north", "south", "east", "west")
OPPOSITE: dict[Direction, Direction] = {
    "north": "south",
    "south": "north",
    "east": "west",
    "west": "east",
}

# entity kinds
PORTABLE = "portable"
CONTAINER = "container"
FIXTURE = "fixture"
READABLE = "readable"  # a portable that can also be read

# the four sentence openers a room description cycles through
_LEADS = (
    "In one part of the room you see",
    "There is also",
    "You also see",
    "In another part of the room you see",
)


@dataclass
class Entity:
    id: EntityId
    name: str                      # display name, e.g. "white coat", "2 bananas"
    kind: str
    article: str = "a"             # "" for quantified bundles
    # containers: True = open, False = closed, None = open-topped surface
    open: bool | None = None
    contents: list[EntityId] = field(default_factory=list)
    quantity: Quantity | None = None
    text: str | None = None        # readables carry their text here

    @property
    def portable(self) -> bool:
        return self.kind in (PORTABLE, READABLE)

    @property
    def accepts_items(self) -> bool:
        return self.kind == CONTAINER and self.open is not False


@dataclass
class Room:
    id: RoomId
    name: str                                   # bare name, e.g. "laundry room"
    contents: list[EntityId] = field(default_factory=list)
    connections: dict[Direction, RoomId] = field(default_factory=dict)


@dataclass
class WorldState:
    rooms: dict[RoomId, Room]
    entities: dict[EntityId, Entity]
    agent_location: RoomId
    inventory: list[EntityId] = field(default_factory=list)
    step_count: int = 0
    score: float = 0.0
    done: bool = False
    seed: int = 0                  # seed of the variation this state came from


@dataclass(frozen=True)
class Observation:
    """The three text channels an agent sees each step."""

    text: str       # feedback from the latest action (or the initial look)
    inv_text: str
    look_text: str


def comma_and(items: list[str]) -> str:
    """Join like the room lister: "a, b, and c" (comma kept for two items)."""
    if len(items) == 1:
        return items[0]
    return ", ".join(items[:-1]) + ", and " + items[-1]


def the_list(names: list[str]) -> str:
    """Join like the map text: "the a, b and c" (no comma before "and")."""
    if len(names) == 1:
        return f"the {names[0]}"
    head = ", ".join(names[:-1])
    return f"the {head} and {names[-1]}"


def _item_phrase(entity: Entity) -> str:
    return f"{entity.article} {entity.name}" if entity.article else entity.name


def entity_phrase(state: WorldState, entity: Entity) -> str:
    """Noun phrase for one entity as it appears in a room sentence."""
    lead = _item_phrase(entity)
    if entity.kind != CONTAINER:
        return lead
    held = [_item_phrase(state.entities[eid]) for eid in entity.contents]
    if entity.open is None:  # surface
        if not held:
            return f"{lead}, that has nothing on it"
        return f"{lead} that has {comma_and(held)} on it"
    if entity.open is False:
        return f"{lead} that is closed"
    if not held:
        return f"{lead}, that is empty"
    return f"{lead}, that contains {comma_and(held)}"


def render_room(state: WorldState) -> str:
    """Full description of the agent's current room, one paragraph."""
    room = state.rooms[state.agent_location]
    parts = [f"You are in the {room.name}."]
    for i, eid in enumerate(room.contents):
        parts.append(f"{_LEADS[i % 4]} {entity_phrase(state, state.entities[eid])}.")
    for direction in DIRECTIONS:
        if direction in room.connections:
            neighbor = state.rooms[room.connections[direction]]
            parts.append(f"To the {direction.capitalize()} you see the {neighbor.name}.")
    return " ".join(parts)


def render_inventory(state: WorldState) -> str:
    if not state.inventory:
        return "Your inventory is currently empty."
    return "\n".join(_item_phrase(state.entities[eid]) for eid in state.inventory)


def visible_portables(state: WorldState) -> list[Entity]:
    """Portable entities reachable in the current room, in listing order.

    Items inside closed containers are not visible and not returned.
    """
    room = state.rooms[state.agent_location]
    found: list[Entity] = []
    for eid in room.contents:
        entity = state.entities[eid]
        if entity.portable:
            found.append(entity)
        elif entity.kind == CONTAINER and entity.open is not False:
            found.extend(state.entities[inner] for inner in entity.contents)
    return found


def open_receptacles(state: WorldState) -> list[Entity]:
    """Containers in the current room that can receive items."""
    room = state.rooms[state.agent_location]
    return [
        state.entities[eid]
        for eid in room.contents
        if state.entities[eid].accepts_items
    ]


def find_placement(state: WorldState, eid: EntityId) -> tuple[str, str]:
    """Locate an entity: ("inventory", ""), ("room", rid) or ("container", eid)."""
    if eid not in state.entities:
        raise NoSuchEntity(eid)
    if eid in state.inventory:
        return ("inventory", "")
    for room in state.rooms.values():
        if eid in room.contents:
            return ("room", room.id)
    for other in state.entities.values():
        if eid in other.contents:
            return ("container", other.id)
    raise NoSuchEntity(f"{eid} is not placed anywhere")


def _detach(state: WorldState, eid: EntityId) -> None:
    kind, where = find_placement(state, eid)
    if kind == "inventory":
        state.inventory.remove(eid)
    elif kind == "room":
        state.rooms[where].contents.remove(eid)
    else:
        state.entities[where].contents.remove(eid)


def move_entity(state: WorldState, eid: EntityId, dest: tuple[str, str]) -> None:
    """Relocate a portable entity.  dest is ("inventory", ""), ("room", rid)
    or ("container", container_eid).  Moving to the current placement is a
    no-op that still succeeds.
    """
    entity = state.entities.get(eid)
    if entity is None:
        raise NoSuchEntity(eid)
    if not entity.portable:
        raise NotPortable(entity.name)
    where, target = dest
    if where == "container":
        holder = state.entities.get(target)
        if holder is None:
            raise NoSuchEntity(target)
        if holder.kind != CONTAINER:
            raise ContainerClosed(f"{holder.name} cannot hold items")
        if holder.open is False:
            raise ContainerClosed(holder.name)
    elif where == "room":
        if target not in state.rooms:
            raise NoSuchEntity(target)
    elif where != "inventory":
        raise NoSuchEntity(f"bad destination {dest!r}")
    _detach(state, eid)
    if where == "inventory":
        state.inventory.append(eid)
    elif where == "room":
        state.rooms[target].contents.append(eid)
    else:
        state.entities[target].contents.append(eid)


def placement_snapshot(state: WorldState) -> tuple:
    """Hashable summary of where everything is, ignoring the step counter.

    Used to compare world states for equality in purity checks.
    """
    rooms = tuple(
        (rid, tuple(state.rooms[rid].contents)) for rid in sorted(state.rooms)
    )
    containers = tuple(
        (eid, tuple(state.entities[eid].contents))
        for eid in sorted(state.entities)
        if state.entities[eid].kind == CONTAINER
    )
    return (
        state.agent_location,
        tuple(state.inventory),
        rooms,
        containers,
        state.score,
        state.done,
    )
