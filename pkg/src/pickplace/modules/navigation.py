"""Navigation module.

Builds a room graph from whatever the agent reads: the current room line,
the "To the <Direction> you see the <room>." sightings, and the full map
listing.  Offers a "next step to <room>" command for every known room,
answered with the first hop of the breadth-first route from wherever the
agent currently is.
"""

from __future__ import annotations

import re

from ..actions import Action, module_action
from ..errors import InvalidAction, NoKnownPath, NothingObserved, UnknownTarget
from ..pathing import first_hop

_CURRENT = re.compile(r"You are (?:currently )?in the (.+?)\.")
_SIGHTING = re.compile(r"To the (North|South|East|West) you see the (.+?)\.")
_MAP_LINE = re.compile(r"The (.+?) connects to (.+?)\.")
_LIST_SEP = re.compile(r",\s*|\s+and\s+")


def _strip_the(name: str) -> str:
    return name[4:] if name.startswith("the ") else name


class NavigationModule:
    name = "navigation"

    def __init__(self) -> None:
        self.adjacency: dict[str, list[str]] = {}  # insertion-ordered neighbors
        self.current: str | None = None

    def _add_room(self, room: str) -> None:
        self.adjacency.setdefault(room, [])

    def _add_edge(self, a: str, b: str) -> None:
        self._add_room(a)
        self._add_room(b)
        if b not in self.adjacency[a]:
            self.adjacency[a].append(b)
        if a not in self.adjacency[b]:
            self.adjacency[b].append(a)

    def observe(self, text: str) -> None:
        match = _CURRENT.search(text)
        if match:
            self.current = match.group(1)
            self._add_room(self.current)
        for direction_match in _SIGHTING.finditer(text):
            if self.current is not None:
                self._add_edge(self.current, direction_match.group(2))
        for map_match in _MAP_LINE.finditer(text):
            source = _strip_the(map_match.group(1))
            for target in _LIST_SEP.split(map_match.group(2)):
                target = _strip_the(target.strip())
                if target:
                    self._add_edge(source, target)

    def enumerate(self) -> list[Action]:
        return [
            module_action(f"next step to {room}", "next_step", room)
            for room in self.adjacency
        ]

    def respond(self, action: Action) -> str:
        if len(action.args) < 2 or action.args[0] != "next_step":
            raise InvalidAction(action.surface)
        target = action.args[1]
        if self.current is None:
            raise NothingObserved("no location observed yet")
        if target not in self.adjacency:
            raise UnknownTarget(target)
        if target == self.current:
            return f"You are already in the {target}."
        hop = first_hop(self.adjacency, self.current, target)
        if hop is None:
            raise NoKnownPath(f"{self.current} -> {target}")
        return f"The next location to go to is: {hop}"
