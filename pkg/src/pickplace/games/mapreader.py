"""Map reading game.

A small house of 4-15 connected rooms.  The agent starts in the room with
the box, holding a map of the whole house, and must fetch the coin from a
named room 1-4 hops away and drop it in the box.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .. import actions as A
from ..modules import NavigationModule, SymbolicModule
from ..pathing import first_hop
from .. import world as W
from ..world import DIRECTIONS, OPPOSITE, Entity, Room, WorldState, render_room, the_list
from . import decor
from .base import Game, ScoreTracker

MIN_ROOMS, MAX_ROOMS = 4, 15
MAX_DEGREE = len(DIRECTIONS)
MAX_EXTRA_EDGES = 3
MIN_DISTANCE, MAX_DISTANCE = 1, 4

Edge = tuple[str, str, str]  # (room, direction, room)


@lru_cache(maxsize=1)
def location_pool() -> tuple[str, ...]:
    text = resources.files("pickplace.data").joinpath("locations.txt").read_text()
    return tuple(line.strip() for line in text.splitlines() if line.strip())


@dataclass
class MapParams:
    rooms: tuple[str, ...]
    edges: tuple[Edge, ...]
    start: str
    target: str
    distance: int


def adjacency(edges: tuple[Edge, ...]) -> dict[str, list[str]]:
    """Neighbor lists in edge insertion order, the order the map prints them."""
    adj: dict[str, list[str]] = {}
    for u, _, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def map_text(params: MapParams) -> str:
    adj = adjacency(params.edges)
    lines = ["The map reads:"]
    for room in params.rooms:
        lines.append(f"  The {room} connects to {the_list(adj[room])}.")
    return "\n".join(lines)


class MapReaderTracker(ScoreTracker):
    def update(self, state: WorldState, action: A.Action) -> None:
        if action.verb == A.TAKE and action.args[0] == "coin":
            self.score = max(self.score, 0.5)
        elif action.verb == A.PUT and action.args == ("coin", "box"):
            self.score = 1.0
            self.done = True


class MapReaderGame(Game):
    game_id = "mapreader"

    def sample_problem(self, rng: random.Random) -> tuple[tuple, tuple]:
        while True:
            built = self._try_build_map(rng)
            if built is None:
                continue
            rooms, edges, start, target = built
            key = (start, target, frozenset(frozenset((u, v)) for u, _, v in edges))
            return key, (rooms, edges, start, target)

    def _try_build_map(
        self, rng: random.Random
    ) -> tuple[tuple[str, ...], tuple[Edge, ...], str, str] | None:
        n = rng.randint(MIN_ROOMS, MAX_ROOMS)
        rooms = rng.sample(location_pool(), n)
        degree = {room: 0 for room in rooms}
        pairs: list[tuple[str, str]] = []
        linked: set[frozenset[str]] = set()

        def connect(u: str, v: str) -> None:
            pairs.append((u, v))
            linked.add(frozenset((u, v)))
            degree[u] += 1
            degree[v] += 1

        # spanning tree, then a few shortcut edges
        for i in range(1, n):
            candidates = [r for r in rooms[:i] if degree[r] < MAX_DEGREE]
            if not candidates:
                return None
            connect(rng.choice(candidates), rooms[i])
        for _ in range(rng.randint(0, MAX_EXTRA_EDGES)):
            for _ in range(20):
                u, v = rng.sample(rooms, 2)
                if frozenset((u, v)) not in linked and degree[u] < MAX_DEGREE and degree[v] < MAX_DEGREE:
                    connect(u, v)
                    break

        # compass labels, consistent in both directions
        taken: dict[str, set[str]] = {room: set() for room in rooms}
        edges: list[Edge] = []
        for u, v in pairs:
            options = [d for d in DIRECTIONS if d not in taken[u] and OPPOSITE[d] not in taken[v]]
            if not options:
                return None
            direction = rng.choice(options)
            taken[u].add(direction)
            taken[v].add(OPPOSITE[direction])
            edges.append((u, direction, v))

        start = rng.choice(rooms)
        by_distance = self._bfs_layers(adjacency(tuple(edges)), start)
        feasible = [d for d in range(MIN_DISTANCE, MAX_DISTANCE + 1) if by_distance.get(d)]
        distance = rng.choice(feasible)
        target = rng.choice(by_distance[distance])
        return tuple(rooms), tuple(edges), start, target

    @staticmethod
    def _bfs_layers(adj: dict[str, list[str]], start: str) -> dict[int, list[str]]:
        dist = {start: 0}
        layers: dict[int, list[str]] = {}
        queue = deque([start])
        while queue:
            room = queue.popleft()
            for neighbor in adj[room]:
                if neighbor not in dist:
                    dist[neighbor] = dist[room] + 1
                    layers.setdefault(dist[neighbor], []).append(neighbor)
                    queue.append(neighbor)
        return layers

    def build_params(self, payload: tuple, rng: random.Random) -> MapParams:
        rooms, edges, start, target = payload
        adj = adjacency(edges)
        layers = self._bfs_layers(adj, start)
        distance = next(d for d, names in layers.items() if target in names)
        return MapParams(rooms=rooms, edges=edges, start=start, target=target, distance=distance)

    def task_description(self, params: MapParams) -> str:
        return (
            f"Your task is to take the coin that is located in the {params.target}, "
            f"and put it into the box found in the {params.start}. A map is "
            "provided, that you may find helpful."
        )

    def build_world(self, params: MapParams) -> WorldState:
        state = WorldState(
            rooms={name: Room(id=name, name=name) for name in params.rooms},
            entities={},
            agent_location=params.start,
        )
        for u, direction, v in params.edges:
            state.rooms[u].connections[direction] = v
            state.rooms[v].connections[OPPOSITE[direction]] = u

        def add(room: str, entity: Entity) -> None:
            state.entities[entity.id] = entity
            state.rooms[room].contents.append(entity.id)

        for name in params.rooms:
            if name == params.start:
                add(name, Entity(id="box", name="box", kind=W.CONTAINER, article="a", open=True))
            if name == params.target:
                add(name, Entity(id="coin", name="coin", kind=W.PORTABLE, article="a"))
            for spec in decor.MAP_DECOR[name]:
                add(name, decor.make_furniture(name, spec))

        the_map = Entity(
            id="map", name="map", kind=W.READABLE, article="a", text=map_text(params)
        )
        state.entities[the_map.id] = the_map
        state.inventory.append(the_map.id)
        return state

    def oracle_actions(self, params: MapParams) -> list[str]:
        # plan with the same navigator an agent would use, fed the same
        # observations, so quoted replies and chosen moves always agree
        nav = NavigationModule()
        nav.observe(render_room(self.build_world(params)))
        nav.observe(map_text(params))
        compass = {}
        for u, direction, v in params.edges:
            compass[(u, v)] = direction
            compass[(v, u)] = OPPOSITE[direction]

        plan = ["read map"]
        current = params.start
        for destination in (params.target, params.start):
            while current != destination:
                hop = first_hop(nav.adjacency, current, destination)
                plan.append(f"next step to {destination}")
                plan.append(f"move {compass[(current, hop)]}")
                current = hop
            if destination == params.target:
                plan.append("take coin")
        plan.append("put coin in box")
        return plan

    def make_tracker(self, params: MapParams) -> ScoreTracker:
        return MapReaderTracker()

    def make_module(self, params: MapParams) -> SymbolicModule:
        return NavigationModule()
