"""Shortest-path helpers shared by the navigator module and map generation.

Adjacency is a mapping from room name to an ordered sequence of neighbor
names.  Neighbor order is meaningful: breadth-first search visits rooms in
insertion order, which pins down which of several equally short routes is
preferred everywhere in the package.
"""

from __future__ import annotations

from collections import deque
from typing import Mapping, Sequence


def bfs_parents(adj: Mapping[str, Sequence[str]], start: str) -> dict[str, str | None]:
    """Parent pointers of the BFS tree rooted at start."""
    parents: dict[str, str | None] = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for neighbor in adj.get(node, ()):
            if neighbor not in parents:
                parents[neighbor] = node
                queue.append(neighbor)
    return parents


def shortest_path(
    adj: Mapping[str, Sequence[str]], start: str, goal: str
) -> list[str] | None:
    """Rooms from start to goal inclusive, or None when unreachable."""
    parents = bfs_parents(adj, start)
    if goal not in parents:
        return None
    path = [goal]
    while path[-1] != start:
        path.append(parents[path[-1]])  # type: ignore[arg-type]
    path.reverse()
    return path


def first_hop(adj: Mapping[str, Sequence[str]], start: str, goal: str) -> str | None:
    """First room to enter on the preferred shortest route to goal."""
    path = shortest_path(adj, start, goal)
    if path is None or len(path) < 2:
        return None
    return path[1]
