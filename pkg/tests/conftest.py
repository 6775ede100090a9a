"""Shared fixtures: hand-pinned reference episodes.

The three params objects below reproduce known-good playthroughs exactly,
so tests can byte-compare rendered text without depending on the
procedural generator's RNG draws.
"""

from __future__ import annotations

import pytest

from pickplace.games import EpisodeVariation
from pickplace.games.arithmetic import ArithmeticGame, ArithmeticParams, Bundle
from pickplace.games.mapreader import MapParams, MapReaderGame
from pickplace.games.sorting import SortingGame, SortingParams
from pickplace.quantities import Quantity

# the arithmetic kitchen, verbatim
KITCHEN_START = (
    "You are in the kitchen. In one part of the room you see a fridge that is "
    "closed. There is also a dining chair that has 11 tangerines, 33 papayas, "
    "242 strawberries, and 20 peaches on it. You also see a box, that is empty. "
    "In another part of the room you see a math problem. In one part of the room "
    "you see a dishwasher that is closed. There is also a trash can that is "
    "closed. You also see an oven. In another part of the room you see a cutlery "
    "drawer that is closed. In one part of the room you see a stove. There is "
    "also a kitchen cupboard that is closed. You also see a counter that has "
    "6 oranges, and 2 bananas on it."
)

ARITHMETIC_PROBLEM_TEXT = (
    "Your task is to solve the following math problem: divide 22 by 11. Then, "
    "pick up the item with the same quantity as the answer, and place it in "
    "the box."
)


def make_arithmetic_playthrough_params() -> ArithmeticParams:
    return ArithmeticParams(
        op="div",
        a=22,
        b=11,
        answer=2,
        target=Bundle(2, "2 bananas"),
        derived=[
            Bundle(11, "11 tangerines"),
            Bundle(33, "33 papayas"),
            Bundle(242, "242 strawberries"),
        ],
        extras=[Bundle(20, "20 peaches"), Bundle(6, "6 oranges")],
    )


def make_variation(game, params, split="test", index=0) -> EpisodeVariation:
    """Wrap hand-built params in a variation the runtime will accept."""
    return EpisodeVariation(
        game_id=game.game_id,
        split=split,
        index=index,
        seed=0,
        task_description=game.task_description(params),
        params=params,
        gold_with_modules=game.oracle_actions(params),
        gold_no_modules=[
            a for a in game.oracle_actions(params) if not game.is_module_action(a)
        ],
    )


@pytest.fixture
def arithmetic_playthrough() -> EpisodeVariation:
    return make_variation(ArithmeticGame(), make_arithmetic_playthrough_params())


def make_sorting_playthrough_params() -> SortingParams:
    items = [
        Quantity(15, "kg", "cedar"),
        Quantity(21, "kg", "marble"),
        Quantity(25, "g", "oak"),
        Quantity(47, "g", "brick"),
    ]
    return SortingParams(
        items=items,
        ascending=sorted(items, key=lambda q: q.normalized),
    )


@pytest.fixture
def sorting_playthrough() -> EpisodeVariation:
    return make_variation(SortingGame(), make_sorting_playthrough_params())


# a 15-room house whose corridor neighborhood matches the reference
# transcript: corridor is the hub between the foyer (box) and the
# laundry room (coin)
def make_mapreader_playthrough_params() -> MapParams:
    rooms = (
        "living room", "garage", "laundry room", "backyard", "bedroom",
        "sideyard", "kitchen", "supermarket", "foyer", "pantry",
        "driveway", "street", "alley", "bathroom", "corridor",
    )
    edges = (
        ("living room", "north", "corridor"),
        ("foyer", "east", "corridor"),
        ("corridor", "east", "bedroom"),
        ("corridor", "north", "laundry room"),
        ("living room", "west", "backyard"),
        ("backyard", "north", "alley"),
        ("backyard", "east", "kitchen"),
        ("backyard", "south", "sideyard"),
        ("sideyard", "west", "driveway"),
        ("kitchen", "north", "bathroom"),
        ("kitchen", "east", "pantry"),
        ("alley", "west", "driveway"),
        ("alley", "north", "supermarket"),
        ("alley", "east", "street"),
        ("driveway", "north", "garage"),
    )
    return MapParams(
        rooms=rooms, edges=edges, start="foyer", target="laundry room", distance=2
    )


@pytest.fixture
def mapreader_playthrough() -> EpisodeVariation:
    return make_variation(MapReaderGame(), make_mapreader_playthrough_params())
