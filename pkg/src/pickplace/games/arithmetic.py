"""Arithmetic game.

One kitchen.  A math problem note gives a two-operand problem; bundles of
fruit sit around the room, one bundle's count equal to the answer and the
rest equal to near-miss results.  Putting any bundle in the box submits
it and ends the episode.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .. import actions as A
from .. import world as W
from ..modules import CalculatorModule, SymbolicModule
from ..quantities import Quantity
from ..world import Entity, Room, WorldState
from . import decor
from .base import Game, ScoreTracker

TASK = (
    "Your first task is to solve the math problem. Then, pick up the item with "
    "the same quantity as the math problem answer, and place it in the box."
)

# (singular, plural) so counts of one render correctly
FRUITS: tuple[tuple[str, str], ...] = (
    ("banana", "bananas"),
    ("orange", "oranges"),
    ("apple", "apples"),
    ("pear", "pears"),
    ("peach", "peaches"),
    ("grape", "grapes"),
    ("strawberry", "strawberries"),
    ("tangerine", "tangerines"),
    ("papaya", "papayas"),
    ("mango", "mangoes"),
    ("plum", "plums"),
    ("cherry", "cherries"),
    ("lemon", "lemons"),
    ("lime", "limes"),
    ("kiwi", "kiwis"),
    ("apricot", "apricots"),
    ("melon", "melons"),
    ("coconut", "coconuts"),
    ("fig", "figs"),
    ("date", "dates"),
)

OPS = ("add", "sub", "mul", "div")
_MAX_PRODUCT = 300  # keeps every count, including the mul distractor, renderable


def _answer(op: str, a: int, b: int) -> int:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    return a // b


def _problem_phrase(op: str, a: int, b: int) -> str:
    if op == "add":
        return f"add {a} and {b}"
    if op == "sub":
        return f"subtract {b} from {a}"
    if op == "mul":
        return f"multiply {a} by {b}"
    return f"divide {a} by {b}"


def _bundle_name(count: int, fruit: tuple[str, str]) -> str:
    return f"{count} {fruit[0] if count == 1 else fruit[1]}"


@dataclass
class Bundle:
    count: int
    name: str  # full display name, e.g. "2 bananas"


@dataclass
class ArithmeticParams:
    op: str
    a: int
    b: int
    answer: int
    target: Bundle
    derived: list[Bundle]  # wrong-operation results, ascending by count
    extras: list[Bundle]   # 1-3 random wrong counts


class ArithmeticTracker(ScoreTracker):
    def __init__(self, target_name: str):
        self.target_name = target_name

    def update(self, state: WorldState, action: A.Action) -> None:
        if action.verb == A.TAKE and action.args[0] == self.target_name:
            self.score = max(self.score, 0.5)
        elif action.verb == A.PUT and action.args[1] == "box":
            # placing anything in the box submits it and ends the game
            self.score = 1.0 if action.args[0] == self.target_name else 0.0
            self.done = True


class ArithmeticGame(Game):
    game_id = "arithmetic"

    def sample_problem(self, rng: random.Random) -> tuple[tuple, tuple]:
        while True:
            op = rng.choice(OPS)
            a = rng.randint(2, 50)
            b = rng.randint(2, 50)
            if a * b > _MAX_PRODUCT:
                continue
            if op == "sub" and a - b < 1:
                continue
            if op == "div" and (a % b != 0):
                continue
            return (op, a, b), (op, a, b)

    def build_params(self, payload: tuple, rng: random.Random) -> ArithmeticParams:
        op, a, b = payload
        answer = _answer(op, a, b)
        derived_counts: list[int] = []
        for other in OPS:
            if other == op:
                continue
            if other == "sub":
                value = abs(a - b)
            elif other == "div":
                hi, lo = max(a, b), min(a, b)
                if hi % lo != 0:
                    continue
                value = hi // lo
            else:
                value = _answer(other, a, b)
            if value >= 1 and value != answer and value not in derived_counts:
                derived_counts.append(value)
        derived_counts.sort()
        used = set(derived_counts) | {answer}
        extras: list[int] = []
        for _ in range(rng.randint(1, 3)):
            while True:
                count = rng.randint(2, _MAX_PRODUCT)
                if count not in used:
                    used.add(count)
                    extras.append(count)
                    break
        fruits = rng.sample(FRUITS, len(derived_counts) + len(extras) + 1)
        bundles = [
            Bundle(count, _bundle_name(count, fruit))
            for count, fruit in zip(derived_counts + extras + [answer], fruits)
        ]
        n_derived = len(derived_counts)
        return ArithmeticParams(
            op=op,
            a=a,
            b=b,
            answer=answer,
            target=bundles[-1],
            derived=bundles[:n_derived],
            extras=bundles[n_derived:-1],
        )

    def task_description(self, params: ArithmeticParams) -> str:
        return TASK

    def problem_text(self, params: ArithmeticParams) -> str:
        phrase = _problem_phrase(params.op, params.a, params.b)
        return (
            f"Your task is to solve the following math problem: {phrase}. Then, "
            "pick up the item with the same quantity as the answer, and place it "
            "in the box."
        )

    def build_world(self, params: ArithmeticParams) -> WorldState:
        room = Room(id="kitchen", name="kitchen")
        state = WorldState(rooms={room.id: room}, entities={}, agent_location=room.id)

        def add(entity: Entity, into: Entity | None = None) -> Entity:
            state.entities[entity.id] = entity
            (into.contents if into else room.contents).append(entity.id)
            return entity

        def bundle_entity(bundle: Bundle) -> Entity:
            material = bundle.name.split(" ", 1)[1]
            return Entity(
                id=f"bundle:{bundle.name}",
                name=bundle.name,
                kind=W.PORTABLE,
                article="",
                quantity=Quantity(bundle.count, None, material),
            )

        for spec in decor.ARITHMETIC_KITCHEN_FRONT:
            add(decor.make_furniture(room.id, spec))
        add(Entity(id="box", name="box", kind=W.CONTAINER, article="a", open=True))
        add(
            Entity(
                id="math problem",
                name="math problem",
                kind=W.READABLE,
                article="a",
                text=self.problem_text(params),
            )
        )
        for spec in decor.ARITHMETIC_KITCHEN_BACK:
            add(decor.make_furniture(room.id, spec))

        chair = state.entities["kitchen:dining chair"]
        counter = state.entities["kitchen:counter"]
        chair_bundles = params.derived + params.extras[:-1]
        counter_bundles = params.extras[-1:] + [params.target]
        for bundle in chair_bundles:
            add(bundle_entity(bundle), into=chair)
        for bundle in counter_bundles:
            add(bundle_entity(bundle), into=counter)
        return state

    def oracle_actions(self, params: ArithmeticParams) -> list[str]:
        return [
            "take math problem",
            "read math problem",
            f"{params.op} {params.a} {params.b}",
            f"take {params.target.name}",
            f"put {params.target.name} in box",
        ]

    def make_tracker(self, params: ArithmeticParams) -> ScoreTracker:
        return ArithmeticTracker(params.target.name)

    def make_module(self, params: ArithmeticParams) -> SymbolicModule:
        return CalculatorModule()
