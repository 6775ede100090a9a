"""Calculator module.

Scrapes the two operands out of a math problem statement once the agent
has read it, then offers the six arithmetic commands over exactly that
operand pair: add, sub both ways, mul, div both ways.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..actions import Action, module_action
from ..errors import InvalidAction

_PROBLEM = re.compile(r"solve the following math problem: (.+?)\.")


def _format_number(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.2f}"


class CalculatorModule:
    name = "calculator"

    def __init__(self) -> None:
        self.operands: tuple[int, int] | None = None

    def observe(self, text: str) -> None:
        match = _PROBLEM.search(text)
        if not match:
            return
        numbers = re.findall(r"\d+", match.group(1))
        if len(numbers) >= 2:
            self.operands = (int(numbers[0]), int(numbers[1]))

    def enumerate(self) -> list[Action]:
        if self.operands is None:
            return []
        a, b = self.operands
        surfaces = (
            f"add {a} {b}",
            f"sub {a} {b}",
            f"sub {b} {a}",
            f"mul {a} {b}",
            f"div {a} {b}",
            f"div {b} {a}",
        )
        return [module_action(s, *s.split()) for s in surfaces]

    def respond(self, action: Action) -> str:
        op, a, b = action.args[0], int(action.args[1]), int(action.args[2])
        if op == "add":
            return f"Adding {a} and {b} results in {a + b}."
        if op == "sub":
            return f"Subtracting {b} from {a} results in {a - b}."
        if op == "mul":
            return f"Multiplying {a} and {b} results in {a * b}."
        if op == "div":
            if b == 0:
                return f"Dividing {a} by 0 is undefined."
            return f"The result of dividing {a} by {b} is {_format_number(Fraction(a, b))}."
        raise InvalidAction(action.surface)
