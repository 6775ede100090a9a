"""Sorter module.

Collects every quantity mention it sees ("25g of oak", "18 marbles") and
can list the collected items in ascending or descending order of their
unit-normalized value.  Descending is defined as the exact reverse of
ascending, so the two orders can never disagree on ties.
"""

from __future__ import annotations

import re

from ..actions import Action, module_action
from ..errors import InvalidAction, NothingObserved
from ..quantities import UNIT_SCALE, Quantity

_MENTION = re.compile(
    r"\b(?P<count>\d+)\s*(?P<unit>mm|cm|ml|mg|kg|g|m|l)\s+of\s+(?P<material>[a-z]+)\b"
    r"|\b(?P<ucount>\d+)\s+(?P<umaterial>[a-z]+)\b"
)


class SorterModule:
    name = "sorter"

    def __init__(self) -> None:
        self.seen: dict[str, Quantity] = {}  # material -> quantity, first-seen order

    def observe(self, text: str) -> None:
        for match in _MENTION.finditer(text):
            if match.group("count"):
                quantity = Quantity(
                    int(match.group("count")),
                    match.group("unit"),
                    match.group("material"),
                )
            else:
                material = match.group("umaterial")
                if material in UNIT_SCALE:
                    continue
                quantity = Quantity(int(match.group("ucount")), None, material)
            self.seen.setdefault(quantity.material, quantity)

    def _ascending(self) -> list[Quantity]:
        return sorted(self.seen.values(), key=lambda q: q.normalized)

    def enumerate(self) -> list[Action]:
        if not self.seen:
            return []
        return [
            module_action("sort ascending", "sort", "ascending"),
            module_action("sort descending", "sort", "descending"),
        ]

    def respond(self, action: Action) -> str:
        order = action.args[1] if len(action.args) > 1 else ""
        if order not in ("ascending", "descending"):
            raise InvalidAction(action.surface)
        if not self.seen:
            raise NothingObserved("no quantified objects observed yet")
        items = self._ascending()
        word = "increasing"
        if order == "descending":
            items = list(reversed(items))
            word = "decreasing"
        listing = ", ".join(q.spaced_name for q in items)
        return f"The observed items, sorted in order of {word} quantity, are: {listing}."
