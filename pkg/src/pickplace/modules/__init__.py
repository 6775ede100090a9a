"""Symbolic solver modules.

A module watches the observation text stream, keeps whatever internal
notes it wants, and contributes extra commands to the valid action set.
Answering one of its commands returns text only; the world itself is
never touched by a module.
"""

from __future__ import annotations

from ..actions import Action


class SymbolicModule:
    """Base class; concrete modules override the three hooks below."""

    name = "module"

    def observe(self, text: str) -> None:
        """Scrape one observation. Called for every text the agent sees."""

    def enumerate(self) -> list[Action]:
        """Commands this module can currently answer."""
        return []

    def respond(self, action: Action) -> str:
        """Answer one of this module's commands with plain text."""
        raise NotImplementedError


from .calculator import CalculatorModule  # noqa: E402
from .knowledge import KnowledgeBase, KnowledgeModule, load_default_kb  # noqa: E402
from .navigation import NavigationModule  # noqa: E402
from .sorter import SorterModule  # noqa: E402

__all__ = [
    "SymbolicModule",
    "CalculatorModule",
    "SorterModule",
    "NavigationModule",
    "KnowledgeModule",
    "KnowledgeBase",
    "load_default_kb",
]
