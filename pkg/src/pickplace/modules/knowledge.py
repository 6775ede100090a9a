"""Knowledge base module.

A fixed table of (object, located, container) facts about where household
things belong.  The module offers one "query <name>" command per distinct
object and container name; the answer is the matching fact lines.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..actions import Action, module_action
from ..errors import InvalidAction


class KnowledgeBase:
    def __init__(self, triples: list[tuple[str, str]]):
        self.triples = list(triples)  # (object, container), file order
        seen: dict[str, None] = {}
        for obj, container in self.triples:
            seen.setdefault(obj)
        for obj, container in self.triples:
            seen.setdefault(container)
        self.names: list[str] = list(seen)

    def canonical_containers(self, obj: str) -> list[str]:
        return [c for o, c in self.triples if o == obj]

    def matches(self, name: str) -> list[tuple[str, str]]:
        return [(o, c) for o, c in self.triples if o == name or c == name]

    @property
    def objects(self) -> list[str]:
        listed: dict[str, None] = {}
        for obj, _ in self.triples:
            listed.setdefault(obj)
        return list(listed)


def parse_kb_tsv(text: str) -> KnowledgeBase:
    triples = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        obj, relation, container = line.split("\t")
        if relation != "located":
            raise ValueError(f"unexpected relation {relation!r}")
        triples.append((obj, container))
    return KnowledgeBase(triples)


@lru_cache(maxsize=1)
def load_default_kb() -> KnowledgeBase:
    text = resources.files("pickplace.data").joinpath("object_locations.tsv").read_text()
    return parse_kb_tsv(text)


class KnowledgeModule:
    name = "knowledge"

    def __init__(self, kb: KnowledgeBase | None = None):
        self.kb = kb if kb is not None else load_default_kb()
        self._actions = [
            module_action(f"query {name}", "query", name) for name in self.kb.names
        ]

    def observe(self, text: str) -> None:
        pass  # the knowledge base is static

    def enumerate(self) -> list[Action]:
        return self._actions

    def respond(self, action: Action) -> str:
        if len(action.args) < 2 or action.args[0] != "query":
            raise InvalidAction(action.surface)
        name = action.args[1]
        lines = [f"{o} located {c}" for o, c in self.kb.matches(name)]
        if not lines:
            return f"No results found for {name}."
        return "\n".join(lines)
