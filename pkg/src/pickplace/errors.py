"""Exception types raised by the engine and its modules."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class NoSuchEntity(EngineError):
    """Referenced an entity id or display name that does not exist here."""


class NotPortable(EngineError):
    """Tried to relocate a fixture or other immovable entity."""


class ContainerClosed(EngineError):
    """Tried to move something into a closed container."""


class UnrecognizedCommand(EngineError):
    """The utterance does not match any command the parser knows."""


class InvalidAction(EngineError):
    """The action is well formed but not executable in the current state."""


class UnknownTarget(EngineError):
    """Navigation request names a room the module has never heard of."""


class NoKnownPath(EngineError):
    """No route between two known rooms in the observed graph."""


class NothingObserved(EngineError):
    """A module was asked to answer before it scraped any usable facts."""


class ExhaustedSpace(EngineError):
    """Generation could not find enough unique problems for the splits."""


class SessionClosed(EngineError):
    """The episode already finished; no further actions are accepted."""


class AgentFailure(EngineError):
    """An agent raised mid-episode. Carries the partial trajectory."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
