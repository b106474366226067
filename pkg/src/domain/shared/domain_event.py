from abc import ABC
from itertools import count

_sequence = count(1)


class DomainEvent(ABC):
    """Something that happened inside an aggregate.

    Events are ordered by a process-wide sequence number instead of wall-clock time so
    that runs stay reproducible.
    """

    def __init__(self):
        self._sequence = next(_sequence)

    @property
    def sequence(self) -> int:
        return self._sequence

    def __repr__(self) -> str:
        fields = ", ".join(
            f"{k}={v!r}" for k, v in self.__dict__.items() if not k.startswith("_")
        )
        return f"{self.__class__.__name__}(#{self._sequence}{', ' if fields else ''}{fields})"
