from typing import List

from .domain_event import DomainEvent


class AggregateRoot:
    """Consistency boundary that records domain events until they are drained"""

    def __init__(self, name: str):
        if not name:
            raise ValueError("Aggregate name cannot be empty")
        self._name = name
        self._domain_events: List[DomainEvent] = []

    @property
    def name(self) -> str:
        return self._name

    def add_domain_event(self, event: DomainEvent) -> None:
        self._domain_events.append(event)

    def pull_domain_events(self) -> List[DomainEvent]:
        """Return and forget the pending events"""
        events, self._domain_events = self._domain_events, []
        return events

    @property
    def has_domain_events(self) -> bool:
        return len(self._domain_events) > 0

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self._name!r})"
