"""Sweep domain events"""

from domain.shared import DomainEvent


class SweepRowRecordedEvent(DomainEvent):

    def __init__(self, table: str, index: int, key: float):
        super().__init__()
        self.table = table
        self.index = index
        self.key = key


class SweepCompletedEvent(DomainEvent):

    def __init__(self, table: str, n_rows: int):
        super().__init__()
        self.table = table
        self.n_rows = n_rows
