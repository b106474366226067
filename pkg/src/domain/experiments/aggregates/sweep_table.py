"""Sweep table aggregate"""

from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from domain.shared import AggregateRoot, InvalidArgumentException, BusinessRuleViolationException
from ..events import SweepRowRecordedEvent, SweepCompletedEvent

SETTING1_COLUMNS = (
    "d",
    "E_B_opt",
    "E_N_before",
    "E_N_after",
    "delta_E_N",
    "S_M_before",
    "S_M_after",
    "delta_S_M",
)
SETTING2_COLUMNS = ("ell", "delta_E_N", "E_B_abs", "ratio")
SIZE_SWEEP_COLUMNS = ("N", "delta_E_N", "E_B_abs", "beta")


class SweepTable(AggregateRoot):
    """Rows of one sweep, kept in the order they were recorded.

    The first column is the sweep abscissa. A completed table accepts no more rows.
    """

    def __init__(self, name: str, columns: Sequence[str]):
        super().__init__(name)
        if not columns:
            raise InvalidArgumentException("columns", "A sweep table needs at least one column")
        if len(set(columns)) != len(columns):
            raise InvalidArgumentException("columns", f"Duplicate column names: {list(columns)}")
        self._columns: Tuple[str, ...] = tuple(columns)
        self._rows: List[Tuple[float, ...]] = []
        self._completed = False

    @property
    def columns(self) -> Tuple[str, ...]:
        return self._columns

    @property
    def rows(self) -> List[Tuple[float, ...]]:
        return list(self._rows)

    @property
    def completed(self) -> bool:
        return self._completed

    def __len__(self) -> int:
        return len(self._rows)

    def record(self, row: Mapping[str, float]) -> None:
        if self._completed:
            raise BusinessRuleViolationException("sweep_completed", f"Sweep {self.name!r} is already complete")
        missing = [c for c in self._columns if c not in row]
        extra = [k for k in row if k not in self._columns]
        if missing or extra:
            raise InvalidArgumentException(
                "row", f"Row does not match columns (missing {missing}, unexpected {extra})"
            )
        values = tuple(row[c] for c in self._columns)
        self._rows.append(values)
        self.add_domain_event(SweepRowRecordedEvent(self.name, len(self._rows) - 1, values[0]))

    def complete(self) -> None:
        if self._completed:
            return
        self._completed = True
        self.add_domain_event(SweepCompletedEvent(self.name, len(self._rows)))

    def column(self, name: str) -> np.ndarray:
        try:
            index = self._columns.index(name)
        except ValueError:
            raise InvalidArgumentException("name", f"Unknown column {name!r}") from None
        return np.array([row[index] for row in self._rows], dtype=float)

    def as_dicts(self) -> List[Dict[str, float]]:
        return [dict(zip(self._columns, row)) for row in self._rows]
