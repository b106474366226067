"""Sweep table storage"""

import csv
import io
import logging
import math
import numbers
from pathlib import Path
from typing import Union

import aiofiles

from domain.experiments import SweepTable

logger = logging.getLogger(__name__)


class CsvTableStorage:
    """Header plus one line per row; floats carry a fixed number of significant digits"""

    def __init__(self, significant_digits: int = 12):
        self._format = f".{significant_digits}g"

    def format_value(self, value) -> str:
        if isinstance(value, numbers.Integral):
            return str(int(value))
        value = float(value)
        if math.isnan(value):
            return "nan"
        return format(value, self._format)

    def render(self, table: SweepTable) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([self.format_value(v) for v in row])
        return buffer.getvalue()

    async def save(self, table: SweepTable, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        async with aiofiles.open(path, "w", encoding="utf-8", newline="") as f:
            await f.write(self.render(table))
        logger.info(f"Wrote {len(table)} rows of {table.name!r} to {path}")
        return path
