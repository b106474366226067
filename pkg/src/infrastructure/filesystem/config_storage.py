"""Configuration storage"""

import logging
from pathlib import Path
from typing import Dict, Iterable, Union

import aiofiles

from ..config import ConfigurationException

logger = logging.getLogger(__name__)


class KeyValueConfigStorage:
    """Plain ``key = value`` files; ``#`` starts a comment, blank lines are skipped.

    Keys use the flag spelling with ``-`` replaced by ``_``. Values are returned as
    strings; typing them is the caller's job.
    """

    def __init__(self, allowed_keys: Iterable[str]):
        self._allowed_keys = frozenset(allowed_keys)

    @property
    def allowed_keys(self) -> frozenset:
        return self._allowed_keys

    async def load(self, config_file: Union[str, Path]) -> Dict[str, str]:
        config_file = Path(config_file)
        try:
            async with aiofiles.open(config_file, "r", encoding="utf-8") as f:
                content = await f.read()
        except OSError as e:
            raise ConfigurationException("config", f"Cannot read config file {config_file}: {e}") from e

        values = self.parse(content, source=str(config_file))
        logger.info(f"Loaded {len(values)} settings from {config_file}")
        return values

    def parse(self, content: str, source: str = "<config>") -> Dict[str, str]:
        values: Dict[str, str] = {}
        for number, raw in enumerate(content.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigurationException("config", f"{source}:{number}: expected 'key = value', got {raw.strip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in self._allowed_keys:
                raise ConfigurationException(key, f"{source}:{number}: unknown key {key!r}")
            if not value:
                raise ConfigurationException(key, f"{source}:{number}: empty value for {key!r}")
            if key in values:
                raise ConfigurationException(key, f"{source}:{number}: {key!r} set twice")
            values[key] = value
        return values
