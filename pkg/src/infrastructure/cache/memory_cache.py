"""Memory cache manager"""

import time
from dataclasses import dataclass
from typing import Optional, Any, Dict

from .cache_manager import CacheManager


@dataclass
class CacheEntry:

    value: Any
    expires_at: Optional[float]  # monotonic seconds

    def expired(self, now: float) -> bool:
        return self.expires_at is not None and now > self.expires_at


class MemoryCacheManager(CacheManager):
    """Process-local cache; values are stored as-is, not copied"""

    def __init__(self, default_ttl: Optional[int] = None):
        self._cache: Dict[str, CacheEntry] = {}
        self._default_ttl = default_ttl

    async def get(self, key: str) -> Optional[Any]:
        entry = self._cache.get(key)
        if entry is None:
            return None
        if entry.expired(time.monotonic()):
            del self._cache[key]
            return None
        return entry.value

    async def set(self, key: str, value: Any, ttl: Optional[int] = None) -> None:
        ttl = self._default_ttl if ttl is None else ttl
        expires_at = None if ttl is None else time.monotonic() + ttl
        self._cache[key] = CacheEntry(value=value, expires_at=expires_at)

    async def delete(self, key: str) -> None:
        self._cache.pop(key, None)

    def __len__(self) -> int:
        return len(self._cache)
