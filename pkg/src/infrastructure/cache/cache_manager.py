"""Key-value store behind the correlation repository"""

from abc import ABC, abstractmethod
from typing import Any, Optional


class CacheManager(ABC):
    """Async store of computed values; a miss or an expired entry reads as None"""

    @abstractmethod
    async def get(self, key: str) -> Optional[Any]:
        pass

    @abstractmethod
    async def set(self, key: str, value: Any, ttl: Optional[int] = None) -> None:
        """Store ``value`` under ``key``; ``ttl`` in seconds, None keeps it until deleted"""
        pass

    @abstractmethod
    async def delete(self, key: str) -> None:
        """Drop ``key``; a missing key is not an error"""
        pass
