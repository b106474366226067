"""Infrastructure cache"""

from .cache_manager import CacheManager
from .memory_cache import MemoryCacheManager

__all__ = [
    "CacheManager",
    "MemoryCacheManager",
]
