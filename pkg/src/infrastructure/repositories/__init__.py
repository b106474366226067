"""Infrastructure repository implementations"""

from .cached_correlation_repository import CachedCorrelationRepository

__all__ = [
    "CachedCorrelationRepository",
]
