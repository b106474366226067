"""Cached correlation repository implementation"""

import logging
from typing import Callable, Optional

from domain.chain import ChainParams, Correlations, CorrelationRepository, build_correlations
from ..cache import CacheManager

logger = logging.getLogger(__name__)


class CachedCorrelationRepository(CorrelationRepository):
    """Mode sums computed once per (N, alpha) and kept in the cache"""

    CACHE_PREFIX = "correlations"

    def __init__(
        self,
        cache_manager: CacheManager,
        builder: Callable[[ChainParams], Correlations] = build_correlations,
        ttl: Optional[int] = None,
    ):
        self._cache = cache_manager
        self._builder = builder
        self._ttl = ttl
        self._keys = set()

    def _key(self, params: ChainParams) -> str:
        return f"{self.CACHE_PREFIX}:{params.n_sites}:{params.alpha!r}"

    async def get(self, params: ChainParams) -> Correlations:
        key = self._key(params)
        cached = await self._cache.get(key)
        if cached is not None:
            logger.debug(f"Correlations for N={params.n_sites} alpha={params.alpha} from cache")
            return cached

        logger.info(f"Computing correlations for N={params.n_sites} alpha={params.alpha}")
        correlations = self._builder(params)
        await self._cache.set(key, correlations, ttl=self._ttl)
        self._keys.add(key)
        return correlations

    async def clear_cache(self) -> None:
        for key in self._keys:
            await self._cache.delete(key)
        self._keys.clear()
        logger.info("Correlation cache cleared")
