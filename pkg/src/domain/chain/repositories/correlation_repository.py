"""Correlation repository interface"""

from abc import ABC, abstractmethod

from ..value_objects import ChainParams, Correlations


class CorrelationRepository(ABC):

    @abstractmethod
    async def get(self, params: ChainParams) -> Correlations:
        """Correlations of the chain described by ``params`` (omega is irrelevant)"""
        pass

    @abstractmethod
    async def clear_cache(self) -> None:
        pass
