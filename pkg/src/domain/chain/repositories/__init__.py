from .correlation_repository import CorrelationRepository

__all__ = ["CorrelationRepository"]
