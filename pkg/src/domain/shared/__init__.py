"""
Domain shared kernel
Base classes and the exception hierarchy shared by every domain package
"""

from .value_object import ValueObject, frozen_array, as_index_tuple
from .aggregate_root import AggregateRoot
from .domain_event import DomainEvent
from .exceptions import (
    DomainException,
    InvalidArgumentException,
    BusinessRuleViolationException,
    NumericalFailureException,
    FitException,
)

__all__ = [
    "ValueObject",
    "frozen_array",
    "as_index_tuple",
    "AggregateRoot",
    "DomainEvent",
    "DomainException",
    "InvalidArgumentException",
    "BusinessRuleViolationException",
    "NumericalFailureException",
    "FitException",
]
