"""Mergeable sample moments"""

import math

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException


class RunningMoments(ValueObject):
    """Count, mean and sum of squared deviations of a sample.

    ``merge`` is associative, so batches can be combined in any grouping.
    """

    def __init__(self, count: int = 0, mean: float = 0.0, m2: float = 0.0):
        if count < 0:
            raise InvalidArgumentException("count", "count cannot be negative")
        self._count = int(count)
        self._mean = float(mean)
        self._m2 = float(m2)

    @classmethod
    def from_samples(cls, samples) -> "RunningMoments":
        samples = np.asarray(samples, dtype=float).ravel()
        if samples.size == 0:
            return cls()
        mean = float(samples.mean())
        return cls(samples.size, mean, float(np.sum((samples - mean) ** 2)))

    def merge(self, other: "RunningMoments") -> "RunningMoments":
        if other.count == 0:
            return self
        if self._count == 0:
            return other
        count = self._count + other.count
        delta = other.mean - self._mean
        mean = self._mean + delta * other.count / count
        m2 = self._m2 + other.m2 + delta * delta * self._count * other.count / count
        return RunningMoments(count, mean, m2)

    @property
    def count(self) -> int:
        return self._count

    @property
    def mean(self) -> float:
        return self._mean

    @property
    def m2(self) -> float:
        return self._m2

    @property
    def variance(self) -> float:
        if self._count < 2:
            return math.nan
        return self._m2 / (self._count - 1)

    @property
    def standard_error(self) -> float:
        if self._count < 2:
            return math.nan
        return math.sqrt(self.variance / self._count)

    def _equality_components(self) -> tuple:
        return (self._count, self._mean, self._m2)
