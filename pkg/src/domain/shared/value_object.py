from abc import ABC
from typing import Any, Iterable

import numpy as np


def frozen_array(values: Any, dtype=float) -> np.ndarray:
    """Copy ``values`` into a read-only numpy array"""
    array = np.array(values, dtype=dtype, copy=True)
    array.flags.writeable = False
    return array


class ValueObject(ABC):
    """Immutable value compared by its components.

    Subclasses list their identity in ``_equality_components``; numpy arrays are
    compared by shape and raw bytes.
    """

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, self.__class__):
            return False
        return self._hashable_components() == other._hashable_components()

    def __hash__(self) -> int:
        return hash(self._hashable_components())

    def _equality_components(self) -> tuple:
        raise NotImplementedError

    def _hashable_components(self) -> tuple:
        return tuple(_hashable(c) for c in self._equality_components())

    def __repr__(self) -> str:
        attrs = ", ".join(
            f"{k.lstrip('_')}={_short(v)}"
            for k, v in self.__dict__.items()
            if k.startswith("_") and not k.startswith("__")
        )
        return f"{self.__class__.__name__}({attrs})"


def _hashable(component: Any) -> Any:
    if isinstance(component, np.ndarray):
        return (component.shape, component.tobytes())
    if isinstance(component, (list, tuple)):
        return tuple(_hashable(c) for c in component)
    return component


def _short(value: Any) -> str:
    if isinstance(value, np.ndarray):
        return f"array(shape={value.shape})"
    return repr(value)


def as_index_tuple(values: Iterable[int]) -> tuple:
    return tuple(int(v) for v in values)
