"""Dependency injection"""

from .container import CONFIG_KEYS, DiContainer, setup_container

__all__ = [
    "CONFIG_KEYS",
    "DiContainer",
    "setup_container",
]
