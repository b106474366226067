"""Dependency injection container"""

from typing import Dict, Type, Callable, Any, Optional
import logging

from domain.chain import CorrelationRepository
from ..config import Settings, get_settings
from ..cache import CacheManager, MemoryCacheManager
from ..filesystem import KeyValueConfigStorage, CsvTableStorage
from ..repositories import CachedCorrelationRepository

from application.services import ExperimentService, ValidationService

logger = logging.getLogger(__name__)

CONFIG_KEYS = (
    "n",
    "alpha",
    "omega",
    "d_min",
    "d_max",
    "ell_min",
    "ell_max",
    "n_list",
    "fit_min",
    "fit_max",
    "out",
    "seed",
    "threads",
    "samples",
    "cutoff",
    "omega_sensitivity",
    "log_level",
)


class DiContainer:
    def __init__(self):
        self._services: Dict[Type, Callable] = {}
        self._singletons: Dict[Type, Any] = {}
        self._singleton_flags: Dict[Type, bool] = {}

    def register(self, interface: Type, implementation: Callable, singleton: bool = False):
        """
        Args:
            interface: Interface type
            implementation: Factory taking the container
            singleton: Build once and reuse
        """
        self._services[interface] = implementation
        self._singleton_flags[interface] = singleton
        if singleton:
            self._singletons[interface] = None
        logger.debug(f"Registered {interface.__name__} (singleton={singleton})")

    def resolve(self, interface: Type) -> Any:
        if interface not in self._services:
            raise KeyError(f"Service {interface.__name__} not registered")

        if self._singleton_flags.get(interface, False):
            if self._singletons[interface] is None:
                logger.debug(f"Creating singleton instance of {interface.__name__}")
                self._singletons[interface] = self._services[interface](self)
            return self._singletons[interface]

        logger.debug(f"Creating new instance of {interface.__name__}")
        return self._services[interface](self)


def setup_container(settings: Optional[Settings] = None) -> DiContainer:
    container = DiContainer()
    settings = settings or get_settings()

    container.register(
        CacheManager,
        lambda c: MemoryCacheManager(default_ttl=settings.cache_ttl),
        singleton=True,
    )

    container.register(
        CorrelationRepository,
        lambda c: CachedCorrelationRepository(cache_manager=c.resolve(CacheManager)),
        singleton=True,
    )

    container.register(
        KeyValueConfigStorage,
        lambda c: KeyValueConfigStorage(CONFIG_KEYS),
        singleton=True,
    )

    container.register(
        CsvTableStorage,
        lambda c: CsvTableStorage(settings.csv_significant_digits),
        singleton=True,
    )

    container.register(
        ExperimentService,
        lambda c: ExperimentService(
            correlation_repo=c.resolve(CorrelationRepository),
            max_workers=settings.max_workers,
        ),
        singleton=True,
    )

    container.register(
        ValidationService,
        lambda c: ValidationService(
            correlation_repo=c.resolve(CorrelationRepository),
            max_workers=settings.max_workers,
            samples=settings.samples,
            cutoff=settings.fock_cutoff,
            seed=settings.seed,
        ),
        singleton=True,
    )

    logger.debug("Dependency injection container configured")
    return container
