"""Infrastructure configuration"""

from .settings import Settings, get_settings
from .exceptions import ConfigurationException
from .constants import APP_VERSION, APP_NAME, LOG_FORMAT

__all__ = [
    "Settings",
    "get_settings",
    "ConfigurationException",
    "APP_VERSION",
    "APP_NAME",
    "LOG_FORMAT",
]
