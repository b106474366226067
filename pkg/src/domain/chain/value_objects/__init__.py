"""Chain value objects"""

from .chain_params import ChainParams, AlphaPreset, resolve_alpha
from .correlations import Correlations

__all__ = [
    "ChainParams",
    "AlphaPreset",
    "resolve_alpha",
    "Correlations",
]
