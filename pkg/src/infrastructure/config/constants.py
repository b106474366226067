"""Application constants"""

from domain.chain import AlphaPreset

APP_NAME = "qetchain"
APP_VERSION = "0.1.0"

DEFAULT_ALPHA = AlphaPreset.A4.alpha
DEFAULT_OMEGA = 1.0
DEFAULT_N_SITES = 100

# Sweep grids
DEFAULT_D_RANGE = (0, 40)
DEFAULT_N_LIST = (20, 40, 60, 80, 100)

# Fit windows (abscissa bounds, inclusive)
SETTING1_FIT_WINDOW = (10.0, 40.0)
SIZE_SWEEP_FIT_WINDOW = (40.0, 100.0)

# Oracles
DEFAULT_FOCK_CUTOFF = 25
DEFAULT_MC_SAMPLES = 1_000_000

# Output
CSV_SIGNIFICANT_DIGITS = 12
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
