"""Infrastructure filesystem"""

from .config_storage import KeyValueConfigStorage
from .table_storage import CsvTableStorage

__all__ = ["KeyValueConfigStorage", "CsvTableStorage"]
