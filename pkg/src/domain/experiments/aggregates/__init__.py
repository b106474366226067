from .sweep_table import SweepTable, SETTING1_COLUMNS, SETTING2_COLUMNS, SIZE_SWEEP_COLUMNS

__all__ = ["SweepTable", "SETTING1_COLUMNS", "SETTING2_COLUMNS", "SIZE_SWEEP_COLUMNS"]
