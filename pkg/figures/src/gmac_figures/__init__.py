"""Rebuild secrecy region figures from gmac-secrecy CSV files."""

from .csv_io import CsvFormatError, CurveFile, read_curve_csv
from .plotting import FIGURE_INPUTS, build_figure, plot_figure

__version__ = "0.1.0"

__all__ = [
    "CsvFormatError",
    "CurveFile",
    "FIGURE_INPUTS",
    "build_figure",
    "plot_figure",
    "read_curve_csv",
]
