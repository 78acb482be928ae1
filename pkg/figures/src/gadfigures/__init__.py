"""Publication figures for the entropy-production bound tables.

Consumes only the CSV files written by the ``gadbounds`` command line;
see :mod:`gadfigures.render` for the figure catalogue.
"""

from .errors import GadFiguresError, MissingColumn, UnreadableInput
from .render import FigureSpec, build, render
from .tables import Table, load_table

__version__ = "0.1.0"

__all__ = [
    "GadFiguresError",
    "MissingColumn",
    "UnreadableInput",
    "FigureSpec",
    "Table",
    "build",
    "load_table",
    "render",
    "__version__",
]
