"""Exceptions raised while loading tables or rendering figures."""


class GadFiguresError(Exception):
    """Base class for all errors raised by this package."""


class UnreadableInput(GadFiguresError):
    """An input CSV cannot be opened, parsed, or holds no data rows."""


class MissingColumn(GadFiguresError):
    """An input CSV lacks a column the requested figure needs."""
