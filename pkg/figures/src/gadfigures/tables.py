"""CSV loading for the trajectory / temperature-scan tables.

The producing command line writes plain comma-separated files with a
fixed header; this module only reads them back.  Columns are kept as
strings until a figure asks for them, so a table with extra columns (or
string-valued ones, like the asymptotic scan's ``state``) loads fine.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .errors import MissingColumn, UnreadableInput


@dataclass(frozen=True)
class Table:
    path: str
    columns: dict

    def has(self, name: str) -> bool:
        return name in self.columns

    def strings(self, name: str) -> list:
        if name not in self.columns:
            raise MissingColumn(f"{self.path!r} lacks required column {name!r}")
        return self.columns[name]

    def floats(self, name: str) -> list:
        values = self.strings(name)
        try:
            return [float(v) for v in values]
        except (TypeError, ValueError) as exc:
            raise UnreadableInput(
                f"column {name!r} of {self.path!r} is not numeric: {exc}"
            ) from exc


def load_table(path) -> Table:
    """Read a CSV into a column-major :class:`Table`.

    Raises :class:`UnreadableInput` when the file is missing, not text,
    not CSV, or contains a header with no data rows.
    """
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.DictReader(handle)
            fieldnames = reader.fieldnames
            if not fieldnames:
                raise UnreadableInput(f"{str(path)!r} has no header row")
            rows = list(reader)
    except OSError as exc:
        raise UnreadableInput(f"cannot read {str(path)!r}: {exc}") from exc
    except (UnicodeDecodeError, csv.Error) as exc:
        raise UnreadableInput(f"{str(path)!r} is not a CSV table: {exc}") from exc
    if not rows:
        raise UnreadableInput(f"{str(path)!r} contains no data rows")
    columns = {}
    for name in fieldnames:
        columns[name] = [row[name] for row in rows]
    return Table(path=str(path), columns=columns)
