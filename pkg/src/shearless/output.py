"""Delimited output tables.

Every experiment writes a CSV with a '#'-prefixed header block that echoes
the complete resolved configuration, followed by a column-name row and the
data.  Floats are formatted with 17 significant digits so values round-trip
exactly; nothing time- or host-dependent is written, so reruns with the
same configuration are byte-identical.
"""

import io
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidValue


def format_value(value) -> str:
    """Render a header or cell value deterministically."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


@dataclass
class OutputTable:
    """Named columns plus the header metadata block."""

    name: str
    columns: dict = field(default_factory=dict)
    header: dict = field(default_factory=dict)

    def rows(self) -> int:
        lengths = {len(col) for col in self.columns.values()}
        if len(lengths) > 1:
            raise InvalidValue(f"ragged columns in table {self.name}: {lengths}")
        return lengths.pop() if lengths else 0


def render_table(table: OutputTable) -> str:
    """Serialize a table to CSV text."""
    out = io.StringIO()
    out.write(f"# table = {table.name}\n")
    for key, value in table.header.items():
        out.write(f"# {key} = {format_value(value)}\n")
    names = list(table.columns)
    out.write(",".join(names) + "\n")
    cols = [np.asarray(table.columns[name]) for name in names]
    n_rows = table.rows()
    for r in range(n_rows):
        out.write(",".join(format_value(col[r]) for col in cols) + "\n")
    return out.getvalue()


def write_table(table: OutputTable, path) -> None:
    with open(path, "w") as fh:
        fh.write(render_table(table))


def read_table(path):
    """Parse a table written by ``write_table``.

    Returns (name, header, columns); header values stay strings, data
    columns come back as float arrays.
    """
    header = {}
    names = None
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition("=")
                header[key.strip()] = value.strip()
            elif names is None:
                names = line.split(",")
            else:
                rows.append([float(v) for v in line.split(",")])
    if names is None:
        raise InvalidValue(f"no column row found in {path}")
    data = np.asarray(rows, dtype=float).reshape(len(rows), len(names))
    columns = {name: data[:, k] for k, name in enumerate(names)}
    return header.pop("table", ""), header, columns
