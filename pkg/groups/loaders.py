"""
Loading Cayley tables from files.
Supports the plain text format (.txt, .table), CSV (.csv) and JSON (.json).

Text format: line 1 holds n, the next n lines hold n space-separated
indices each, and an optional final line holds n element names.
"""
import json
from pathlib import Path
from typing import List, Optional, Tuple

import pandas as pd

from factorlab.exceptions import TableFileError

from .specs import GroupSpec
from .tables import GroupTable, from_cayley_table


def parse_table_text(text: str) -> Tuple[List[List[int]], Optional[List[str]]]:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise TableFileError("Table file is empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise TableFileError(f"First line must be the group order, got {lines[0]!r}")
    if len(lines) < n + 1:
        raise TableFileError(f"Expected {n} table rows, found {len(lines) - 1}")
    try:
        rows = [[int(token) for token in line.split()] for line in lines[1:n + 1]]
    except ValueError as e:
        raise TableFileError(f"Table rows must contain integers: {e}")
    names = None
    if len(lines) > n + 1:
        names = lines[n + 1].split()
        if len(lines) > n + 2:
            raise TableFileError("Unexpected content after the names line")
    return rows, names


class CayleyTableLoader:
    """Reads and validates a Cayley table file."""

    SUPPORTED_FORMATS = ("txt", "table", "csv", "json")

    def __init__(self, path):
        self.path = Path(path)
        self.rows = None
        self.names = None

    def validate_file_format(self):
        """Validate that the file is in a supported format."""
        extension = self.path.suffix.lstrip(".").lower() or "txt"
        if extension not in self.SUPPORTED_FORMATS:
            raise TableFileError(
                f"Unsupported file format: {extension}. Supported formats: {', '.join(self.SUPPORTED_FORMATS)}"
            )
        return extension

    def parse_file(self):
        """Parse the file into table rows and optional names."""
        extension = self.validate_file_format()
        if not self.path.exists():
            raise TableFileError(f"Table file not found: {self.path}")

        try:
            if extension == "csv":
                frame = pd.read_csv(self.path, header=None)
                self.rows = frame.to_numpy().tolist()
            elif extension == "json":
                with self.path.open("r") as f:
                    payload = json.load(f)
                if isinstance(payload, dict):
                    self.rows = payload["table"]
                    self.names = payload.get("names")
                else:
                    self.rows = payload
            else:
                self.rows, self.names = parse_table_text(self.path.read_text())
        except TableFileError:
            raise
        except Exception as e:
            raise TableFileError(f"Error parsing file: {str(e)}")

        if not self.rows:
            raise TableFileError("File is empty or contains no table")
        return self.rows, self.names

    def load(self) -> GroupTable:
        rows, names = self.parse_file()
        group = from_cayley_table(rows, names)
        return group.with_spec(GroupSpec(f"table:{self.path.name}", group.order))
