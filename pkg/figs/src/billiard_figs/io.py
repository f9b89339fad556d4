"""CSV artifact loading with schema verification.

Artifacts carry a ``# schema=<name> version=<v>`` first line, further
``# key=value`` metadata lines, then a header row.  Loading checks the
schema name and the expected columns and reports an explicit column diff
on mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np


class SchemaError(ValueError):
    """Wrong schema name or column set for an artifact."""


@dataclass
class Table:
    schema: str
    meta: dict
    columns: list[str]
    rows: list[list[str]]

    def floats(self, column: str) -> np.ndarray:
        i = self.columns.index(column)
        return np.array([float(r[i]) for r in self.rows])

    def strings(self, column: str) -> list[str]:
        i = self.columns.index(column)
        return [r[i] for r in self.rows]


def load_table(path: Path, schema: str, required_columns: list[str]) -> Table:
    """Load and verify one artifact; raises with a column diff on mismatch."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"missing input artifact: {path}")
    meta: dict = {}
    found_schema = None
    columns: list[str] | None = None
    rows: list[list[str]] = []
    for line in path.read_text().splitlines():
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("schema="):
                parts = dict(p.split("=", 1) for p in body.split() if "=" in p)
                found_schema = parts.get("schema")
                meta["schema_version"] = parts.get("version", "?")
            elif "=" in body:
                key, value = body.split("=", 1)
                meta[key.strip()] = value.strip()
            continue
        if columns is None:
            columns = line.split(",")
            continue
        rows.append(line.split(","))
    if found_schema != schema:
        raise SchemaError(f"{path.name}: expected schema {schema!r}, found {found_schema!r}")
    if columns is None:
        raise SchemaError(f"{path.name}: no header row")
    missing = [c for c in required_columns if c not in columns]
    extra = [c for c in columns if c not in required_columns]
    if missing:
        raise SchemaError(
            f"{path.name}: column mismatch; missing {missing}, found extra {extra or 'none'}"
        )
    return Table(schema=schema, meta=meta, columns=columns, rows=rows)


def load_histogram(path: Path, schema: str) -> tuple[np.ndarray, np.ndarray, np.ndarray, dict]:
    """Histogram artifact: returns (edges, counts, densities, meta)."""
    t = load_table(path, schema, ["bin_lo", "bin_hi", "count", "density"])
    lo = t.floats("bin_lo")
    hi = t.floats("bin_hi")
    edges = np.concatenate([lo, hi[-1:]])
    return edges, t.floats("count"), t.floats("density"), t.meta
