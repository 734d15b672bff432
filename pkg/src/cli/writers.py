"""
CSV and JSON emission with a self-describing metadata header.

Floats are written with ``repr`` so every value reads back to the same
binary double; no timestamps are recorded, so re-running the echoed
configuration reproduces a file byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

# Add project root to path for config import
sys.path.append(str(Path(__file__).parent.parent.parent))
from config.config import OUTPUT_CONFIG

from src.errors import OutputError

logger = logging.getLogger(__name__)

RUN_CONFIG_KEY = "run_config"


@dataclass
class Table:
    """One block of rows; tables of one ``kind`` share their columns."""

    kind: str
    columns: list[str]
    rows: list[list]
    params: dict = field(default_factory=dict)
    series: float | None = None


@dataclass
class Document:
    metadata: dict
    tables: list[Table]


def format_value(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def _header_value(value) -> str:
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(value, sort_keys=True)
    return format_value(value)


def render_csv(document: Document, kind: str) -> str:
    tables = [table for table in document.tables if table.kind == kind]
    prefix = OUTPUT_CONFIG["comment_prefix"]
    buffer = io.StringIO()
    for key, value in document.metadata.items():
        buffer.write(f"{prefix}{key}={_header_value(value)}\n")
    for i, table in enumerate(tables):
        buffer.write(f"{prefix}series_{i}={_header_value(table.params)}\n")

    with_series = any(table.series is not None for table in tables)
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow((["series"] if with_series else []) + tables[0].columns)
    for table in tables:
        lead = [format_value(table.series)] if with_series else []
        for row in table.rows:
            writer.writerow(lead + [format_value(value) for value in row])
    return buffer.getvalue()


def _json_safe(value):
    """NaN and infinities become null; JSON has no spelling for them."""
    if isinstance(value, dict):
        return {key: _json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(item) for item in value]
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render_json(document: Document) -> str:
    payload = dict(document.metadata)
    payload["series"] = [
        {
            "kind": table.kind,
            "series": table.series,
            "params": table.params,
            "columns": table.columns,
            "rows": table.rows,
        }
        for table in document.tables
    ]
    return json.dumps(_json_safe(payload), indent=2, allow_nan=False) + "\n"


def _write_text(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}", fields=["out"]) from e
    logger.info(f"Wrote {path}")


def write_document(document: Document, fmt: str, out: Path | None) -> list[Path]:
    """Write the document; CSV puts each extra table kind in a sibling file."""
    if fmt == "json":
        _write_text(out, render_json(document))
        return [out] if out else []

    kinds = list(dict.fromkeys(table.kind for table in document.tables))
    written = []
    for i, kind in enumerate(kinds):
        target = out
        if i > 0 and out is not None:
            target = out.with_name(f"{out.stem}_{kind}{out.suffix}")
        _write_text(target, render_csv(document, kind))
        if target is not None:
            written.append(target)
    return written


def read_run_config(path: Path) -> dict:
    """Recover the echoed run configuration from a CSV or JSON output file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot read {path}: {e}", fields=["file"]) from e

    if text.lstrip().startswith("{"):
        try:
            return json.loads(text)[RUN_CONFIG_KEY]
        except (ValueError, KeyError) as e:
            raise OutputError(f"{path} carries no run configuration", fields=["file"]) from e

    marker = f"{OUTPUT_CONFIG['comment_prefix']}{RUN_CONFIG_KEY}="
    for line in text.splitlines():
        if line.startswith(marker):
            try:
                return json.loads(line[len(marker):])
            except ValueError as e:
                raise OutputError(f"malformed run configuration in {path}", fields=["file"]) from e
    raise OutputError(f"{path} carries no run configuration", fields=["file"])
