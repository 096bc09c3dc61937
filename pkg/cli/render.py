"""
Rendering of result records: aligned tables or one JSON object per line.

Both modes render the same dumped payload, so their numbers are identical.
"""

import json
import sys
from typing import List, Sequence

from pydantic import BaseModel

from models import validate_record

TABLE = "table"
RECORDS = "records"


def _is_scalar(value) -> bool:
    return not isinstance(value, (list, dict))


def render_records(records: Sequence[BaseModel]) -> str:
    return "\n".join(json.dumps(validate_record(record), ensure_ascii=False) for record in records)


def render_table(records: Sequence[BaseModel]) -> str:
    rows = [validate_record(record) for record in records]
    if not rows:
        return ""
    columns = [key for key, value in rows[0].items() if key != "kind" and _is_scalar(value)]
    nested = [key for key, value in rows[0].items() if not _is_scalar(value)]
    cells = [[_cell(row[key]) for key in columns] for row in rows]
    widths = [max(len(column), *(len(line[i]) for line in cells)) for i, column in enumerate(columns)]

    lines: List[str] = [
        "  ".join(column.ljust(width) for column, width in zip(columns, widths)),
        "  ".join("-" * width for width in widths),
    ]
    for row, line in zip(rows, cells):
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
        for key in nested:
            if row.get(key):
                lines.append(f"  {key}: {json.dumps(row[key], ensure_ascii=False)}")
    return "\n".join(lines)


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render(records: Sequence[BaseModel], mode: str) -> str:
    return render_records(records) if mode == RECORDS else render_table(records)


def emit(records: Sequence[BaseModel], mode: str) -> None:
    """Print rendered results on stdout."""
    text = render(records, mode)
    if text:
        print(text)


def diagnostic(message: str) -> None:
    """One-line diagnostic on stderr."""
    print(f"error: {message}", file=sys.stderr)
