from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from arrangementatlas.catalog.registry import is_catalog_spec, parse_spec
from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.rational import format_rational, to_rational
from arrangementatlas.schemas.core import Arrangement


logger = logging.getLogger(__name__)


def parse_text(text: str, *, name: str | None = None) -> Arrangement:
    """
    Text format: a header line `d n`, then d lines of n rationals.

    Columns are normals. Blank lines and `#` comments are skipped.
    """

    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ArrangementError("Empty arrangement file")
    header = lines[0].split()
    if len(header) != 2:
        raise ArrangementError(f"Header must be 'd n', got {lines[0]!r}")
    try:
        d, n = int(header[0]), int(header[1])
    except ValueError:
        raise ArrangementError(f"Header must hold two integers, got {lines[0]!r}") from None
    if d <= 0 or n <= 0:
        raise ArrangementError(f"Header needs positive d and n, got d={d} n={n}")
    body = lines[1:]
    if len(body) != d:
        raise ArrangementError(f"Expected {d} coordinate rows, got {len(body)}")

    rows = []
    for i, line in enumerate(body):
        values = line.split()
        if len(values) != n:
            raise ArrangementError(f"Row {i + 1} has {len(values)} entries, expected {n}")
        rows.append([to_rational(v) for v in values])
    normals = [[rows[i][j] for i in range(d)] for j in range(n)]
    return Arrangement.from_normals(normals, name=name)


def parse_json(text: str, *, name: str | None = None) -> Arrangement:
    """JSON format: `{"normals": [[...], ...]}` with one list per hyperplane; entries are `"p/q"` strings or integers."""

    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementError(f"Invalid JSON: {exc}") from None
    if not isinstance(raw, dict) or not isinstance(raw.get("normals"), list):
        raise ArrangementError("JSON input must be an object with a 'normals' list")
    normals = raw["normals"]
    if not all(isinstance(v, list) for v in normals):
        raise ArrangementError("Every normal must be a list of rationals")
    return Arrangement.from_normals(normals, name=raw.get("name") or name)


def load_arrangement(source: str | Path) -> Arrangement:
    """Catalog spec (`d4`, `er:-1`) or a path to a text or JSON file."""

    text_source = str(source)
    path = Path(text_source)
    if not path.exists():
        if is_catalog_spec(text_source):
            entry = parse_spec(text_source)
            logger.info("Loaded catalog entry %s (n=%s)", text_source, entry.arrangement.n)
            return Arrangement(entry.arrangement.normals, name=text_source)
        raise ArrangementError(f"No such file or catalog entry: {text_source}")

    content = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json" or content.lstrip().startswith("{"):
        arr = parse_json(content, name=path.stem)
    else:
        arr = parse_text(content, name=path.stem)
    logger.info("Loaded %s (n=%s d=%s)", path, arr.n, arr.d)
    return arr


def to_json_dict(arr: Arrangement) -> dict[str, Any]:
    out: dict[str, Any] = {"normals": [[format_rational(x) for x in v] for v in arr.normals]}
    if arr.name:
        out["name"] = arr.name
    return out


def to_text(arr: Arrangement) -> str:
    lines = [f"{arr.d} {arr.n}"]
    for i in range(arr.d):
        lines.append(" ".join(format_rational(v[i]) for v in arr.normals))
    return "\n".join(lines) + "\n"
