from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Any, Mapping, Optional

from arrangementatlas.config.models import (
    AlgebraSettings,
    AppConfig,
    AppSettings,
    BenchSettings,
    ChamberSettings,
    FormalitySettings,
    LoggingSettings,
    ReportSettings,
    SearchSettings,
    default_config,
)


logger = logging.getLogger(__name__)


def load_dotenv_if_available(path: str = ".env") -> None:
    try:
        from dotenv import load_dotenv  # type: ignore
    except ModuleNotFoundError:
        # Tiny `.env` reader so caps can still be set locally without the dev extra installed.
        dotenv_path = Path(path)
        if not dotenv_path.exists():
            return
        for line in dotenv_path.read_text(encoding="utf-8").splitlines():
            raw = line.strip()
            if not raw or raw.startswith("#"):
                continue
            if raw.startswith("export "):
                raw = raw[len("export ") :].strip()
            if "=" not in raw:
                continue
            key, value = raw.split("=", 1)
            key = key.strip()
            value = value.strip()
            if not key:
                continue
            if (value.startswith('"') and value.endswith('"')) or (value.startswith("'") and value.endswith("'")):
                value = value[1:-1]
            # Match python-dotenv default: do not override existing env vars.
            os.environ.setdefault(key, value)
        return
    load_dotenv(path)


def _parse_positive_int(value: str) -> Optional[int]:
    try:
        parsed = int(value.strip().replace("_", ""))
    except ValueError:
        return None
    return parsed if parsed > 0 else None


def _parse_field_name(value: str) -> Optional[str]:
    v = value.strip().lower()
    if v == "q":
        return v
    if v.startswith("fp:") and v[3:].isdigit():
        return v
    return None


def _as_path(value: str, *, base_dir: Path) -> Path:
    candidate = Path(value)
    return candidate if candidate.is_absolute() else (base_dir / candidate)


def _require_positive(section: str, key: str, value: Any) -> int:
    try:
        parsed = int(value)
    except (TypeError, ValueError):
        raise ValueError(f"Config {section}.{key} must be an integer, got {value!r}") from None
    if parsed <= 0:
        raise ValueError(f"Config {section}.{key} must be positive, got {parsed}")
    return parsed


def _env_override(name: str, parser, current):
    raw = os.getenv(name)
    if not raw:
        return current
    parsed = parser(raw)
    if parsed is None:
        logger.warning("Ignoring invalid %s=%r", name, raw)
        return current
    return parsed


def load_config(path: Optional[str | Path] = None, *, base_dir: Optional[Path] = None) -> AppConfig:
    """
    Load typed analysis config from JSON.

    - A missing config file yields the built-in defaults (environment overrides still apply).
    - Path resolution is relative to `base_dir` (defaults to current working directory).
    - `.env` is loaded when python-dotenv is installed (dev convenience).
    """

    load_dotenv_if_available()

    config_path = Path(
        path
        or os.getenv("ARRANGEMENTATLAS_CONFIG_PATH", "config/default.json")
    ).resolve()
    base_dir = (base_dir or Path.cwd()).resolve()

    defaults = default_config()
    raw: Mapping[str, Any] = {}
    if config_path.exists():
        raw = json.loads(config_path.read_text(encoding="utf-8"))
    elif path is not None:
        raise FileNotFoundError(f"Config file not found: {config_path}")

    app_raw: Mapping[str, Any] = raw.get("app", {})
    app = AppSettings(name=str(app_raw.get("name", defaults.app.name)))

    search_raw: Mapping[str, Any] = raw.get("search", {})
    node_cap = _require_positive("search", "node_cap", search_raw.get("node_cap", defaults.search.node_cap))
    chamber_cap = _require_positive(
        "search", "chamber_cap", search_raw.get("chamber_cap", defaults.search.chamber_cap)
    )
    search = SearchSettings(
        node_cap=_env_override("ARRANGEMENTATLAS_NODE_CAP", _parse_positive_int, node_cap),
        chamber_cap=_env_override("ARRANGEMENTATLAS_CHAMBER_CAP", _parse_positive_int, chamber_cap),
    )

    chambers_raw: Mapping[str, Any] = raw.get("chambers", {})
    chambers = ChamberSettings(method=str(chambers_raw.get("method", defaults.chambers.method)))  # type: ignore[arg-type]
    if chambers.method not in ("restriction", "lp"):
        raise ValueError(f"Unsupported chambers.method: {chambers.method}")

    algebra_raw: Mapping[str, Any] = raw.get("algebra", {})
    field_name = _parse_field_name(str(algebra_raw.get("field", defaults.algebra.field)))
    if field_name is None:
        raise ValueError(f"Unsupported algebra.field: {algebra_raw.get('field')!r}")
    algebra = AlgebraSettings(
        field=_env_override("ARRANGEMENTATLAS_FIELD", _parse_field_name, field_name),
        cordovil_max_rows=_require_positive(
            "algebra",
            "cordovil_max_rows",
            algebra_raw.get("cordovil_max_rows", defaults.algebra.cordovil_max_rows),
        ),
    )

    formality_raw: Mapping[str, Any] = raw.get("formality", {})
    formality = FormalitySettings(
        closure_chamber_cap=_require_positive(
            "formality",
            "closure_chamber_cap",
            formality_raw.get("closure_chamber_cap", defaults.formality.closure_chamber_cap),
        ),
    )

    report_raw: Mapping[str, Any] = raw.get("report", {})
    report = ReportSettings(
        sigma_chain=bool(report_raw.get("sigma_chain", defaults.report.sigma_chain)),
        indent=int(report_raw.get("indent", defaults.report.indent)),
    )

    bench_raw: Mapping[str, Any] = raw.get("bench", {})
    bench = BenchSettings(
        repeats=_require_positive("bench", "repeats", bench_raw.get("repeats", defaults.bench.repeats)),
        out_dir=_as_path(str(bench_raw.get("out_dir", defaults.bench.out_dir)), base_dir=base_dir),
    )

    logging_raw: Mapping[str, Any] = raw.get("logging", {})
    file_value = logging_raw.get("file")
    log_file = None if not file_value else _as_path(str(file_value), base_dir=base_dir)
    level = str(logging_raw.get("level", defaults.logging.level))
    logging_settings = LoggingSettings(
        level=os.getenv("ARRANGEMENTATLAS_LOG_LEVEL") or level,
        format=str(logging_raw.get("format", defaults.logging.format)),
        file=log_file,
    )

    return AppConfig(
        app=app,
        search=search,
        chambers=chambers,
        algebra=algebra,
        formality=formality,
        report=report,
        bench=bench,
        logging=logging_settings,
    )
