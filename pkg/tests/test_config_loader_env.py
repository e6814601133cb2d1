from __future__ import annotations

import json

import pytest

from arrangementatlas.config.loader import load_config


def _write_config(tmp_path, **search) -> str:
    cfg = {
        "app": {"name": "Test"},
        "search": {"node_cap": 1000, "chamber_cap": 500, **search},
        "chambers": {"method": "lp"},
        "algebra": {"field": "fp:5", "cordovil_max_rows": 77},
        "formality": {"closure_chamber_cap": 64},
        "report": {"sigma_chain": True, "indent": 0},
        "bench": {"repeats": 3, "out_dir": "out/bench"},
        "logging": {"level": "INFO", "format": "%(message)s"},
    }
    path = tmp_path / "config.json"
    path.write_text(json.dumps(cfg), encoding="utf-8")
    return str(path)


def test_file_values_are_loaded(tmp_path) -> None:
    cfg = load_config(_write_config(tmp_path), base_dir=tmp_path)
    assert cfg.search.node_cap == 1000
    assert cfg.chambers.method == "lp"
    assert cfg.algebra.field == "fp:5"
    assert cfg.algebra.cordovil_max_rows == 77
    assert cfg.formality.closure_chamber_cap == 64
    assert cfg.report.sigma_chain is True
    assert cfg.bench.out_dir == tmp_path / "out" / "bench"


def test_env_overrides_caps_and_field(monkeypatch, tmp_path) -> None:
    path = _write_config(tmp_path)
    monkeypatch.setenv("ARRANGEMENTATLAS_NODE_CAP", "2_000")
    monkeypatch.setenv("ARRANGEMENTATLAS_CHAMBER_CAP", "40")
    monkeypatch.setenv("ARRANGEMENTATLAS_FIELD", "q")
    monkeypatch.setenv("ARRANGEMENTATLAS_LOG_LEVEL", "DEBUG")

    cfg = load_config(path, base_dir=tmp_path)
    assert cfg.search.node_cap == 2000
    assert cfg.search.chamber_cap == 40
    assert cfg.algebra.field == "q"
    assert cfg.logging.level == "DEBUG"


def test_invalid_env_override_is_ignored(monkeypatch, tmp_path) -> None:
    path = _write_config(tmp_path)
    monkeypatch.setenv("ARRANGEMENTATLAS_NODE_CAP", "-3")
    monkeypatch.setenv("ARRANGEMENTATLAS_FIELD", "reals")

    cfg = load_config(path, base_dir=tmp_path)
    assert cfg.search.node_cap == 1000
    assert cfg.algebra.field == "fp:5"


def test_invalid_file_value_names_the_key(tmp_path) -> None:
    path = _write_config(tmp_path, node_cap=0)
    with pytest.raises(ValueError, match="search.node_cap"):
        load_config(path, base_dir=tmp_path)


def test_missing_default_config_yields_defaults(monkeypatch, tmp_path) -> None:
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("ARRANGEMENTATLAS_CONFIG_PATH", raising=False)
    cfg = load_config(base_dir=tmp_path)
    assert cfg.search.node_cap == 50_000_000
    assert cfg.formality.closure_chamber_cap == 50_000
    assert cfg.algebra.field == "q"


def test_explicit_missing_path_raises(tmp_path) -> None:
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "nope.json")
