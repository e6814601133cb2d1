from __future__ import annotations

import sys
from pathlib import Path

import pytest


def pytest_configure(config) -> None:
    """
    Keep a `src/` layout while allowing `pytest` to run without requiring an editable install.
    """

    project_root = Path(__file__).resolve().parents[1]
    src_path = project_root / "src"
    sys.path.insert(0, str(src_path))


@pytest.fixture(scope="session")
def catalog():
    from arrangementatlas.catalog import families, named

    return {
        "boolean3": families.boolean(3),
        "braid4": families.braid(4),
        "typeB3": families.type_b(3),
        "three_lines": named.three_lines(),
        "u24": named.u24(),
        "cycle4": named.cycle4(),
        "x2": named.x2(),
        "d4": named.d4(),
        "bracelet": named.bracelet(),
        "er_minus1": named.edelman_reiner(-1),
        "er_0": named.edelman_reiner(0),
        "er_1": named.edelman_reiner(1),
        "ziegler_special": named.ziegler("special"),
        "ziegler_general": named.ziegler("general"),
    }


@pytest.fixture(scope="session")
def small_catalog(catalog):
    """Entries cheap enough for every stage, including Cordovil over several fields."""

    keep = ("boolean3", "braid4", "typeB3", "three_lines", "u24", "cycle4", "x2", "er_minus1", "er_0")
    return {name: catalog[name] for name in keep}
