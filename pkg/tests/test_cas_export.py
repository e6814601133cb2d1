from __future__ import annotations

import pytest
import sympy

from arrangementatlas.algebra.cas_export import export_presentation, parse_plain, sympy_generators
from arrangementatlas.catalog import named
from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.fields import PrimeField
from arrangementatlas.geometry.sigma import enumerate_sigma


def test_plain_export_structure() -> None:
    arr = named.three_lines()
    text = export_presentation(arr, 2)
    parsed = parse_plain(text)
    assert parsed["field"] == "QQ"
    assert parsed["variables"] == ["e1", "e2", "e3"]
    assert parsed["relations"] == ["e1^2 - e1", "e2^2 - e2", "e3^2 - e3"]
    assert list(parsed["ideals"]) == ["I2"]
    assert len(parsed["ideals"]["I2"]) == 1


def test_exported_generators_vanish_exactly_on_sigma(catalog) -> None:
    arr = catalog["x2"]
    text = export_presentation(arr, 2, minimal=True)
    polys = sympy_generators(text, "I2")
    symbols = [sympy.Symbol(f"e{i + 1}") for i in range(arr.n)]
    sigma = enumerate_sigma(arr, 2)
    for mask in range(2**arr.n):
        point = {s: (mask >> i) & 1 for i, s in enumerate(symbols)}
        vanishes = all(p.subs(point) == 0 for p in polys)
        assert vanishes == (mask in sigma)


def test_m2_session_compares_ideals(catalog) -> None:
    arr = catalog["x2"]
    text = export_presentation(arr, 2, "m2", compare_with=arr.rank, minimal=True)
    assert text.startswith("S = QQ[e1, e2, e3, e4, e5, e6, e7];")
    assert "I2 = ideal(" in text
    assert "I3 = ideal(" in text
    assert text.rstrip().endswith("print(I2 == I3);")


def test_prime_field_header() -> None:
    text = export_presentation(named.three_lines(), 2, field=PrimeField(3))
    assert text.splitlines()[0] == "field ZZ/3"


def test_unknown_format() -> None:
    with pytest.raises(ArrangementError):
        export_presentation(named.three_lines(), 2, "maple")  # type: ignore[arg-type]
    with pytest.raises(ArrangementError):
        parse_plain("bogus line")
