from __future__ import annotations

import pytest

from arrangementatlas.errors import ResourceCapExceeded
from arrangementatlas.formality.relations import closure_chamber_gain, formal_closure, is_formal, relation_spaces
from arrangementatlas.geometry.chambers import enumerate_chambers
from arrangementatlas.schemas.core import Arrangement


def test_relation_space_dimensions(catalog) -> None:
    arr = catalog["x2"]
    spaces = relation_spaces(arr)
    assert len(spaces.full) == arr.n - arr.rank
    assert len(spaces.rank2) <= len(spaces.full)


@pytest.mark.parametrize("name", ["x2", "d4", "er_minus1", "braid4", "ziegler_general"])
def test_formal_entries(catalog, name: str) -> None:
    verdict = is_formal(catalog[name].essentialize())
    assert verdict.verdict is True
    assert verdict.defect == 0


def test_generic_arrangement_is_not_formal() -> None:
    # No three of these normals are coplanar, so there are no rank-2 relations at all.
    arr = Arrangement.from_normals([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], name="generic4")
    verdict = is_formal(arr)
    assert verdict.verdict is False
    assert verdict.defect == 1
    assert formal_closure(arr).rank == 4
    assert closure_chamber_gain(arr) == 16 - 14


def test_closure_of_a_formal_arrangement_keeps_its_chambers(catalog) -> None:
    arr = catalog["x2"]
    closure = formal_closure(arr)
    assert closure.rank == arr.rank
    assert closure.name == "x2:closure"
    assert closure_chamber_gain(arr) == 0


def test_ziegler_special_closure_gains_chambers(catalog) -> None:
    arr = catalog["ziegler_special"]
    verdict = is_formal(arr)
    assert verdict.verdict is False
    assert verdict.defect == 1
    closure = formal_closure(arr)
    assert closure.rank == arr.rank + 1
    assert enumerate_chambers(closure).count > enumerate_chambers(arr).count
    assert closure_chamber_gain(arr) > 0


def test_closure_rank_alone_can_exceed_the_chamber_cap(catalog) -> None:
    # Rank 4 closure has at least 16 chambers.
    with pytest.raises(ResourceCapExceeded) as info:
        closure_chamber_gain(catalog["ziegler_special"], chamber_cap=8)
    assert info.value.cap == "closure_chamber_cap"
    assert info.value.stage == "closure"


def test_closure_gain_reuses_a_known_chamber_count(catalog) -> None:
    arr = catalog["ziegler_special"]
    base = enumerate_chambers(arr).count
    assert closure_chamber_gain(arr, base_count=base) == closure_chamber_gain(arr)
