from __future__ import annotations

import pytest

from arrangementatlas.catalog import families, named
from arrangementatlas.errors import ArrangementError, ResourceCapExceeded
from arrangementatlas.geometry.chambers import enumerate_chambers
from arrangementatlas.geometry.sigma import (
    PatternConstraint,
    _components,
    count_assignments,
    count_sigma,
    enumerate_sigma,
    iter_assignments,
    sigma_chain,
    yoshinaga,
)
from arrangementatlas.schemas.core import SigmaChain, SignVector
from oracles import brute_force_sigma


def test_count_assignments_splits_components() -> None:
    # Two independent "not all equal" triples plus two free positions.
    nae = frozenset({0b000, 0b111})
    constraints = [
        PatternConstraint(indices=(0, 1, 2), forbidden=nae),
        PatternConstraint(indices=(3, 4, 5), forbidden=nae),
    ]
    assert count_assignments(8, constraints) == 6 * 6 * 4
    assert len(list(iter_assignments(8, constraints))) == 144


def test_components_follow_shared_hyperplanes() -> None:
    constraints = [
        PatternConstraint(indices=(4, 1), forbidden=frozenset({0b00, 0b11})),
        PatternConstraint(indices=(1, 0), forbidden=frozenset({0b00, 0b11})),
        PatternConstraint(indices=(7, 6), forbidden=frozenset({0b00, 0b11})),
    ]
    groups, free = _components(9, constraints)
    assert groups == [[0, 1, 4], [6, 7]]
    assert free == 4
    assert count_assignments(9, constraints) == 2 * 2 * 2**4


def test_count_assignments_with_allowed_patterns() -> None:
    constraint = PatternConstraint(indices=(0, 2), allowed=frozenset({0b01, 0b10}))
    found = list(iter_assignments(3, [constraint]))
    assert found == sorted(found)
    assert all(((m >> 0) & 1) != ((m >> 2) & 1) for m in found)
    assert count_assignments(3, [constraint]) == 4


def test_node_cap() -> None:
    constraints = [PatternConstraint(indices=tuple(range(12)), forbidden=frozenset({0, 0xFFF}))]
    with pytest.raises(ResourceCapExceeded) as info:
        count_assignments(12, constraints, node_cap=100)
    assert info.value.cap == "node_cap"


def test_sigma_one_and_top_level(catalog) -> None:
    arr = catalog["x2"]
    assert count_sigma(arr, 1) == 2**arr.n
    assert count_sigma(arr, arr.rank) == enumerate_chambers(arr).count
    with pytest.raises(ArrangementError):
        count_sigma(arr, 0)


@pytest.mark.parametrize("name", ["x2", "cycle4", "er_minus1", "ziegler_special", "typeB3"])
def test_sigma_matches_brute_force(catalog, name: str) -> None:
    arr = catalog[name]
    for k in range(1, arr.rank + 1):
        expected = brute_force_sigma(arr, k)
        assert enumerate_sigma(arr, k) == expected
        assert count_sigma(arr, k) == len(expected)


def test_sigma_sets_are_nested_and_closed_under_negation(catalog) -> None:
    arr = catalog["bracelet"]
    full = (1 << arr.n) - 1
    previous = None
    for k in range(1, arr.rank + 1):
        current = enumerate_sigma(arr, k)
        assert {full ^ m for m in current} == current
        if previous is not None:
            assert current <= previous
        previous = current


def test_sigma_chain_is_monotone(catalog) -> None:
    chain = sigma_chain(catalog["bracelet"])
    assert chain[1] == 2**9
    assert chain.chamber_count == enumerate_chambers(catalog["bracelet"]).count
    assert list(chain.sigma) == sorted(chain.sigma, reverse=True)
    with pytest.raises(ValueError):
        SigmaChain((4, 8))


def test_rank_two_arrangements_always_satisfy_yoshinaga() -> None:
    assert yoshinaga(named.u24())
    assert yoshinaga(families.boolean(2))


def test_cycle4_fails_yoshinaga() -> None:
    arr = named.cycle4()
    # No triangles, so nothing constrains sigma_2; the 4-cycle removes the two cyclic orientations.
    assert count_sigma(arr, 2) == 16
    assert enumerate_chambers(arr).count == 14
    assert yoshinaga(arr) is False


def test_sign_vector_helpers() -> None:
    v = SignVector.parse("+-+")
    assert v.signs == (1, -1, 1)
    assert str(v.negate()) == "-+-"
    assert v.restrict([2, 1]) == 0b01
    with pytest.raises(ValueError):
        SignVector.from_signs([1, 0])
