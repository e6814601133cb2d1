from __future__ import annotations

import numpy as np
import pytest

from arrangementatlas.algebra.cordovil import hilbert_series
from arrangementatlas.catalog import families
from arrangementatlas.geometry.chambers import enumerate_chambers
from arrangementatlas.geometry.cone import fourier_motzkin_feasible, strict_cone_feasible, verify_answer
from arrangementatlas.geometry.sigma import count_sigma
from arrangementatlas.matroid.flats import whitney_numbers, zaslavsky_chamber_count
from oracles import brute_force_sigma_chain


CORPUS_SIZE = 200


def _corpus():
    rng = np.random.default_rng(20240611)
    out = []
    for i in range(CORPUS_SIZE):
        d = int(rng.integers(2, 5))
        n = int(rng.integers(d, 8))
        out.append(families.random_integer(n, d, seed=i))
    return out


CORPUS = _corpus()


def _ids(arr) -> str:
    return arr.name


@pytest.mark.parametrize("arr", CORPUS, ids=_ids)
def test_sigma_counts_match_brute_force(arr) -> None:
    expected = brute_force_sigma_chain(arr)
    for k, masks in expected.items():
        assert count_sigma(arr, k) == len(masks), k


@pytest.mark.parametrize("arr", CORPUS, ids=_ids)
def test_chambers_match_zaslavsky_and_cordovil_dims(arr) -> None:
    chambers = enumerate_chambers(arr).count
    assert chambers == zaslavsky_chamber_count(arr)
    series = hilbert_series(arr)
    assert series == whitney_numbers(arr)
    assert sum(series) == chambers


@pytest.mark.parametrize("arr", CORPUS[:60], ids=_ids)
def test_every_feasibility_answer_verifies(arr) -> None:
    normals = arr.integer_normals
    chambers = enumerate_chambers(arr).masks()
    for mask in range(2**arr.n):
        signs = [1 if (mask >> i) & 1 else -1 for i in range(arr.n)]
        answer = strict_cone_feasible(normals, signs)
        assert verify_answer(normals, signs, answer)
        assert answer.nonempty == (mask in chambers)
        assert answer.nonempty == fourier_motzkin_feasible(normals, signs)
