from __future__ import annotations

from time import perf_counter

import pytest

from arrangementatlas.algebra.cordovil import ideal_chain_dims, is_cordovil_quadratic
from arrangementatlas.algebra.vg import is_vg_quadratic
from arrangementatlas.analysis.pipeline import AnalysisOptions, analyze
from arrangementatlas.analysis.report import check_implications
from arrangementatlas.catalog import families, named
from arrangementatlas.config.models import default_config
from arrangementatlas.errors import ArrangementError
from arrangementatlas.formality.relations import is_formal
from arrangementatlas.geometry.chambers import enumerate_chambers
from arrangementatlas.geometry.sigma import count_sigma, yoshinaga
from arrangementatlas.matroid.chordal import is_chordal
from arrangementatlas.matroid.circuits import circuit_census, circuits
from arrangementatlas.matroid.flats import zaslavsky_chamber_count


OPTIONS = AnalysisOptions(cordovil_max_rows=10_000)


@pytest.mark.slow
def test_remark13_fails_yoshinaga_quickly() -> None:
    arr = named.remark13()
    start = perf_counter()
    assert not yoshinaga(arr)
    assert not is_vg_quadratic(arr)
    assert perf_counter() - start <= 60


@pytest.mark.slow
def test_primegap6_is_not_vg_quadratic() -> None:
    arr = named.primegap6()
    start = perf_counter()
    assert not is_vg_quadratic(arr)
    assert perf_counter() - start <= 120


@pytest.mark.slow
def test_remark13_full_analysis_finishes_with_skipped_stages() -> None:
    start = perf_counter()
    report = analyze(named.remark13(), AnalysisOptions.from_config(default_config()))
    assert perf_counter() - start <= 60
    assert report.yoshinaga is False
    assert report.formal.verdict is False
    assert report.closure_chamber_gain is None
    assert "closure" in report.stages_skipped


@pytest.mark.slow
def test_primegap6_full_analysis_skips_cordovil() -> None:
    start = perf_counter()
    report = analyze(named.primegap6(), AnalysisOptions.from_config(default_config()))
    assert perf_counter() - start <= 120
    assert report.vg_quadratic is False
    assert report.cordovil is None
    assert "cordovil" in report.stages_skipped


def test_d4_yoshinaga_but_cordovil_needs_degree_four() -> None:
    arr = named.d4()
    assert arr.n == 12 and arr.rank == 4
    chambers = enumerate_chambers(arr).count
    assert chambers == 192 == zaslavsky_chamber_count(arr)
    assert count_sigma(arr, 2) == chambers
    assert is_vg_quadratic(arr)

    verdict = is_cordovil_quadratic(arr)
    assert not verdict.quadratic
    assert verdict.min_generator_degrees == (2, 4)

    chain = ideal_chain_dims(arr)
    assert chain[2] == chain[3]
    assert chain[3][:4] == chain[4][:4]
    assert chain[3][4] < chain[4][4]


def test_x2_is_formal_and_quadratic_without_being_chordal() -> None:
    arr = named.x2()
    found = circuits(arr)
    assert circuit_census(found) == {3: 5, 4: 15}
    chordal = is_chordal(arr, found)
    assert not chordal.verdict
    assert chordal.witness is not None and chordal.witness.size == 4
    assert is_cordovil_quadratic(arr, found=found).quadratic
    assert yoshinaga(arr)
    assert is_formal(arr).verdict


@pytest.mark.parametrize("t", [-1, 0, 1])
def test_edelman_reiner_family_is_vg_quadratic(t: int) -> None:
    arr = named.edelman_reiner(t)
    assert is_vg_quadratic(arr)
    assert yoshinaga(arr)


def test_edelman_reiner_minus_one_is_cordovil_quadratic() -> None:
    assert is_cordovil_quadratic(named.edelman_reiner(-1)).quadratic


@pytest.mark.parametrize("t", [0, 1])
def test_edelman_reiner_degenerate_members_collapse_to_k4(t: int) -> None:
    # At t in {0, 1} two of the nine normals coincide with others; the six distinct planes
    # form the graphic arrangement of K4, which is supersolvable.
    arr = named.edelman_reiner(t)
    assert arr.n == 6
    assert is_chordal(arr).verdict
    assert is_cordovil_quadratic(arr).quadratic


def test_bracelet_is_vg_quadratic() -> None:
    arr = named.bracelet()
    assert is_vg_quadratic(arr)
    assert yoshinaga(arr)


def test_ziegler_pair_differs_only_in_formality() -> None:
    special = named.ziegler("special")
    general = named.ziegler("general")
    assert [c.support for c in circuits(special)] == [c.support for c in circuits(general)]
    assert is_formal(general).verdict
    assert not is_formal(special).verdict
    assert not is_cordovil_quadratic(special).quadratic
    assert not is_cordovil_quadratic(general).quadratic


def test_implications_hold_across_the_catalog(catalog) -> None:
    for arr in catalog.values():
        check_implications(analyze(arr, OPTIONS))


@pytest.mark.parametrize("seed", range(40))
def test_implications_hold_on_random_arrangements(seed: int) -> None:
    arr = families.random_integer(4 + seed % 4, 3 + seed % 2, seed=seed)
    check_implications(analyze(arr, OPTIONS))


def _random_graphics():
    out = []
    for seed in range(40):
        try:
            out.append(families.random_graphic(4 + seed % 3, 0.5, seed))
        except ArrangementError:
            continue
    return out


@pytest.mark.parametrize("arr", _random_graphics(), ids=lambda a: a.name)
def test_graphic_chordality_matches_yoshinaga(arr) -> None:
    report = analyze(arr, OPTIONS)
    check_implications(report)
    assert report.chordal.verdict == report.yoshinaga == report.vg_quadratic
    if report.chordal.verdict:
        assert report.formal.verdict


def test_wheel_is_formal_without_being_chordal() -> None:
    spokes = [(0, i) for i in range(1, 5)]
    rim = [(1, 2), (2, 3), (3, 4), (1, 4)]
    arr = families.graphic(spokes + rim, vertices=5, name="wheel4")
    assert is_formal(arr).verdict
    assert not is_chordal(arr).verdict
    assert not yoshinaga(arr)
