from __future__ import annotations

from dataclasses import replace
import json
from pathlib import Path

import pytest

from arrangementatlas.analysis.io import load_arrangement, parse_json, parse_text, to_json_dict, to_text
from arrangementatlas.analysis.pipeline import AnalysisOptions, analyze
from arrangementatlas.analysis.report import (
    check_implications,
    render_text,
    report_from_json,
    to_dict,
    to_json,
)
from arrangementatlas.catalog import families, named
from arrangementatlas.config.models import default_config
from arrangementatlas.errors import ArrangementError, ReportInvariantError, ResourceCapExceeded


def test_parse_text_reads_columns_as_normals() -> None:
    arr = parse_text("# three lines\n2 3\n1 0 -1\n0 1 -1\n")
    assert arr == named.three_lines()
    assert parse_text(to_text(named.x2())) == named.x2()


@pytest.mark.parametrize(
    "text",
    ["", "2\n1 0\n0 1\n", "2 2\n1 0\n", "2 2\n1 0\n0\n", "2 2\n1 0\n0 x\n", "1 2\n1 2\n"],
)
def test_parse_text_rejects_malformed_input(text: str) -> None:
    with pytest.raises(ArrangementError):
        parse_text(text)


def test_parse_json_with_rational_strings() -> None:
    arr = parse_json('{"normals": [["1/2", "0"], [0, 1], ["-1", "-1"]], "name": "half"}')
    assert arr.name == "half"
    assert arr.normals[0] == (0.5, 0)
    assert parse_json(json.dumps(to_json_dict(arr))) == arr
    with pytest.raises(ArrangementError):
        parse_json("[1, 2]")
    with pytest.raises(ArrangementError):
        parse_json("{not json")


def test_load_arrangement_from_files_and_catalog(tmp_path) -> None:
    text_path = tmp_path / "lines.txt"
    text_path.write_text("2 3\n1 0 -1\n0 1 -1\n", encoding="utf-8")
    assert load_arrangement(text_path).name == "lines"

    json_path = tmp_path / "lines.json"
    json_path.write_text(json.dumps(to_json_dict(named.u24())), encoding="utf-8")
    assert load_arrangement(json_path) == named.u24()

    assert load_arrangement("er:-1").name == "er:-1"

    with pytest.raises(ArrangementError):
        load_arrangement(tmp_path / "missing.txt")


def test_boolean_report_is_all_true() -> None:
    report = analyze(families.boolean(3))
    assert report.chamber_count == 8
    assert report.yoshinaga and report.vg_quadratic
    assert report.chordal.verdict and report.formal.verdict
    assert report.cordovil is not None and report.cordovil.quadratic
    assert report.cordovil.hilbert == (1, 3, 3, 1)
    assert report.characteristic_polynomial == (1, -3, 3, -1)
    assert report.stages_skipped == ()
    assert report.closure_chamber_gain is None
    assert {"circuits", "chambers", "sigma_2", "vg", "cordovil", "chordal", "formal"} <= set(report.timings)


def test_report_round_trip_and_determinism() -> None:
    first = analyze(named.x2(), AnalysisOptions(sigma_chain=True))
    second = analyze(named.x2(), AnalysisOptions(sigma_chain=True))
    assert report_from_json(to_json(first)) == first
    assert to_json(first, include_timings=False) == to_json(second, include_timings=False)
    payload = to_dict(first)
    assert payload["schema"] == 1
    assert list(payload)[0] == "schema"
    assert payload["normals"][6] == ["1", "1", "-2"]
    assert payload == json.loads(to_json(first))
    assert first.sigma_chain[0] == 2**7
    assert first.sigma_chain[-1] == first.chamber_count


def test_report_rejects_other_schema_versions() -> None:
    payload = to_dict(analyze(named.three_lines()))
    payload["schema"] = 2
    with pytest.raises(ArrangementError):
        report_from_json(json.dumps(payload))


def test_implication_violations_fail_hard() -> None:
    report = analyze(named.three_lines())
    check_implications(report)
    with pytest.raises(ReportInvariantError):
        check_implications(replace(report, vg_quadratic=False))
    with pytest.raises(ReportInvariantError):
        check_implications(replace(report, formal=replace(report.formal, verdict=False)))


def test_cordovil_cap_is_recorded_as_skipped() -> None:
    report = analyze(named.d4(), AnalysisOptions(cordovil_max_rows=10))
    assert report.cordovil is None
    assert report.stages_skipped == ("cordovil",)
    assert report.yoshinaga is True


def test_node_cap_propagates() -> None:
    with pytest.raises(ResourceCapExceeded):
        analyze(named.bracelet(), AnalysisOptions(node_cap=5))


def test_non_formal_reports_closure_gain() -> None:
    report = analyze(named.ziegler("special"), AnalysisOptions(cordovil=False))
    assert report.formal.verdict is False
    assert report.closure_chamber_gain is not None and report.closure_chamber_gain > 0
    assert "cordovil" in report.stages_skipped


def test_closure_cap_is_recorded_as_skipped() -> None:
    report = analyze(named.ziegler("special"), AnalysisOptions(cordovil=False, closure_chamber_cap=8))
    assert report.formal.verdict is False
    assert report.closure_chamber_gain is None
    assert "closure" in report.stages_skipped


def test_non_essential_input_is_essentialized() -> None:
    report = analyze(families.braid(4))
    assert (report.n, report.d, report.rank) == (6, 3, 3)
    assert report.chamber_count == 24


def test_cas_export_from_pipeline(tmp_path) -> None:
    out = tmp_path / "cas" / "x2.m2"
    analyze(named.x2(), AnalysisOptions(export_cas=out, cas_format="m2", cordovil=False))
    assert "print(I2 == I3);" in out.read_text(encoding="utf-8")


def test_options_from_config_prefers_overrides() -> None:
    config = default_config()
    options = AnalysisOptions.from_config(config, field="fp:3", node_cap=None)
    assert options.field == "fp:3"
    assert options.node_cap == config.search.node_cap
    assert options.cordovil_max_rows == config.algebra.cordovil_max_rows
    assert options.closure_chamber_cap == config.formality.closure_chamber_cap


def test_bare_options_carry_the_default_work_caps() -> None:
    config = default_config()
    options = AnalysisOptions()
    assert options.cordovil_max_rows == config.algebra.cordovil_max_rows
    assert options.closure_chamber_cap == config.formality.closure_chamber_cap


def test_render_text_mentions_every_verdict() -> None:
    text = render_text(analyze(named.cycle4()))
    for needle in ("chambers: 14", "yoshinaga", "VG quadratic", "cordovil", "chordal: no", "formal"):
        assert needle in text


def test_shipped_examples_load() -> None:
    root = Path(__file__).resolve().parents[1] / "data" / "examples"
    assert load_arrangement(root / "three_lines.txt") == named.three_lines()
    assert load_arrangement(root / "x2.json") == named.x2()
