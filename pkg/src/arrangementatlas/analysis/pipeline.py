from __future__ import annotations

from dataclasses import dataclass, replace
import logging
from pathlib import Path
from typing import Optional

from arrangementatlas.algebra.cas_export import CasFormat, export_presentation
from arrangementatlas.algebra.cordovil import is_cordovil_quadratic
from arrangementatlas.algebra.vg import is_vg_quadratic
from arrangementatlas.analysis.report import (
    AnalysisReport,
    ChordalSection,
    CordovilSection,
    FormalSection,
    check_implications,
)
from arrangementatlas.config.models import AppConfig, ChamberMethod
from arrangementatlas.errors import ReportInvariantError, ResourceCapExceeded, StructuralError
from arrangementatlas.exactcore.fields import parse_field
from arrangementatlas.exactcore.rational import format_rational
from arrangementatlas.formality.relations import closure_chamber_gain, is_formal, relation_spaces
from arrangementatlas.geometry.chambers import enumerate_chambers
from arrangementatlas.geometry.sigma import count_sigma
from arrangementatlas.matroid.chordal import is_chordal
from arrangementatlas.matroid.circuits import circuit_census, circuits
from arrangementatlas.matroid.flats import characteristic_polynomial, zaslavsky_chamber_count
from arrangementatlas.schemas.core import Arrangement, SigmaChain
from arrangementatlas.utils.timing import timed_stage


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnalysisOptions:
    field: str = "q"
    sigma_chain: bool = False
    cordovil: bool = True
    node_cap: Optional[int] = None
    chamber_cap: Optional[int] = None
    cordovil_max_rows: Optional[int] = 10_000
    closure_chamber_cap: Optional[int] = 50_000
    chamber_method: ChamberMethod = "restriction"
    export_cas: Optional[Path] = None
    cas_format: CasFormat = "plain"

    @classmethod
    def from_config(cls, config: AppConfig, **overrides) -> "AnalysisOptions":
        base = cls(
            field=config.algebra.field,
            sigma_chain=config.report.sigma_chain,
            node_cap=config.search.node_cap,
            chamber_cap=config.search.chamber_cap,
            cordovil_max_rows=config.algebra.cordovil_max_rows,
            closure_chamber_cap=config.formality.closure_chamber_cap,
            chamber_method=config.chambers.method,
        )
        return replace(base, **{k: v for k, v in overrides.items() if v is not None})


def analyze(arr: Arrangement, options: Optional[AnalysisOptions] = None) -> AnalysisReport:
    """
    Run every stage on `arr` (essentialized first) and assemble a checked report.

    Cap errors propagate, except from the Cordovil stage and the formal-closure chamber count,
    which are recorded in `stages_skipped` instead.
    """

    options = options or AnalysisOptions()
    field = parse_field(options.field)
    arr = arr.essentialize()
    r = arr.rank
    timings: dict[str, float] = {}
    skipped: list[str] = []
    logger.info("Analyzing %s: n=%s r=%s field=%s", arr.name or "input", arr.n, r, field.name)

    with timed_stage(timings, "circuits"):
        found = circuits(arr)
    with timed_stage(timings, "characteristic_polynomial"):
        chi = characteristic_polynomial(arr)

    with timed_stage(timings, "chambers"):
        chamber_count = enumerate_chambers(
            arr, method=options.chamber_method, chamber_cap=options.chamber_cap
        ).count
    if chamber_count != zaslavsky_chamber_count(arr):
        raise ReportInvariantError(
            f"Chamber count {chamber_count} disagrees with Zaslavsky count {zaslavsky_chamber_count(arr)}"
        )

    with timed_stage(timings, "sigma_2"):
        sigma_2 = chamber_count if r <= 2 else count_sigma(arr, 2, node_cap=options.node_cap, method=options.chamber_method)

    chain: Optional[tuple[int, ...]] = None
    if options.sigma_chain:
        with timed_stage(timings, "sigma_chain"):
            values = [2**arr.n] + ([sigma_2] if r > 2 else [])
            values += [count_sigma(arr, k, node_cap=options.node_cap, method=options.chamber_method) for k in range(3, r)]
            if r > 1:
                values.append(chamber_count)
            chain = SigmaChain(tuple(values)).sigma

    with timed_stage(timings, "vg"):
        vg_quadratic = is_vg_quadratic(arr, field, node_cap=options.node_cap, found=found)

    cordovil: Optional[CordovilSection] = None
    if options.cordovil:
        try:
            with timed_stage(timings, "cordovil"):
                verdict = is_cordovil_quadratic(arr, field, max_rows=options.cordovil_max_rows, found=found)
            cordovil = CordovilSection(
                hilbert=verdict.hilbert,
                quadratic=verdict.quadratic,
                min_generator_degrees=verdict.min_generator_degrees,
                field=verdict.field,
            )
        except ResourceCapExceeded as exc:
            if exc.stage != "cordovil":
                raise
            logger.warning("Skipping Cordovil stage: %s", exc)
            skipped.append("cordovil")
    else:
        skipped.append("cordovil")

    with timed_stage(timings, "chordal"):
        chordal = is_chordal(arr, found)
    with timed_stage(timings, "formal"):
        spaces = relation_spaces(arr)
        formal = is_formal(arr, spaces)

    gain: Optional[int] = None
    if not formal.verdict:
        try:
            with timed_stage(timings, "closure"):
                closure_cap = options.closure_chamber_cap if options.closure_chamber_cap is not None else options.chamber_cap
                gain = closure_chamber_gain(
                    arr, method=options.chamber_method, chamber_cap=closure_cap, base_count=chamber_count
                )
        except (ResourceCapExceeded, StructuralError) as exc:
            logger.warning("Skipping formal-closure chamber gain: %s", exc)
            skipped.append("closure")

    if options.export_cas is not None:
        with timed_stage(timings, "export_cas"):
            text = export_presentation(arr, min(2, r), options.cas_format, field, minimal=True, compare_with=r)
            options.export_cas.parent.mkdir(parents=True, exist_ok=True)
            options.export_cas.write_text(text, encoding="utf-8")
        logger.info("Wrote CAS presentation to %s", options.export_cas)

    report = AnalysisReport(
        name=arr.name,
        n=arr.n,
        d=arr.d,
        rank=r,
        normals=tuple(tuple(format_rational(x) for x in v) for v in arr.normals),
        chamber_count=chamber_count,
        sigma_2=sigma_2,
        yoshinaga=sigma_2 == chamber_count,
        vg_quadratic=vg_quadratic,
        chordal=ChordalSection(
            verdict=chordal.verdict,
            witness=None if chordal.witness is None else chordal.witness.support,
        ),
        formal=FormalSection(verdict=formal.verdict, defect=formal.defect),
        characteristic_polynomial=tuple(chi),
        circuit_census=circuit_census(found),
        field=field.name,
        cordovil=cordovil,
        sigma_chain=chain,
        closure_chamber_gain=gain,
        stages_skipped=tuple(skipped),
        timings=timings,
    )
    check_implications(report)
    return report
