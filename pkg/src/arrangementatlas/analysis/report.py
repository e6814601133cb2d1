from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace
import json
from typing import Any, Optional

from arrangementatlas.errors import ArrangementError, ReportInvariantError


SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CordovilSection:
    hilbert: tuple[int, ...]
    quadratic: bool
    min_generator_degrees: tuple[int, ...]
    field: str


@dataclass(frozen=True)
class ChordalSection:
    verdict: bool
    witness: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class FormalSection:
    verdict: bool
    defect: int


@dataclass(frozen=True)
class AnalysisReport:
    """
    Everything `analyze` computes for one arrangement.

    Normals are kept as `"p/q"` strings so the JSON form is exact. Optional sections are None
    when their stage was skipped (`stages_skipped` names them) or not requested.
    """

    name: Optional[str]
    n: int
    d: int
    rank: int
    normals: tuple[tuple[str, ...], ...]
    chamber_count: int
    sigma_2: int
    yoshinaga: bool
    vg_quadratic: bool
    chordal: ChordalSection
    formal: FormalSection
    characteristic_polynomial: tuple[int, ...]
    circuit_census: dict[int, int]
    field: str
    cordovil: Optional[CordovilSection] = None
    sigma_chain: Optional[tuple[int, ...]] = None
    closure_chamber_gain: Optional[int] = None
    stages_skipped: tuple[str, ...] = ()
    timings: dict[str, float] = field(default_factory=dict, compare=False)
    schema: int = SCHEMA_VERSION


def check_implications(report: AnalysisReport) -> None:
    """Raise when verdicts contradict the known implications between them."""

    problems = []
    if report.vg_quadratic != report.yoshinaga:
        problems.append("vg_quadratic differs from yoshinaga")
    if report.cordovil is not None and report.cordovil.quadratic and not report.yoshinaga:
        problems.append("cordovil quadratic but yoshinaga fails")
    if report.yoshinaga and not report.formal.verdict:
        problems.append("yoshinaga holds but the arrangement is not formal")
    if report.chordal.verdict and not report.yoshinaga:
        problems.append("chordal but yoshinaga fails")
    if problems:
        raise ReportInvariantError(f"Report for {report.name or 'input'} violates: {'; '.join(problems)}")


def _plain(value: Any) -> Any:
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


def to_dict(report: AnalysisReport, *, include_timings: bool = True) -> dict[str, Any]:
    """JSON-ready dict: tuples become lists, census keys become strings."""

    out = _plain(asdict(report))
    out["circuit_census"] = {str(k): v for k, v in sorted(report.circuit_census.items())}
    schema = out.pop("schema")
    out = {"schema": schema, **out}
    if not include_timings:
        out.pop("timings")
    return out


def to_json(report: AnalysisReport, *, indent: Optional[int] = 2, include_timings: bool = True) -> str:
    return json.dumps(to_dict(report, include_timings=include_timings), indent=indent)


def _tuple(value: Any) -> Optional[tuple]:
    if value is None:
        return None
    return tuple(tuple(v) if isinstance(v, list) else v for v in value)


def report_from_json(text: str) -> AnalysisReport:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementError(f"Invalid report JSON: {exc}") from None
    if raw.get("schema") != SCHEMA_VERSION:
        raise ArrangementError(f"Unsupported report schema: {raw.get('schema')!r}")

    cordovil = raw.get("cordovil")
    chordal = raw["chordal"]
    return AnalysisReport(
        name=raw.get("name"),
        n=int(raw["n"]),
        d=int(raw["d"]),
        rank=int(raw["rank"]),
        normals=_tuple(raw["normals"]),
        chamber_count=int(raw["chamber_count"]),
        sigma_2=int(raw["sigma_2"]),
        yoshinaga=bool(raw["yoshinaga"]),
        vg_quadratic=bool(raw["vg_quadratic"]),
        chordal=ChordalSection(verdict=bool(chordal["verdict"]), witness=_tuple(chordal.get("witness"))),
        formal=FormalSection(**raw["formal"]),
        characteristic_polynomial=tuple(raw["characteristic_polynomial"]),
        circuit_census={int(k): int(v) for k, v in raw["circuit_census"].items()},
        field=str(raw["field"]),
        cordovil=None
        if cordovil is None
        else CordovilSection(
            hilbert=tuple(cordovil["hilbert"]),
            quadratic=bool(cordovil["quadratic"]),
            min_generator_degrees=tuple(cordovil["min_generator_degrees"]),
            field=str(cordovil["field"]),
        ),
        sigma_chain=_tuple(raw.get("sigma_chain")),
        closure_chamber_gain=raw.get("closure_chamber_gain"),
        stages_skipped=tuple(raw.get("stages_skipped", ())),
        timings={str(k): float(v) for k, v in raw.get("timings", {}).items()},
        schema=SCHEMA_VERSION,
    )


def without_timings(report: AnalysisReport) -> AnalysisReport:
    return replace(report, timings={})


def _yes(value: bool) -> str:
    return "yes" if value else "no"


def render_text(report: AnalysisReport) -> str:
    lines = [
        f"arrangement: {report.name or '-'}",
        f"  hyperplanes n={report.n}  ambient d={report.d}  rank r={report.rank}",
        f"  characteristic polynomial: {list(report.characteristic_polynomial)}",
        f"  circuits by size: {dict(sorted(report.circuit_census.items()))}",
        f"  chambers: {report.chamber_count}",
        f"  sigma_2: {report.sigma_2}",
    ]
    if report.sigma_chain is not None:
        lines.append(f"  sigma chain: {list(report.sigma_chain)}")
    lines += [
        f"  yoshinaga (sigma_2 == chambers): {_yes(report.yoshinaga)}",
        f"  VG quadratic over {report.field}: {_yes(report.vg_quadratic)}",
    ]
    if report.cordovil is not None:
        c = report.cordovil
        lines.append(
            f"  cordovil quadratic over {c.field}: {_yes(c.quadratic)}"
            f"  generator degrees {list(c.min_generator_degrees)}  hilbert {list(c.hilbert)}"
        )
    witness = "" if report.chordal.witness is None else f"  witness circuit {list(report.chordal.witness)}"
    lines.append(f"  chordal: {_yes(report.chordal.verdict)}{witness}")
    lines.append(f"  formal: {_yes(report.formal.verdict)}  defect {report.formal.defect}")
    if report.closure_chamber_gain is not None:
        lines.append(f"  formal closure chamber gain: {report.closure_chamber_gain}")
    if report.stages_skipped:
        lines.append(f"  skipped: {', '.join(report.stages_skipped)}")
    if report.timings:
        total = sum(report.timings.values())
        lines.append(f"  time: {total:.3f}s ({', '.join(f'{k}={v:.3f}' for k, v in report.timings.items())})")
    return "\n".join(lines) + "\n"
