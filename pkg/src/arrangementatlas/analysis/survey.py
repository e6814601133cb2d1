from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd

from arrangementatlas.analysis.pipeline import AnalysisOptions, analyze
from arrangementatlas.catalog.registry import NAMED_EXAMPLES, parse_spec


logger = logging.getLogger(__name__)

SURVEY_COLUMNS = [
    "name",
    "n",
    "rank",
    "chambers",
    "chordal",
    "formal",
    "yoshinaga",
    "vg_quadratic",
    "cordovil_quadratic",
    "cordovil_degrees",
    "seconds",
]


def survey(specs: Optional[Sequence[str]] = None, options: Optional[AnalysisOptions] = None) -> pd.DataFrame:
    """
    One row per catalog spec with the property columns: chordal, formal, Yoshinaga, VG quadratic
    and Cordovil quadratic. A skipped Cordovil stage leaves its cells empty.
    """

    rows = []
    for spec in specs or NAMED_EXAMPLES:
        entry = parse_spec(spec)
        report = analyze(entry.arrangement, options)
        cordovil = report.cordovil
        rows.append(
            {
                "name": spec,
                "n": report.n,
                "rank": report.rank,
                "chambers": report.chamber_count,
                "chordal": report.chordal.verdict,
                "formal": report.formal.verdict,
                "yoshinaga": report.yoshinaga,
                "vg_quadratic": report.vg_quadratic,
                "cordovil_quadratic": None if cordovil is None else cordovil.quadratic,
                "cordovil_degrees": None
                if cordovil is None
                else " ".join(str(d) for d in cordovil.min_generator_degrees),
                "seconds": round(sum(report.timings.values()), 6),
            }
        )
        logger.info("survey %s done", spec)
    return pd.DataFrame(rows, columns=SURVEY_COLUMNS)


def write_survey(df: pd.DataFrame, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False)
    logger.info("Wrote %s (%s rows)", path, len(df))
    return path
