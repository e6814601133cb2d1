from __future__ import annotations

import logging
from pathlib import Path
import re
from typing import Optional

import pandas as pd

from arrangementatlas.algebra.vg import is_vg_quadratic
from arrangementatlas.catalog.registry import parse_spec
from arrangementatlas.exactcore.fields import parse_field
from arrangementatlas.geometry.chambers import ChamberMethod, enumerate_chambers
from arrangementatlas.geometry.sigma import count_sigma
from arrangementatlas.matroid.circuits import circuits
from arrangementatlas.utils.timing import timed_stage


logger = logging.getLogger(__name__)

BENCH_COLUMNS = [
    "name",
    "repeat",
    "n",
    "rank",
    "chambers",
    "sigma_2",
    "yoshinaga",
    "vg_quadratic",
    "chambers_seconds",
    "sigma_2_seconds",
    "vg_seconds",
    "total_seconds",
]


def bench(
    spec: str,
    *,
    repeats: int = 1,
    field: str = "q",
    node_cap: Optional[int] = None,
    chamber_cap: Optional[int] = None,
    method: ChamberMethod = "restriction",
) -> pd.DataFrame:
    """Wall-clock the Yoshinaga route (chambers, sigma_2) and the VG verdict, once per repeat."""

    if repeats < 1:
        raise ValueError(f"repeats must be positive, got {repeats}")
    arr = parse_spec(spec).arrangement.essentialize()
    coefficients = parse_field(field)
    rows = []
    for repeat in range(repeats):
        timings: dict[str, float] = {}
        with timed_stage(timings, "chambers"):
            chamber_count = enumerate_chambers(arr, method=method, chamber_cap=chamber_cap).count
        with timed_stage(timings, "sigma_2"):
            sigma_2 = count_sigma(arr, 2, node_cap=node_cap, chamber_cap=chamber_cap, method=method)
        with timed_stage(timings, "vg"):
            vg_quadratic = is_vg_quadratic(arr, coefficients, node_cap=node_cap, found=circuits(arr))
        rows.append(
            {
                "name": spec,
                "repeat": repeat,
                "n": arr.n,
                "rank": arr.rank,
                "chambers": chamber_count,
                "sigma_2": sigma_2,
                "yoshinaga": sigma_2 == chamber_count,
                "vg_quadratic": vg_quadratic,
                "chambers_seconds": timings["chambers"],
                "sigma_2_seconds": timings["sigma_2"],
                "vg_seconds": timings["vg"],
                "total_seconds": round(sum(timings.values()), 6),
            }
        )
        logger.info("bench %s repeat=%s total=%.3fs", spec, repeat, rows[-1]["total_seconds"])
    return pd.DataFrame(rows, columns=BENCH_COLUMNS)


def bench_filename(spec: str) -> str:
    safe = re.sub(r"[^A-Za-z0-9_.-]+", "_", spec).strip("_")
    return f"bench_{safe}.csv"


def write_bench(df: pd.DataFrame, spec: str, out_dir: Path) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / bench_filename(spec)
    df.to_csv(path, index=False)
    logger.info("Wrote %s (%s rows)", path, len(df))
    return path
