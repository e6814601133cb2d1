from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional


ChamberMethod = Literal["restriction", "lp"]


@dataclass(frozen=True)
class AppSettings:
    name: str = "ArrangementAtlas"


@dataclass(frozen=True)
class SearchSettings:
    node_cap: int = 50_000_000
    chamber_cap: int = 2_000_000


@dataclass(frozen=True)
class ChamberSettings:
    method: ChamberMethod = "restriction"


@dataclass(frozen=True)
class AlgebraSettings:
    field: str = "q"
    cordovil_max_rows: int = 10_000


@dataclass(frozen=True)
class FormalitySettings:
    closure_chamber_cap: int = 50_000


@dataclass(frozen=True)
class ReportSettings:
    sigma_chain: bool = False
    indent: int = 2


@dataclass(frozen=True)
class BenchSettings:
    repeats: int = 1
    out_dir: Path = Path("data/bench")


@dataclass(frozen=True)
class LoggingSettings:
    level: str = "INFO"
    format: str = "%(asctime)s %(levelname)s %(name)s - %(message)s"
    file: Optional[Path] = None


@dataclass(frozen=True)
class AppConfig:
    app: AppSettings
    search: SearchSettings
    chambers: ChamberSettings
    algebra: AlgebraSettings
    formality: FormalitySettings
    report: ReportSettings
    bench: BenchSettings
    logging: LoggingSettings


def default_config() -> AppConfig:
    return AppConfig(
        app=AppSettings(),
        search=SearchSettings(),
        chambers=ChamberSettings(),
        algebra=AlgebraSettings(),
        formality=FormalitySettings(),
        report=ReportSettings(),
        bench=BenchSettings(),
        logging=LoggingSettings(),
    )
