from __future__ import annotations

import sys
from pathlib import Path

# Allow running scripts without requiring an editable install (`pip install -e .`).
PROJECT_ROOT = Path(__file__).resolve().parents[1]
SRC_PATH = PROJECT_ROOT / "src"
sys.path.insert(0, str(SRC_PATH))

from arrangementatlas.cli import main as cli_main


def main() -> int:
    """Build the property table over catalog entries (writes a CSV)."""

    return cli_main(["survey", *sys.argv[1:]])


if __name__ == "__main__":
    raise SystemExit(main())
