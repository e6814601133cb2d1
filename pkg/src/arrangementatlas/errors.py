from __future__ import annotations

from typing import Optional


class ArrangementError(ValueError):
    """Invalid arrangement input: malformed files, zero or proportional normals, unknown names."""


class ResourceCapExceeded(RuntimeError):
    """
    Raised when a configured work limit is hit.

    `cap` names the limit (`node_cap`, `chamber_cap`, `closure_chamber_cap`, `cordovil_max_rows`),
    `limit` is its value and `stage` is the pipeline stage that hit it.
    """

    def __init__(self, message: str, *, cap: str, limit: int, stage: Optional[str] = None) -> None:
        super().__init__(message)
        self.cap = cap
        self.limit = limit
        self.stage = stage


class ContractViolation(RuntimeError):
    """A caller broke a documented precondition."""


class StructuralError(RuntimeError):
    """A derived arrangement is degenerate; `diagnostic` says where."""

    def __init__(self, message: str, *, diagnostic: Optional[dict] = None) -> None:
        super().__init__(message)
        self.diagnostic = diagnostic or {}


class ReportInvariantError(RuntimeError):
    """Two verdicts of one report contradict a proven implication."""
