from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Optional, Sequence

from arrangementatlas.errors import ResourceCapExceeded, StructuralError
from arrangementatlas.exactcore.rational import QMatrix, integer_kernel_basis, primitive_integer_vector, row_reduce
from arrangementatlas.geometry.chambers import ChamberMethod, enumerate_chambers
from arrangementatlas.matroid.flats import flats_of_rank
from arrangementatlas.schemas.core import Arrangement


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationSpaces:
    """
    Bases (primitive integer vectors in coordinates on A) of V^perp = ker(pi) and of
    V_2^perp, the span of the relations supported on rank-2 flats.
    """

    full: tuple[tuple[int, ...], ...]
    rank2: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FormalityVerdict:
    verdict: bool
    defect: int


def _echelon_basis(vectors: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    if not vectors:
        return ()
    reduction = row_reduce(QMatrix.from_rows(vectors))
    return tuple(primitive_integer_vector(reduction.rref.row(i)) for i in range(reduction.rank))


def relation_spaces(arr: Arrangement) -> RelationSpaces:
    normals = arr.integer_normals
    columns_as_rows = [[normals[h][k] for h in range(arr.n)] for k in range(arr.d)]
    full = _echelon_basis(integer_kernel_basis(columns_as_rows, arr.n))

    local: list[tuple[int, ...]] = []
    if arr.rank >= 2:
        for flat in flats_of_rank(arr, 2):
            if len(flat) < 3:
                continue
            rows = [[normals[h][k] for h in flat.elements] for k in range(arr.d)]
            for relation in integer_kernel_basis(rows, len(flat)):
                padded = [0] * arr.n
                for h, value in zip(flat.elements, relation):
                    padded[h] = value
                local.append(tuple(padded))
    rank2 = _echelon_basis(local)
    return RelationSpaces(full=full, rank2=rank2)


def is_formal(arr: Arrangement, spaces: Optional[RelationSpaces] = None) -> FormalityVerdict:
    """Formal iff every linear relation among the normals is generated by rank-2 relations."""

    spaces = relation_spaces(arr) if spaces is None else spaces
    defect = len(spaces.full) - len(spaces.rank2)
    return FormalityVerdict(verdict=defect == 0, defect=defect)


def formal_closure(arr: Arrangement, spaces: Optional[RelationSpaces] = None) -> Arrangement:
    """
    The arrangement A_2 of images of the coordinate functionals e_H in F^A / V_2^perp.

    Coordinates: rows of an integer kernel basis of the V_2^perp basis matrix, so the new
    normal of H is row H of that basis and the rank is n - dim V_2^perp.
    """

    spaces = relation_spaces(arr) if spaces is None else spaces
    basis = integer_kernel_basis(list(spaces.rank2), arr.n)
    normals = [tuple(b[h] for b in basis) for h in range(arr.n)]
    seen: dict[tuple[int, ...], int] = {}
    for h, normal in enumerate(normals):
        if all(x == 0 for x in normal):
            raise StructuralError(f"Hyperplane {h} collapses in the formal closure", diagnostic={"zero": h})
        key = primitive_integer_vector(normal)
        lead = next(x for x in key if x != 0)
        key = key if lead > 0 else tuple(-x for x in key)
        if key in seen:
            raise StructuralError(
                f"Hyperplanes {seen[key]} and {h} become proportional in the formal closure",
                diagnostic={"proportional": [seen[key], h]},
            )
        seen[key] = h
    name = f"{arr.name}:closure" if arr.name else None
    return Arrangement.from_normals(normals, name=name)


def closure_chamber_gain(
    arr: Arrangement,
    *,
    method: ChamberMethod = "restriction",
    chamber_cap: Optional[int] = None,
    base_count: Optional[int] = None,
) -> int:
    """
    |C(A_2)| - |C(A)|; positive exactly when A is not formal.

    A rank-rho arrangement has at least 2^rho chambers, so a closure whose rank alone exceeds
    `chamber_cap` is refused before any enumeration. `base_count` reuses a known |C(A)|.
    """

    closure = formal_closure(arr)
    if chamber_cap is not None and 2**closure.rank > chamber_cap:
        raise ResourceCapExceeded(
            f"Formal closure has rank {closure.rank}, so at least 2^{closure.rank} chambers, above {chamber_cap}",
            cap="closure_chamber_cap",
            limit=chamber_cap,
            stage="closure",
        )
    if base_count is None:
        base_count = enumerate_chambers(arr, method=method, chamber_cap=chamber_cap).count
    gain = enumerate_chambers(closure, method=method, chamber_cap=chamber_cap).count - base_count
    logger.debug("closure rank=%s chamber gain=%s", closure.rank, gain)
    return gain
