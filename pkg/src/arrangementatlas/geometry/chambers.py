from __future__ import annotations

from functools import cmp_to_key
import logging
from typing import Literal, Optional, Sequence

from arrangementatlas.errors import ArrangementError, ResourceCapExceeded
from arrangementatlas.exactcore.rational import dot, primitive_integer_vector
from arrangementatlas.geometry.cone import strict_cone_feasible
from arrangementatlas.matroid.flats import restriction_normals
from arrangementatlas.schemas.core import Arrangement, Chamber, ChamberSet, Flat, SignVector


logger = logging.getLogger(__name__)

ChamberMethod = Literal["restriction", "lp"]


def _split_witnesses(
    normals: Sequence[Sequence[int]], i: int, z: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Points M*z + alpha_i and M*z - alpha_i on both sides of H_i, keeping z's strict signs
    on every earlier hyperplane (z itself may lie on H_i).
    """

    alpha = normals[i]
    m = 1
    for j in range(i):
        s = abs(dot(normals[j], z))
        m = max(m, abs(dot(normals[j], alpha)) // s + 1)
    plus = primitive_integer_vector([m * a + b for a, b in zip(z, alpha)])
    minus = primitive_integer_vector([m * a - b for a, b in zip(z, alpha)])
    return plus, minus


def _mask_of(normals: Sequence[Sequence[int]], count: int, x: Sequence[int]) -> int:
    mask = 0
    for j in range(count):
        s = dot(normals[j], x)
        if s == 0:
            raise RuntimeError(f"Witness lies on hyperplane {j}")
        if s > 0:
            mask |= 1 << j
    return mask


def _check_cap(size: int, cap: Optional[int]) -> None:
    if cap is not None and size > cap:
        raise ResourceCapExceeded(
            f"Chamber count exceeded {cap}", cap="chamber_cap", limit=cap, stage="chambers"
        )


def _restriction_points(normals: Sequence[Sequence[int]], i: int) -> list[tuple[int, ...]]:
    """Integer points on H_i, one inside each chamber of the restriction of normals[:i] to H_i."""

    d = len(normals[i])
    if i == 0:
        return [tuple(0 for _ in range(d))]
    basis, induced, _ = restriction_normals(list(normals[:i]) + [normals[i]], i)
    if not basis:
        return [tuple(0 for _ in range(d))]
    points = _insertion_witnesses(induced, cap=None)
    out = []
    for y in points.values():
        z = [0] * d
        for coefficient, b in zip(y, basis):
            if coefficient:
                z = [a + coefficient * c for a, c in zip(z, b)]
        out.append(tuple(z))
    return out


def _insertion_witnesses(normals: Sequence[Sequence[int]], *, cap: Optional[int]) -> dict[int, tuple[int, ...]]:
    chambers: dict[int, tuple[int, ...]] = {0: tuple(0 for _ in normals[0])} if normals else {}
    for i in range(len(normals)):
        bit = 1 << i
        updated: dict[int, tuple[int, ...]] = {}
        cut: set[int] = set()
        for z in _restriction_points(normals, i):
            mask = _mask_of(normals, i, z)
            if mask not in chambers:
                raise RuntimeError(f"Restriction point {z} is in no known chamber")
            plus, minus = _split_witnesses(normals, i, z)
            cut.add(mask)
            updated[mask | bit] = plus
            updated[mask] = minus
        for mask, x in chambers.items():
            if mask in cut:
                continue
            s = dot(normals[i], x)
            updated[mask | bit if s > 0 else mask] = x
        chambers = updated
        _check_cap(len(chambers), cap)
    return chambers


def _lp_witnesses(normals: Sequence[Sequence[int]], *, cap: Optional[int]) -> dict[int, tuple[int, ...]]:
    n = len(normals)
    full = (1 << n) - 1
    chambers: dict[int, tuple[int, ...]] = {1: tuple(normals[0]), 0: tuple(-a for a in normals[0])}
    for i in range(1, n):
        bit = 1 << i
        updated: dict[int, tuple[int, ...]] = {}
        for mask, x in chambers.items():
            if not mask & 1:
                continue
            s = dot(normals[i], x)
            if s == 0:
                plus, minus = _split_witnesses(normals, i, x)
                found = {mask | bit: plus, mask: minus}
            else:
                found = {(mask | bit) if s > 0 else mask: x}
                opposite = mask if s > 0 else mask | bit
                signs = [1 if (opposite >> j) & 1 else -1 for j in range(i + 1)]
                answer = strict_cone_feasible(normals[: i + 1], signs)
                if answer.nonempty:
                    found[opposite] = primitive_integer_vector(answer.witness)
            for child, w in found.items():
                updated[child] = w
                updated[~child & full & ((bit << 1) - 1)] = tuple(-a for a in w)
        chambers = updated
        _check_cap(len(chambers), cap)
    return chambers


def enumerate_chambers(
    arr: Arrangement, *, method: ChamberMethod = "restriction", chamber_cap: Optional[int] = None
) -> ChamberSet:
    """
    All chambers with integer interior points, sorted by sign mask.

    Hyperplanes are inserted in input order. `restriction` finds the chambers cut by H_i from
    the chambers of the restriction to H_i (recursively, no LP); `lp` decides the far side of
    every chamber with one strict cone test, using negation symmetry to halve the work.
    """

    normals = arr.integer_normals
    if method == "restriction":
        found = _insertion_witnesses(normals, cap=chamber_cap)
    elif method == "lp":
        found = _lp_witnesses(normals, cap=chamber_cap)
    else:
        raise ArrangementError(f"Unknown chamber method: {method}")
    chambers = tuple(Chamber(SignVector(mask, arr.n), found[mask]) for mask in sorted(found))
    logger.debug("chambers n=%s method=%s count=%s", arr.n, method, len(chambers))
    return ChamberSet(n=arr.n, chambers=chambers)


def _half(v: Sequence[int]) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_order(u: Sequence[int], v: Sequence[int]) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def planar_chamber_patterns(normals: Sequence[Sequence[int]]) -> set[int]:
    """
    Chamber sign patterns of distinct lines through the origin of the plane.

    The 2m rays along the lines are sorted by angle with exact 2x2 determinants; each chamber
    contains the sum of two angularly consecutive rays.
    """

    m = len(normals)
    if m == 1:
        return {0, 1}
    rays = []
    for a, b in normals:
        rays.append((-b, a))
        rays.append((b, -a))
    rays.sort(key=cmp_to_key(_angle_order))
    patterns = set()
    for k in range(len(rays)):
        u, v = rays[k], rays[(k + 1) % len(rays)]
        w = (u[0] + v[0], u[1] + v[1])
        patterns.add(_mask_of(normals, m, w))
    return patterns


def local_chamber_patterns(
    arr: Arrangement, flat: Flat, *, method: ChamberMethod = "restriction"
) -> set[int]:
    """Chamber patterns of the localization at `flat`; bit j refers to `flat.elements[j]`."""

    local = arr.sub(flat.elements).essentialize()
    if local.rank == 2 and local.d == 2:
        return planar_chamber_patterns(local.integer_normals)
    return enumerate_chambers(local, method=method).masks()
