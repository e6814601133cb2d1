from __future__ import annotations

import logging
from typing import Sequence

from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.rational import dot, integer_kernel_basis, primitive_integer_vector
from arrangementatlas.schemas.core import Arrangement, Flat


logger = logging.getLogger(__name__)


def _mask(indices: Sequence[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def _members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def closure(arr: Arrangement, indices: Sequence[int]) -> Flat:
    """Smallest flat containing `indices`: every hyperplane whose normal lies in their span."""

    normals = arr.integer_normals
    rows = [normals[i] for i in indices]
    complement = integer_kernel_basis(rows, arr.d)
    members = tuple(h for h in range(arr.n) if all(dot(normals[h], w) == 0 for w in complement))
    return Flat(elements=members, rank=arr.d - len(complement))


def all_flats(arr: Arrangement, *, max_rank: int | None = None) -> list[list[Flat]]:
    """
    The lattice of flats, grouped by rank 0..r (or 0..max_rank).

    Covers of a flat F are closures of F + {H}; once H lands in a cover it is skipped.
    """

    top = arr.rank if max_rank is None else min(max_rank, arr.rank)
    levels: list[list[Flat]] = [[Flat(elements=(), rank=0)]]
    for k in range(1, top + 1):
        seen: dict[int, Flat] = {}
        for flat in levels[-1]:
            covered = _mask(flat.elements)
            for h in range(arr.n):
                if (covered >> h) & 1:
                    continue
                cover = closure(arr, flat.elements + (h,))
                mask = _mask(cover.elements)
                covered |= mask
                seen.setdefault(mask, cover)
        levels.append([seen[m] for m in sorted(seen, key=lambda m: _members(m))])
    return levels


def flats_of_rank(arr: Arrangement, k: int) -> list[Flat]:
    if not 1 <= k <= arr.rank:
        raise ArrangementError(f"Flat rank must be in [1, {arr.rank}], got {k}")
    return all_flats(arr, max_rank=k)[k]


def characteristic_polynomial(arr: Arrangement) -> list[int]:
    """
    chi(t) = sum over flats F of mu(F) * t^(r - rank F), coefficients from t^r down to t^0.

    Möbius values come from mu(empty) = 1 and mu(F) = -sum of mu(G) over flats G strictly below F.
    """

    levels = all_flats(arr)
    mobius: list[tuple[int, int]] = []
    coefficients: list[int] = []
    for level in levels:
        total = 0
        current: list[tuple[int, int]] = []
        for flat in level:
            mask = _mask(flat.elements)
            value = 1 if not mask else -sum(mu for g, mu in mobius if g & mask == g)
            current.append((mask, value))
            total += value
        mobius.extend(current)
        coefficients.append(total)
    return coefficients


def whitney_numbers(arr: Arrangement) -> list[int]:
    """Unsigned Whitney numbers of the first kind, by rank."""

    return [abs(c) for c in characteristic_polynomial(arr)]


def evaluate_polynomial(coefficients: Sequence[int], t: int) -> int:
    value = 0
    for c in coefficients:
        value = value * t + c
    return value


def zaslavsky_chamber_count(arr: Arrangement) -> int:
    """(-1)^r * chi(-1)."""

    return (-1) ** arr.rank * evaluate_polynomial(characteristic_polynomial(arr), -1)


def localize(arr: Arrangement, flat: Flat) -> Arrangement:
    """The essential arrangement A_F: the flat's hyperplanes in coordinates on the span of their normals."""

    if not flat.elements:
        raise ArrangementError("Cannot localize at the empty flat")
    return arr.sub(flat.elements).essentialize()


def restriction_normals(
    normals: Sequence[Sequence[int]], index: int
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]], list[int]]:
    """
    Induced normals of the restriction to hyperplane `index`.

    Returns (basis, induced, owners): `basis` spans H as integer vectors, `induced[k]` is the
    primitive normal of the k-th distinct induced hyperplane in those coordinates, and `owners[j]`
    is the position in `induced` for each original normal j (-1 for `index` itself).
    """

    d = len(normals[index])
    basis = integer_kernel_basis([normals[index]], d)
    induced: list[tuple[int, ...]] = []
    keys: dict[tuple[int, ...], int] = {}
    owners: list[int] = []
    for j, alpha in enumerate(normals):
        if j == index:
            owners.append(-1)
            continue
        beta = primitive_integer_vector([dot(alpha, b) for b in basis])
        lead = next(x for x in beta if x != 0)
        key = beta if lead > 0 else tuple(-x for x in beta)
        if key not in keys:
            keys[key] = len(induced)
            induced.append(beta)
        owners.append(keys[key])
    return basis, induced, owners


def restrict_to(arr: Arrangement, index: int) -> Arrangement:
    """The restriction A^H to hyperplane `index` (distinct induced hyperplanes, coordinates on H)."""

    if not 0 <= index < arr.n:
        raise ArrangementError(f"Hyperplane index {index} out of range")
    if arr.d < 2 or arr.n < 2:
        raise ArrangementError("Restriction needs at least two hyperplanes in dimension >= 2")
    _, induced, _ = restriction_normals(arr.integer_normals, index)
    return Arrangement.from_normals(induced)
