from __future__ import annotations

from fractions import Fraction
from functools import reduce
import math
from typing import Generic, Hashable, Iterable, Mapping, Optional, TypeVar

from arrangementatlas.exactcore.fields import Field, PrimeField, RATIONALS


K = TypeVar("K", bound=Hashable)


def _primitive(row: dict) -> dict:
    content = reduce(math.gcd, row.values(), 0)
    lead = row[min(row)]
    if lead < 0:
        content = -content
    if content not in (0, 1):
        return {key: value // content for key, value in row.items()}
    return row


class SparseEchelon(Generic[K]):
    """
    Incremental semi-echelon basis of sparse rows over a field.

    Rows are mappings from ordered keys (e.g. monomials as sorted index tuples) to scalars.
    The leading key of a row is its smallest key. Over the rationals rows are kept as primitive
    integer vectors and eliminated fraction-free; over `fp:<p>` they are residues with lead 1.
    """

    def __init__(self, field: Field = RATIONALS) -> None:
        self.field = field
        self._pivots: dict[K, dict[K, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def __len__(self) -> int:
        return len(self._pivots)

    def _prepare(self, row: Mapping[K, int | Fraction]) -> dict[K, int]:
        if isinstance(self.field, PrimeField):
            p = self.field.p
            out = {key: self.field.element(value) for key, value in row.items()}
            return {key: value for key, value in out.items() if value % p}
        values = {key: Fraction(value) for key, value in row.items() if value != 0}
        if not values:
            return {}
        denominator = reduce(math.lcm, (v.denominator for v in values.values()), 1)
        return _primitive({key: int(v * denominator) for key, v in values.items()})

    def _reduce(self, row: dict[K, int]) -> dict[K, int]:
        if isinstance(self.field, PrimeField):
            p = self.field.p
            while row:
                lead = min(row)
                pivot = self._pivots.get(lead)
                if pivot is None:
                    inverse = pow(row[lead], -1, p)
                    return {key: (value * inverse) % p for key, value in row.items()}
                factor = row[lead]
                for key, value in pivot.items():
                    updated = (row.get(key, 0) - factor * value) % p
                    if updated:
                        row[key] = updated
                    else:
                        row.pop(key, None)
            return row
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return _primitive(row)
            a = row[lead]
            b = pivot[lead]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            merged = {key: value * b for key, value in row.items()}
            for key, value in pivot.items():
                updated = merged.get(key, 0) - a * value
                if updated:
                    merged[key] = updated
                else:
                    merged.pop(key, None)
            row = _primitive(merged) if merged else merged
        return row

    def add(self, row: Mapping[K, int | Fraction]) -> bool:
        """Insert `row`; returns True when it was independent of the rows already present."""

        reduced = self._reduce(self._prepare(row))
        if not reduced:
            return False
        self._pivots[min(reduced)] = reduced
        return True

    def add_all(self, rows: Iterable[Mapping[K, int | Fraction]]) -> int:
        return sum(1 for row in rows if self.add(row))

    def contains(self, row: Mapping[K, int | Fraction]) -> bool:
        return not self._reduce(self._prepare(row))

    def rows(self) -> list[dict[K, int]]:
        """Basis rows ordered by leading key."""

        return [dict(self._pivots[key]) for key in sorted(self._pivots)]

    def pivot(self, key: K) -> Optional[dict[K, int]]:
        found = self._pivots.get(key)
        return None if found is None else dict(found)
