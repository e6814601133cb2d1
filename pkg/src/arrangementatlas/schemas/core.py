from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.rational import (
    QMatrix,
    primitive_integer_vector,
    row_reduce,
    to_rational,
)


@dataclass(frozen=True)
class Arrangement:
    """
    Central real hyperplane arrangement given by rational normals.

    The stored direction of each normal fixes the positive side H^+ = {x : <alpha_H, x> > 0}.
    """

    normals: tuple[tuple[Fraction, ...], ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.normals:
            raise ArrangementError("An arrangement needs at least one hyperplane")
        d = len(self.normals[0])
        if d == 0:
            raise ArrangementError("Normals must have positive dimension")
        seen: dict[tuple[int, ...], int] = {}
        for i, normal in enumerate(self.normals):
            if len(normal) != d:
                raise ArrangementError(f"Normal {i} has dimension {len(normal)}, expected {d}")
            if all(x == 0 for x in normal):
                raise ArrangementError(f"Normal {i} is zero")
            key = primitive_integer_vector(normal)
            lead = next(x for x in key if x != 0)
            if lead < 0:
                key = tuple(-x for x in key)
            if key in seen:
                raise ArrangementError(f"Normals {seen[key]} and {i} are proportional")
            seen[key] = i

    @classmethod
    def from_normals(cls, normals: Iterable[Sequence[object]], *, name: Optional[str] = None) -> "Arrangement":
        return cls(tuple(tuple(to_rational(x) for x in v) for v in normals), name=name)

    @property
    def n(self) -> int:
        return len(self.normals)

    @property
    def d(self) -> int:
        return len(self.normals[0])

    @cached_property
    def _reduction(self):
        return row_reduce(QMatrix.from_rows(self.normals))

    @property
    def rank(self) -> int:
        return self._reduction.rank

    @property
    def is_essential(self) -> bool:
        return self.rank == self.d

    @cached_property
    def integer_normals(self) -> tuple[tuple[int, ...], ...]:
        """Primitive integer normals, each a positive multiple of the stored one."""

        return tuple(primitive_integer_vector(v) for v in self.normals)

    @cached_property
    def essential_normals(self) -> tuple[tuple[int, ...], ...]:
        """
        Integer normals in coordinates on the span of the normals (length `rank`).

        The coordinates are the entries at the pivot columns of the row-reduced normal matrix,
        which is injective on the row space, so the induced arrangement is isomorphic.
        """

        pivots = self._reduction.pivot_columns
        return tuple(primitive_integer_vector([v[c] for c in pivots]) for v in self.normals)

    def essentialize(self) -> "Arrangement":
        if self.is_essential:
            return self
        return Arrangement.from_normals(self.essential_normals, name=self.name)

    def sub(self, indices: Sequence[int]) -> "Arrangement":
        """Sub-arrangement on `indices`, kept in ambient coordinates and index order given."""

        return Arrangement(tuple(self.normals[i] for i in indices))


@dataclass(frozen=True)
class SignVector:
    """Total sign assignment, bit-packed: bit i set means hyperplane i gets `+`."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"Sign bits {self.bits} do not fit {self.n} hyperplanes")

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SignVector":
        bits = 0
        for i, s in enumerate(signs):
            if s not in (1, -1):
                raise ValueError(f"Signs must be +1 or -1, got {s!r}")
            if s > 0:
                bits |= 1 << i
        return cls(bits, len(signs))

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        return cls.from_signs([1 if ch == "+" else -1 for ch in text.strip()])

    def sign(self, i: int) -> int:
        return 1 if (self.bits >> i) & 1 else -1

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(self.sign(i) for i in range(self.n))

    def negate(self) -> "SignVector":
        return SignVector(self.bits ^ ((1 << self.n) - 1), self.n)

    def restrict(self, indices: Sequence[int]) -> int:
        """Pattern of the restriction to `indices`; bit j refers to `indices[j]`."""

        out = 0
        for j, i in enumerate(indices):
            if (self.bits >> i) & 1:
                out |= 1 << j
        return out

    def __str__(self) -> str:
        return "".join("+" if (self.bits >> i) & 1 else "-" for i in range(self.n))


@dataclass(frozen=True)
class Chamber:
    signs: SignVector
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ChamberSet:
    n: int
    chambers: tuple[Chamber, ...]

    def __len__(self) -> int:
        return len(self.chambers)

    @property
    def count(self) -> int:
        return len(self.chambers)

    def masks(self) -> set[int]:
        return {c.signs.bits for c in self.chambers}


@dataclass(frozen=True)
class SigmaChain:
    """[sigma_1, ..., sigma_r]; sigma_1 = 2^n and sigma_r is the chamber count."""

    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sigma:
            raise ValueError("Sigma chain is empty")
        if any(a < b for a, b in zip(self.sigma, self.sigma[1:])):
            raise ValueError(f"Sigma chain is not weakly decreasing: {list(self.sigma)}")

    @property
    def chamber_count(self) -> int:
        return self.sigma[-1]

    def __getitem__(self, k: int) -> int:
        return self.sigma[k - 1]


@dataclass(frozen=True)
class SignedCircuit:
    """
    Minimal dependent set with the signs of its (unique up to scale) linear dependence.

    Canonical representative: the first support element has sign +; `coefficients` are the
    primitive integer dependence coefficients aligned with `support`.
    """

    support: tuple[int, ...]
    signs: tuple[int, ...]
    coefficients: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.support)

    @property
    def positive_pattern(self) -> int:
        """Pattern (bit j for support[j]) of the sign vectors forbidden by this circuit."""

        return sum(1 << j for j, s in enumerate(self.signs) if s > 0)


@dataclass(frozen=True)
class Flat:
    elements: tuple[int, ...]
    rank: int

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, index: object) -> bool:
        return index in self.elements
