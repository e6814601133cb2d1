from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import isprime

from arrangementatlas.errors import ArrangementError


@dataclass(frozen=True)
class RationalField:
    name: str = "q"
    characteristic: int = 0

    def element(self, value: int | Fraction) -> Fraction:
        return Fraction(value)


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise ArrangementError(f"Field characteristic must be prime, got {self.p}")

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def element(self, value: int | Fraction) -> int:
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise ArrangementError(f"{value} has no image in {self.name}")
        return (value.numerator * pow(value.denominator, -1, self.p)) % self.p


Field = Union[RationalField, PrimeField]

RATIONALS = RationalField()


def parse_field(text: str) -> Field:
    """Parse `q` or `fp:<prime>`."""

    value = text.strip().lower()
    if value == "q":
        return RATIONALS
    if value.startswith("fp:"):
        digits = value[3:]
        if digits.isdigit():
            return PrimeField(int(digits))
    raise ArrangementError(f"Unsupported field {text!r}; expected 'q' or 'fp:<prime>'")
