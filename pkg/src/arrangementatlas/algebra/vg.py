from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Iterator, Literal, Optional, Sequence

from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.fields import Field, RATIONALS
from arrangementatlas.exactcore.sparse import SparseEchelon
from arrangementatlas.geometry.cone import FeasibilityAnswer
from arrangementatlas.geometry.sigma import PatternConstraint, count_assignments, enumerate_sigma
from arrangementatlas.matroid.circuits import circuits as enumerate_circuits
from arrangementatlas.schemas.core import Arrangement, SignedCircuit


logger = logging.getLogger(__name__)

Generator = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class VGElement:
    """
    Element of R = F[e_H^+] / (e_H^+^2 - e_H^+) as a function on {0,1}^A.

    Each term (indices, pattern, coefficient) contributes `coefficient` at the points whose
    restriction to `indices` equals `pattern` (bit j for indices[j]); f_S^eps is one such term.
    """

    n: int
    terms: tuple[tuple[tuple[int, ...], int, object], ...]

    def values(self) -> dict[int, object]:
        """Nonzero values on every point of {0,1}^A (exponential in n)."""

        out = {}
        for mask in range(2**self.n):
            value = evaluate_at(self, mask)
            if value != 0:
                out[mask] = value
        return out


@dataclass(frozen=True)
class MinimalGenerator:
    circuit: SignedCircuit
    support: tuple[int, ...]
    signs: tuple[int, ...]
    certificate: FeasibilityAnswer


@dataclass(frozen=True)
class IdealDescription:
    k: int
    generators: tuple[Generator, ...]
    dimension: int


def _pattern_of(signs: Sequence[int]) -> int:
    return sum(1 << j for j, s in enumerate(signs) if s > 0)


def vg_element(
    arr: Arrangement,
    support: Sequence[int],
    signs: Sequence[int],
    kind: Literal["f", "g"] = "g",
    field: Field = RATIONALS,
) -> VGElement:
    """f_S^eps (indicator of the points agreeing with eps on S) or g_S^eps = f_S^eps - f_S^-eps."""

    if len(support) != len(signs) or any(not 0 <= i < arr.n for i in support):
        raise ArrangementError(f"Bad generator support {tuple(support)} for {arr.n} hyperplanes")
    indices = tuple(support)
    pattern = _pattern_of(signs)
    one = field.element(1)
    terms = [(indices, pattern, one)]
    if kind == "g":
        terms.append((indices, pattern ^ ((1 << len(indices)) - 1), field.element(-1)))
    elif kind != "f":
        raise ArrangementError(f"Unknown element kind {kind!r}")
    return VGElement(n=arr.n, terms=tuple(terms))


def evaluate_at(element: VGElement, mask: int) -> object:
    total = 0
    for indices, pattern, coefficient in element.terms:
        local = 0
        for j, i in enumerate(indices):
            if (mask >> i) & 1:
                local |= 1 << j
        if local == pattern:
            total = total + coefficient
    return total


def _check_k(arr: Arrangement, k: int) -> None:
    if not 1 <= k <= arr.rank:
        raise ArrangementError(f"k must be in [1, {arr.rank}], got {k}")


def minimal_generators(
    arr: Arrangement, k: int, found: Optional[list[SignedCircuit]] = None
) -> list[MinimalGenerator]:
    """
    Circuit-supported generators of I_k: one per signed circuit with at most k+1 elements.

    A cone is empty iff it contains a circuit-supported empty sub-cone, so these have the same
    zero set as the full generating set. The certificate uses |c_H| as Farkas multipliers.
    """

    _check_k(arr, k)
    found = enumerate_circuits(arr) if found is None else found
    out = []
    for c in found:
        if c.size > k + 1:
            continue
        certificate = FeasibilityAnswer(certificate=tuple(abs(x) for x in c.coefficients))
        out.append(MinimalGenerator(circuit=c, support=c.support, signs=c.signs, certificate=certificate))
    return out


def _canonical_orbit(support: tuple[int, ...], signs: tuple[int, ...]) -> Generator:
    if signs[0] < 0:
        signs = tuple(-s for s in signs)
    return support, signs


def generator_order(generator: Generator) -> tuple:
    return len(generator[0]), generator[0], tuple(-s for s in generator[1])


def iter_generators(arr: Arrangement, size: int, found: Sequence[SignedCircuit]) -> Iterator[Generator]:
    """
    Every (S, eps) with |S| == size and empty open cone, as canonical orbit representatives.

    Lazy and possibly repeating: S is a circuit C plus free elements, eps agrees with sigma_C on C.
    """

    for c in found:
        if c.size > size:
            continue
        rest = [h for h in range(arr.n) if h not in c.support]
        extra_size = size - c.size
        for extra in combinations(rest, extra_size):
            support = tuple(sorted(c.support + extra))
            position = {h: j for j, h in enumerate(support)}
            for free_bits in range(2**extra_size):
                signs = [0] * len(support)
                for h, s in zip(c.support, c.signs):
                    signs[position[h]] = s
                for j, h in enumerate(extra):
                    signs[position[h]] = 1 if (free_bits >> j) & 1 else -1
                yield _canonical_orbit(support, tuple(signs))


def ideal_generators(arr: Arrangement, k: int, found: Optional[list[SignedCircuit]] = None) -> list[Generator]:
    """
    Every (S, eps) with |S| <= k+1 and empty open cone, one per {eps, -eps} orbit
    (representative with + on the first element of S), sorted by (|S|, S, eps).

    (S, eps) has an empty cone exactly when eps agrees with +-sigma_C on some circuit C inside S.
    """

    _check_k(arr, k)
    found = enumerate_circuits(arr) if found is None else found
    out: set[Generator] = set()
    for size in range(1, k + 2):
        out.update(iter_generators(arr, size, found))
    return sorted(out, key=generator_order)


def vg_constraints(arr: Arrangement, k: int, field: Field = RATIONALS, found: Optional[list[SignedCircuit]] = None) -> list[PatternConstraint]:
    """
    Zero-set constraints of I_k: a point p survives a generator g_C^sigma iff g vanishes at p,
    i.e. p restricted to C avoids every pattern where g takes a nonzero value in `field`.
    """

    out = []
    for generator in minimal_generators(arr, k, found):
        element = vg_element(arr, generator.support, generator.signs, "g", field)
        forbidden = frozenset(pattern for _, pattern, value in element.terms if value != 0)
        out.append(PatternConstraint(indices=generator.support, forbidden=forbidden))
    return out


def dim_vg_k(
    arr: Arrangement,
    k: int,
    field: Field = RATIONALS,
    *,
    node_cap: Optional[int] = None,
    found: Optional[list[SignedCircuit]] = None,
) -> int:
    """dim R / I_k = number of points of {0,1}^A where every generator of I_k vanishes."""

    _check_k(arr, k)
    if k == 1:
        return 2**arr.n
    return count_assignments(arr.n, vg_constraints(arr, k, field, found), node_cap=node_cap, stage=f"vg_{k}")


def describe_ideal(arr: Arrangement, k: int, field: Field = RATIONALS) -> IdealDescription:
    return IdealDescription(k=k, generators=tuple(ideal_generators(arr, k)), dimension=dim_vg_k(arr, k, field))


def is_vg_quadratic(
    arr: Arrangement,
    field: Field = RATIONALS,
    *,
    node_cap: Optional[int] = None,
    found: Optional[list[SignedCircuit]] = None,
) -> bool:
    """I_2 == I_r, decided as dim R/I_2 == dim R/I_r (both ideals are spanned by point indicators)."""

    if arr.rank <= 2:
        return True
    found = enumerate_circuits(arr) if found is None else found
    low = dim_vg_k(arr, 2, field, node_cap=node_cap, found=found)
    high = dim_vg_k(arr, arr.rank, field, node_cap=node_cap, found=found)
    logger.debug("vg dims k=2:%s k=%s:%s", low, arr.rank, high)
    return low == high


def _monomials(n: int, degree: int) -> Iterator[tuple[int, ...]]:
    return combinations(range(n), degree)


def filtered_hilbert(arr: Arrangement, k: int, field: Field = RATIONALS) -> list[int]:
    """
    Dims of the associated graded of VG_k for the degree filtration.

    F_d is spanned by the restrictions to Sigma_k of monomials of degree <= d; the d-th entry
    is dim F_d - dim F_{d-1}. Entries sum to |Sigma_k|.
    """

    _check_k(arr, k)
    points = sorted(enumerate_sigma(arr, k))
    echelon: SparseEchelon[int] = SparseEchelon(field)
    dims: list[int] = []
    for degree in range(arr.n + 1):
        gained = 0
        for monomial in _monomials(arr.n, degree):
            need = sum(1 << i for i in monomial)
            row = {j: 1 for j, p in enumerate(points) if p & need == need}
            if row and echelon.add(row):
                gained += 1
        dims.append(gained)
        if echelon.rank == len(points):
            break
    return dims
