from __future__ import annotations

from dataclasses import dataclass
from math import comb
import logging
from typing import Optional, Sequence

from arrangementatlas.algebra.vg import Generator, generator_order, iter_generators
from arrangementatlas.errors import ArrangementError, ContractViolation, ResourceCapExceeded
from arrangementatlas.exactcore.fields import Field, RATIONALS
from arrangementatlas.exactcore.sparse import SparseEchelon
from arrangementatlas.geometry.cone import strict_cone_feasible
from arrangementatlas.matroid.circuits import circuits as enumerate_circuits
from arrangementatlas.schemas.core import Arrangement, SignedCircuit


logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class SquarefreeForm:
    """Homogeneous element of F[e_H]/(e_H^2); terms are (sorted index tuple, coefficient)."""

    degree: int
    terms: tuple[tuple[Monomial, object], ...]

    def as_dict(self) -> dict[Monomial, object]:
        return dict(self.terms)


@dataclass(frozen=True)
class GradedPiece:
    degree: int
    dimension: int
    from_products: int


@dataclass(frozen=True)
class CordovilVerdict:
    quadratic: bool
    min_generator_degrees: tuple[int, ...]
    hilbert: tuple[int, ...]
    field: str


def symbol(
    arr: Arrangement,
    support: Sequence[int],
    signs: Sequence[int],
    field: Field = RATIONALS,
    *,
    check: bool = True,
) -> SquarefreeForm:
    """
    Degree-(|S|-1) top form of f_S^eps - (-1)^|S| f_S^-eps.

    With m minus signs in eps it equals (-1)^m * sum over H in S of eps_H * e_{S - H}.
    """

    support = tuple(support)
    if len(support) != len(signs) or len(set(support)) != len(support):
        raise ArrangementError(f"Bad symbol support {support} with signs {tuple(signs)}")
    if check:
        answer = strict_cone_feasible([arr.normals[i] for i in support], list(signs))
        if answer.nonempty:
            raise ContractViolation(f"Cone of {support} with signs {tuple(signs)} is not empty")
    minus = sum(1 for s in signs if s < 0)
    overall = -1 if minus % 2 else 1
    order = sorted(range(len(support)), key=lambda j: support[j])
    terms = []
    for j in order:
        monomial = tuple(sorted(h for h in support if h != support[j]))
        value = field.element(overall * signs[j])
        if value != 0:
            terms.append((monomial, value))
    terms.sort()
    return SquarefreeForm(degree=len(support) - 1, terms=tuple(terms))


def _times_variable(row: dict[Monomial, object], h: int) -> dict[Monomial, object]:
    out: dict[Monomial, object] = {}
    for monomial, value in row.items():
        if h in monomial:
            continue
        out[tuple(sorted(monomial + (h,)))] = value
    return out


def _row_cap(k: int, degree: int, rows: int, max_rows: int) -> ResourceCapExceeded:
    return ResourceCapExceeded(
        f"J_{k} degree {degree} needs more than {rows} rows, above {max_rows}",
        cap="cordovil_max_rows",
        limit=max_rows,
        stage="cordovil",
    )


def _fresh_rows(
    arr: Arrangement,
    k: int,
    degree: int,
    field: Field,
    found: Sequence[SignedCircuit],
    product_rows: int,
    max_rows: Optional[int],
) -> list[dict[Monomial, object]]:
    """
    Symbols of the generators of J_k in `degree` (supports of size degree+1).

    Generators are drawn lazily, so the row cap fires before any large batch is expanded.
    """

    if max_rows is not None and product_rows > max_rows:
        raise _row_cap(k, degree, product_rows, max_rows)
    if degree + 1 > k + 1:
        return []
    budget = None if max_rows is None else max_rows - product_rows
    generators: set[Generator] = set()
    for generator in iter_generators(arr, degree + 1, found):
        generators.add(generator)
        if budget is not None and len(generators) > budget:
            raise _row_cap(k, degree, product_rows + len(generators), max_rows)
    rows = []
    for support, signs in sorted(generators, key=generator_order):
        form = symbol(arr, support, signs, field, check=False)
        if form.terms:
            rows.append(form.as_dict())
    return rows


def _graded_pieces(
    arr: Arrangement,
    k: int,
    field: Field,
    *,
    max_degree: Optional[int] = None,
    max_rows: Optional[int] = None,
    found: Optional[list[SignedCircuit]] = None,
) -> list[GradedPiece]:
    """
    Degree-by-degree span of J_k: (J_k)_d = e_1..e_n times (J_k)_{d-1} plus symbols of degree d.

    The spanning rows kept for the next degree are the original sparse rows that raised the rank.
    """

    if not 1 <= k <= arr.rank:
        raise ArrangementError(f"k must be in [1, {arr.rank}], got {k}")
    top = arr.rank if max_degree is None else max_degree
    found = enumerate_circuits(arr) if found is None else found

    pieces: list[GradedPiece] = []
    spanning: list[dict[Monomial, object]] = []
    full = False
    for degree in range(top + 1):
        size = comb(arr.n, degree)
        if full:
            pieces.append(GradedPiece(degree=degree, dimension=size, from_products=size))
            continue
        fresh = _fresh_rows(arr, k, degree, field, found, len(spanning) * arr.n, max_rows)
        echelon: SparseEchelon[Monomial] = SparseEchelon(field)
        kept: list[dict[Monomial, object]] = []
        for row in spanning:
            for h in range(arr.n):
                product = _times_variable(row, h)
                if product and echelon.add(product):
                    kept.append(product)
                    if echelon.rank == size:
                        break
            if echelon.rank == size:
                break
        from_products = echelon.rank
        for row in fresh:
            if echelon.rank == size:
                break
            if echelon.add(row):
                kept.append(row)
        pieces.append(GradedPiece(degree=degree, dimension=echelon.rank, from_products=from_products))
        logger.debug("J_%s degree=%s dim=%s products=%s", k, degree, echelon.rank, from_products)
        spanning = kept
        # Once J_k contains every monomial of some degree it contains every higher one.
        full = size > 0 and echelon.rank == size
    return pieces


def graded_ideal_dims(
    arr: Arrangement,
    k: int,
    field: Field = RATIONALS,
    *,
    max_degree: Optional[int] = None,
    max_rows: Optional[int] = None,
) -> list[int]:
    """dim (J_k)_d for d = 0..r (or 0..max_degree)."""

    return [p.dimension for p in _graded_pieces(arr, k, field, max_degree=max_degree, max_rows=max_rows)]


def ideal_chain_dims(
    arr: Arrangement, field: Field = RATIONALS, *, max_rows: Optional[int] = None
) -> dict[int, list[int]]:
    found = enumerate_circuits(arr)
    return {
        k: [p.dimension for p in _graded_pieces(arr, k, field, max_rows=max_rows, found=found)]
        for k in range(1, arr.rank + 1)
    }


def hilbert_series(arr: Arrangement, field: Field = RATIONALS, *, max_rows: Optional[int] = None) -> list[int]:
    """dim (R-bar / J_r)_d for d = 0..r."""

    dims = graded_ideal_dims(arr, arr.rank, field, max_rows=max_rows)
    return [comb(arr.n, d) - dim for d, dim in enumerate(dims)]


def is_cordovil_quadratic(
    arr: Arrangement,
    field: Field = RATIONALS,
    *,
    max_rows: Optional[int] = None,
    found: Optional[list[SignedCircuit]] = None,
) -> CordovilVerdict:
    """
    J_2 == J_r, compared degree by degree through degree r (J_r is everything above r).

    Minimal generator degrees are the degrees where J_r exceeds e_1..e_n times its previous piece.
    """

    found = enumerate_circuits(arr) if found is None else found
    top = _graded_pieces(arr, arr.rank, field, max_rows=max_rows, found=found)
    low = top if arr.rank <= 2 else _graded_pieces(arr, 2, field, max_rows=max_rows, found=found)
    degrees = tuple(p.degree for p in top if p.dimension > p.from_products)
    return CordovilVerdict(
        quadratic=[p.dimension for p in low] == [p.dimension for p in top],
        min_generator_degrees=degrees,
        hilbert=tuple(comb(arr.n, p.degree) - p.dimension for p in top),
        field=field.name,
    )
