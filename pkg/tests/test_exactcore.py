from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.fields import RATIONALS, PrimeField, parse_field
from arrangementatlas.exactcore.rational import (
    QMatrix,
    format_rational,
    integer_kernel_basis,
    kernel_basis,
    primitive_integer_vector,
    rank,
    row_reduce,
    solve,
    to_rational,
)
from arrangementatlas.exactcore.sparse import SparseEchelon


def test_to_rational_parses_strings_and_rejects_floats() -> None:
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(" -4 ") == -4
    assert to_rational("2.5") == Fraction(5, 2)
    with pytest.raises(ArrangementError):
        to_rational(0.5)
    with pytest.raises(ArrangementError):
        to_rational("1/0")
    with pytest.raises(ArrangementError):
        to_rational(True)


def test_format_rational() -> None:
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(7)) == "7"


def test_primitive_integer_vector_keeps_direction() -> None:
    assert primitive_integer_vector([Fraction(1, 2), Fraction(-3, 4), 0]) == (2, -3, 0)
    assert primitive_integer_vector([-4, -6]) == (-2, -3)
    assert primitive_integer_vector([0, 0]) == (0, 0)


def test_rank_and_kernel_match_sympy() -> None:
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, -1, 2], [1, 3, 2, 6]]
    m = QMatrix.from_rows(rows)
    assert row_reduce(m).rank == sympy.Matrix(rows).rank() == rank(rows)

    basis = kernel_basis(m)
    assert basis.cols == len(sympy.Matrix(rows).nullspace())
    assert (m @ basis).is_zero()


def test_integer_kernel_basis_is_primitive_and_orthogonal() -> None:
    rows = [[1, 1, 1]]
    basis = integer_kernel_basis(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert sum(a * b for a, b in zip(rows[0], v)) == 0
        assert v == primitive_integer_vector(v)
    assert integer_kernel_basis([], 2) == [(1, 0), (0, 1)]


def test_solve_returns_none_when_inconsistent() -> None:
    m = QMatrix.from_rows([[1, 1], [2, 2]])
    assert solve(m, [1, 3]) is None
    x = solve(QMatrix.from_rows([[2, 0], [0, 3]]), [1, 1])
    assert x == (Fraction(1, 2), Fraction(1, 3))


def test_ragged_matrix_is_rejected() -> None:
    with pytest.raises(ArrangementError):
        QMatrix.from_rows([[1, 2], [3]])


def test_parse_field() -> None:
    assert parse_field("q") is RATIONALS
    assert parse_field("fp:5") == PrimeField(5)
    assert parse_field("FP:3").name == "fp:3"
    with pytest.raises(ArrangementError):
        parse_field("fp:4")
    with pytest.raises(ArrangementError):
        parse_field("r")


def test_prime_field_elements() -> None:
    f = PrimeField(5)
    assert f.element(-1) == 4
    assert f.element(Fraction(1, 2)) == 3
    with pytest.raises(ArrangementError):
        f.element(Fraction(1, 5))


@pytest.mark.parametrize("field", [RATIONALS, PrimeField(2), PrimeField(3)])
def test_sparse_echelon_rank(field) -> None:
    echelon = SparseEchelon(field)
    assert echelon.add({(0,): 1, (1,): 1})
    assert echelon.add({(1,): 1, (2,): 1})
    assert not echelon.add({(0,): 1, (2,): -1})
    assert echelon.contains({(0,): 2, (1,): 2})
    assert not echelon.contains({(3,): 1})
    assert echelon.add_all([{(3,): 1}, {(3,): 7}]) == 1


def test_sparse_echelon_agrees_with_sympy_rank() -> None:
    rows = [[3, 0, -2, 5], [1, 1, 1, 1], [4, 1, -1, 6], [0, 2, 0, -4]]
    echelon = SparseEchelon(RATIONALS)
    for row in rows:
        echelon.add({j: v for j, v in enumerate(row) if v})
    assert echelon.rank == sympy.Matrix(rows).rank()
    leads = [min(row) for row in echelon.rows()]
    assert leads == sorted(set(leads))
