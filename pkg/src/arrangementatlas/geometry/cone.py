from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Optional, Sequence

from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.rational import (
    QMatrix,
    dot,
    primitive_integer_vector,
    rank,
    solve,
    to_rational,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FeasibilityAnswer:
    """
    Outcome of a strict cone test: exactly one of `witness` / `certificate` is set.

    `witness` is a point x with eps_H * <alpha_H, x> > 0 for every H. `certificate` holds
    multipliers lambda >= 0, not all zero, with sum lambda_H * eps_H * alpha_H = 0.
    """

    witness: Optional[tuple[Fraction, ...]] = None
    certificate: Optional[tuple[Fraction, ...]] = None

    @property
    def nonempty(self) -> bool:
        return self.witness is not None


def _signed_rows(normals: Sequence[Sequence[object]], signs: Sequence[int]) -> list[list[Fraction]]:
    if len(normals) != len(signs) or not normals:
        raise ArrangementError(f"Need equal positive lengths, got {len(normals)} normals and {len(signs)} signs")
    d = len(normals[0])
    rows: list[list[Fraction]] = []
    for i, (normal, s) in enumerate(zip(normals, signs)):
        if len(normal) != d:
            raise ArrangementError(f"Normal {i} has dimension {len(normal)}, expected {d}")
        if s not in (1, -1):
            raise ArrangementError(f"Sign {i} must be +1 or -1, got {s!r}")
        vector = [to_rational(x) for x in normal]
        if all(x == 0 for x in vector):
            raise ArrangementError(f"Normal {i} is zero")
        rows.append([x if s > 0 else -x for x in vector])
    return rows


def _integers(vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in primitive_integer_vector(vector))


def _opposite_pair(rows: list[list[Fraction]]) -> Optional[tuple[Fraction, ...]]:
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            a, b = rows[i], rows[j]
            k = next(c for c in range(len(a)) if a[c] != 0)
            if b[k] == 0:
                continue
            ratio = b[k] / a[k]
            if ratio < 0 and all(y == ratio * x for x, y in zip(a, b)):
                # b = ratio * a, so (-ratio) * a + 1 * b = 0.
                multipliers = [Fraction(0)] * len(rows)
                multipliers[i] = -ratio
                multipliers[j] = Fraction(1)
                return _integers(multipliers)
    return None


class _Tableau:
    """Dense simplex tableau over the rationals with Bland's least-index rule."""

    def __init__(self, rows: list[list[Fraction]], basis: list[int]) -> None:
        self.rows = rows
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        pivot_row = self.rows[r]
        lead = pivot_row[c]
        if lead != 1:
            pivot_row = [x / lead for x in pivot_row]
            self.rows[r] = pivot_row
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                factor = row[c]
                self.rows[i] = [a - factor * b for a, b in zip(row, pivot_row)]
        self.basis[r] = c

    def minimize(self, costs: list[Fraction], allowed: range) -> None:
        while True:
            entering = None
            for c in allowed:
                if c in self.basis:
                    continue
                reduced = costs[c] - sum(costs[b] * row[c] for b, row in zip(self.basis, self.rows))
                if reduced < 0:
                    entering = c
                    break
            if entering is None:
                return
            best: Optional[tuple[Fraction, int, int]] = None
            for r, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    key = (ratio, self.basis[r], r)
                    if best is None or key[:2] < best[:2]:
                        best = key
            if best is None:
                # Cannot happen: the feasible region is bounded by sum(lambda) + mu = 1.
                raise RuntimeError("Unbounded cone LP")
            self.pivot(best[2], entering)


def _simplex(rows: list[list[Fraction]]) -> FeasibilityAnswer:
    """
    Decide the strict system rows[i] . x > 0 through its alternative.

    LP: minimize mu subject to sum_i lambda_i * a_i = 0, sum_i lambda_i + mu = 1, lambda, mu >= 0.
    mu* = 0 yields a Farkas certificate; otherwise mu* = 1 and the optimal dual y gives the
    witness x = -y, which satisfies a_i . x >= 1.
    """

    m = len(rows)
    d = len(rows[0])
    mu = m
    n_cols = m + 1 + d
    constraints: list[list[Fraction]] = []
    for k in range(d):
        line = [rows[i][k] for i in range(m)] + [Fraction(0)] + [Fraction(int(k == j)) for j in range(d)]
        constraints.append(line + [Fraction(0)])
    constraints.append([Fraction(1)] * (m + 1) + [Fraction(0)] * d + [Fraction(1)])
    original = [list(row[:-1]) for row in constraints]

    tableau = _Tableau([list(row) for row in constraints], [m + 1 + k for k in range(d)] + [mu])
    # Artificials start basic at level zero; drive them out (or drop redundant rows).
    kept_rows = list(range(d + 1))
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] > mu:
            column = next((c for c in range(mu + 1) if c not in tableau.basis and tableau.rows[r][c] != 0), None)
            if column is None:
                del tableau.rows[r]
                del tableau.basis[r]
                del kept_rows[r]
                continue
            tableau.pivot(r, column)
        r += 1
    for row in tableau.rows:
        del row[mu + 1 : n_cols]

    costs = [Fraction(0)] * m + [Fraction(1)]
    tableau.minimize(costs, range(mu + 1))

    values = [Fraction(0)] * (mu + 1)
    for b, row in zip(tableau.basis, tableau.rows):
        values[b] = row[-1]
    if values[mu] == 0:
        return FeasibilityAnswer(certificate=_integers(values[:m]))

    basis_matrix = QMatrix.from_rows([[original[i][b] for i in kept_rows] for b in tableau.basis])
    duals = solve(basis_matrix, [costs[b] for b in tableau.basis])
    if duals is None:
        raise RuntimeError("Singular optimal basis in cone LP")
    y = [Fraction(0)] * d
    for position, i in enumerate(kept_rows):
        if i < d:
            y[i] = duals[position]
    x = [-v for v in y]
    if not all(dot(row, x) > 0 for row in rows):
        raise RuntimeError("Dual witness failed verification")
    return FeasibilityAnswer(witness=_integers(x))


def strict_cone_feasible(normals: Sequence[Sequence[object]], signs: Sequence[int]) -> FeasibilityAnswer:
    """
    Decide whether the open cone {x : signs[i] * <normals[i], x> > 0 for all i} is nonempty.

    Returns a witness point or a Farkas certificate; both are primitive integer vectors.
    """

    rows = _signed_rows(normals, signs)
    pair = _opposite_pair(rows)
    if pair is not None:
        return FeasibilityAnswer(certificate=pair)
    if rank(rows) == len(rows):
        x = solve(QMatrix.from_rows(rows), [1] * len(rows))
        assert x is not None
        return FeasibilityAnswer(witness=_integers(x))
    answer = _simplex(rows)
    logger.debug("cone m=%s d=%s nonempty=%s", len(rows), len(rows[0]), answer.nonempty)
    return answer


def verify_answer(
    normals: Sequence[Sequence[object]], signs: Sequence[int], answer: FeasibilityAnswer
) -> bool:
    """Audit a witness or certificate with exact arithmetic."""

    try:
        rows = _signed_rows(normals, signs)
    except ArrangementError:
        return False
    if (answer.witness is None) == (answer.certificate is None):
        return False
    if answer.witness is not None:
        x = [to_rational(v) for v in answer.witness]
        return len(x) == len(rows[0]) and all(dot(row, x) > 0 for row in rows)
    lam = [to_rational(v) for v in answer.certificate or ()]
    if len(lam) != len(rows) or any(v < 0 for v in lam) or all(v == 0 for v in lam):
        return False
    return all(sum((l * row[k] for l, row in zip(lam, rows)), Fraction(0)) == 0 for k in range(len(rows[0])))


def fourier_motzkin_feasible(normals: Sequence[Sequence[object]], signs: Sequence[int]) -> bool:
    """
    Independent decision path: eliminate variables from the strict homogeneous system.

    Positive combinations of strict inequalities stay strict, so the system is feasible iff
    no `0 > 0` row ever appears.
    """

    rows = {primitive_integer_vector(row) for row in _signed_rows(normals, signs)}
    d = len(next(iter(rows)))
    for k in range(d):
        if any(all(x == 0 for x in row) for row in rows):
            return False
        positive = [row for row in rows if row[k] > 0]
        negative = [row for row in rows if row[k] < 0]
        combined = {row for row in rows if row[k] == 0}
        for p in positive:
            for q in negative:
                combined.add(primitive_integer_vector([-q[k] * a + p[k] * b for a, b in zip(p, q)]))
        rows = combined
        if not rows:
            return True
    return not rows
