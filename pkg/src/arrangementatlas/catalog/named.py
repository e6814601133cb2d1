from __future__ import annotations

from fractions import Fraction
from itertools import combinations
import logging

from sympy import isprime

from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.rational import dot, primitive_integer_vector, rank
from arrangementatlas.schemas.core import Arrangement


logger = logging.getLogger(__name__)


REMARK13_MATRIX = (
    (3, 3, 3, 3, 3, 9, 7, 5, 7, 2, 0, 0, 6, 3, 4, 8, 6, 2, 9, 5),
    (8, 1, 7, 1, 2, 8, 2, 6, 1, 8, 5, 9, 2, 8, 3, 0, 1, 0, 8, 9),
    (1, 9, 1, 9, 5, 2, 5, 9, 3, 7, 7, 3, 6, 6, 4, 0, 9, 1, 5, 9),
    (1, 0, 1, 4, 1, 1, 7, 2, 4, 1, 3, 9, 2, 8, 0, 8, 7, 1, 2, 3),
)


def remark13() -> Arrangement:
    """20 planes in R^4; the normals are the columns of the matrix."""

    columns = [[row[j] for row in REMARK13_MATRIX] for j in range(len(REMARK13_MATRIX[0]))]
    return Arrangement.from_normals(columns, name="remark13")


def x2() -> Arrangement:
    """x1, x2, x3, x2 - x3, x1 - x3, x1 + x2, x1 + x2 - 2x3."""

    return Arrangement.from_normals(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, -1), (1, 0, -1), (1, 1, 0), (1, 1, -2)],
        name="x2",
    )


def bracelet() -> Arrangement:
    return Arrangement.from_normals(
        [
            (1, 0, 0, 0),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (1, 0, 0, 1),
            (0, 1, 0, 1),
            (0, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 0, 1, 1),
            (0, 1, 1, 1),
        ],
        name="bracelet",
    )


def edelman_reiner(t: Fraction | int | str) -> Arrangement:
    """
    x1 - x2, x1 - x3, x2 - x3, x1, x2, x3, x1 - t x2, x1 - t x3, x2 - t x3.

    For t in {0, 1} the last three equations repeat earlier ones and are dropped, leaving six
    planes; t = -1 gives the type B_3 arrangement.
    """

    t = Fraction(t)
    printed = [
        (1, -1, 0),
        (1, 0, -1),
        (0, 1, -1),
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, -t, 0),
        (1, 0, -t),
        (0, 1, -t),
    ]
    normals = []
    keys: set[tuple[int, ...]] = set()
    for v in printed:
        key = primitive_integer_vector(v)
        lead = next(x for x in key if x != 0)
        key = key if lead > 0 else tuple(-x for x in key)
        if key not in keys:
            keys.add(key)
            normals.append(v)
    return Arrangement.from_normals(normals, name=f"er:{t}")


def d4() -> Arrangement:
    """x_i - x_j and x_i + x_j for 1 <= i < j <= 4."""

    normals = []
    for i, j in combinations(range(4), 2):
        for sign in (-1, 1):
            v = [0] * 4
            v[i] = 1
            v[j] = sign
            normals.append(v)
    return Arrangement.from_normals(normals, name="d4")


def primegap6() -> Arrangement:
    """All x_i = x_j in R^6, plus x_i + x_j = 0 whenever j - i is prime."""

    normals = []
    for i, j in combinations(range(6), 2):
        v = [0] * 6
        v[i], v[j] = 1, -1
        normals.append(v)
    for i, j in combinations(range(6), 2):
        if isprime(j - i):
            v = [0] * 6
            v[i], v[j] = 1, 1
            normals.append(v)
    return Arrangement.from_normals(normals, name="primegap6")


def three_lines() -> Arrangement:
    """a1, a2 and a3 = -a1 - a2 in the plane."""

    return Arrangement.from_normals([(1, 0), (0, 1), (-1, -1)], name="three_lines")


def u24() -> Arrangement:
    """Four lines through the origin of the plane (uniform matroid U_{2,4})."""

    return Arrangement.from_normals([(1, 0), (0, 1), (1, 1), (1, 2)], name="u24")


def cycle4() -> Arrangement:
    """Graphic arrangement of the 4-cycle 0-1-2-3-0."""

    return Arrangement.from_normals(
        [(1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (1, 0, 0, -1)], name="cycle4"
    )


# Six points on the conic x^2 + y^2 = z^2 (parameters t = 0, 1, 2, 4, -3, -1/2 of
# (1 - t^2, 2t, 1 + t^2)), in cyclic order A..F.
ZIEGLER_POINTS = ((1, 0, 1), (0, 1, 1), (-3, 4, 5), (-15, 8, 17), (-4, -3, 5), (3, -4, 5))
ZIEGLER_OFF_CONIC = (2, 1, 3)
# Hexagon sides, then the diagonals AD, BE, CF.
ZIEGLER_LINES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (2, 5))


def _cross(u, v) -> tuple[int, int, int]:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def concurrent_triples(normals) -> list[tuple[int, int, int]]:
    return [t for t in combinations(range(len(normals)), 3) if rank([normals[i] for i in t]) < 3]


def conic_determinant_vanishes(points) -> bool:
    """Six points of P^2 lie on one conic iff the 6x6 matrix of their degree-2 monomials is singular."""

    rows = [(x * x, x * y, y * y, x * z, y * z, z * z) for x, y, z in points]
    return rank(rows) < 6


def ziegler(kind: str) -> Arrangement:
    """
    Ziegler's pair: nine lines with six triple points. `special` puts the triple points on a
    conic; `general` moves vertex A off it. Both realizations are checked at construction.
    """

    if kind not in ("special", "general"):
        raise ArrangementError(f"ziegler kind must be 'special' or 'general', got {kind!r}")
    points = list(ZIEGLER_POINTS)
    if kind == "general":
        points[0] = ZIEGLER_OFF_CONIC
    normals = [primitive_integer_vector(_cross(points[a], points[b])) for a, b in ZIEGLER_LINES]

    triples = concurrent_triples(normals)
    if len(triples) != 6:
        raise ArrangementError(f"ziegler:{kind} realization has {len(triples)} triple points, expected 6")
    triple_points = [primitive_integer_vector(_cross(normals[t[0]], normals[t[1]])) for t in triples]
    if any(dot(normals[t[2]], p) != 0 for t, p in zip(triples, triple_points)):
        raise ArrangementError(f"ziegler:{kind} triple points are inconsistent")
    on_conic = conic_determinant_vanishes(triple_points)
    if on_conic != (kind == "special"):
        raise ArrangementError(f"ziegler:{kind} realization fails the conic condition")
    logger.debug("ziegler:%s triples=%s on_conic=%s", kind, triples, on_conic)
    return Arrangement.from_normals(normals, name=f"ziegler:{kind}")
