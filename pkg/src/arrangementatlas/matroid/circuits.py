from __future__ import annotations

import logging
import math
from functools import reduce

from arrangementatlas.exactcore.rational import dot, primitive_integer_vector
from arrangementatlas.schemas.core import Arrangement, SignedCircuit


logger = logging.getLogger(__name__)


def _canonical(support: list[int], coefficients: list[int]) -> SignedCircuit:
    ints = list(primitive_integer_vector(coefficients))
    if ints[0] < 0:
        ints = [-c for c in ints]
    return SignedCircuit(
        support=tuple(support),
        signs=tuple(1 if c > 0 else -1 for c in ints),
        coefficients=tuple(ints),
    )


def _reduce_complement(complement: list[tuple[int, ...]], normal: tuple[int, ...]) -> tuple[int, list[tuple[int, ...]]]:
    """Pick the first complement vector not orthogonal to `normal` and project the others."""

    p = next(i for i, w in enumerate(complement) if dot(normal, w) != 0)
    wp = complement[p]
    a = dot(normal, wp)
    updated: list[tuple[int, ...]] = []
    for i, w in enumerate(complement):
        if i == p:
            continue
        b = dot(normal, w)
        v = [a * x - b * y for x, y in zip(w, wp)]
        g = reduce(math.gcd, v, 0)
        updated.append(tuple(x // g for x in v) if g > 1 else tuple(v))
    return p, updated


def circuits(arr: Arrangement) -> list[SignedCircuit]:
    """
    All signed circuits, sorted by (size, support).

    Depth-first over independent sets I in increasing index order. For each I we keep an integer
    basis W of the orthogonal complement of span(I) and dual vectors u_i with <alpha_j, u_i> = [i == j],
    so a dependent extension H has coefficients c_i = <alpha_H, u_i>. I + {H} is a circuit exactly
    when every c_i is nonzero, and each circuit is met once (as its prefix plus its largest element).
    """

    normals = arr.integer_normals
    n, d, r = arr.n, arr.d, arr.rank
    found: list[SignedCircuit] = []

    def visit(
        independent: list[int], duals: list[tuple[int, ...]], denominator: int, complement: list[tuple[int, ...]]
    ) -> None:
        start = independent[-1] + 1 if independent else 0
        for h in range(start, n):
            alpha = normals[h]
            if all(dot(alpha, w) == 0 for w in complement):
                coefficients = [dot(alpha, u) for u in duals]
                if all(c != 0 for c in coefficients):
                    found.append(_canonical(independent + [h], [-c for c in coefficients] + [denominator]))
                continue
            if len(independent) + 1 >= r + 1:
                continue
            p, next_complement = _reduce_complement(complement, alpha)
            wp = complement[p]
            a = dot(alpha, wp)
            if a < 0:
                a, wp = -a, tuple(-x for x in wp)
            # u_i = U_i / D; after adding H the common denominator becomes a * D.
            next_duals = []
            for u in duals:
                c = dot(alpha, u)
                next_duals.append(tuple(a * x - c * y for x, y in zip(u, wp)))
            next_duals.append(tuple(denominator * x for x in wp))
            next_denominator = a * denominator
            g = reduce(math.gcd, (x for u in next_duals for x in u), next_denominator)
            if g > 1:
                next_duals = [tuple(x // g for x in u) for u in next_duals]
                next_denominator //= g
            visit(independent + [h], next_duals, next_denominator, next_complement)

    identity = [tuple(int(i == j) for i in range(d)) for j in range(d)]
    visit([], [], 1, identity)
    found.sort(key=lambda c: (c.size, c.support))
    logger.debug("circuits n=%s rank=%s count=%s", n, r, len(found))
    return found


def circuit_census(found: list[SignedCircuit]) -> dict[int, int]:
    """Circuit counts by size."""

    census: dict[int, int] = {}
    for c in found:
        census[c.size] = census.get(c.size, 0) + 1
    return dict(sorted(census.items()))
