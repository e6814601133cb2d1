from __future__ import annotations

from itertools import combinations
import logging
from typing import Iterable, Optional

import networkx as nx
import numpy as np

from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.rational import primitive_integer_vector
from arrangementatlas.schemas.core import Arrangement


logger = logging.getLogger(__name__)


def _unit(d: int, i: int) -> list[int]:
    return [int(k == i) for k in range(d)]


def _difference(d: int, i: int, j: int, sign: int = -1) -> list[int]:
    v = [0] * d
    v[i] = 1
    v[j] = sign
    return v


def _require(n: int, minimum: int, family: str) -> None:
    if n < minimum:
        raise ArrangementError(f"{family}(n) needs n >= {minimum}, got {n}")


def boolean(n: int) -> Arrangement:
    """Coordinate hyperplanes x_i = 0 in R^n."""

    _require(n, 1, "boolean")
    return Arrangement.from_normals([_unit(n, i) for i in range(n)], name=f"boolean:{n}")


def braid(n: int) -> Arrangement:
    """x_i - x_j = 0 for i < j in R^n (type A_{n-1}, essential rank n - 1)."""

    _require(n, 2, "braid")
    return Arrangement.from_normals(
        [_difference(n, i, j) for i, j in combinations(range(n), 2)], name=f"braid:{n}"
    )


def type_d(n: int) -> Arrangement:
    """x_i - x_j = 0 and x_i + x_j = 0 for i < j."""

    _require(n, 2, "typeD")
    normals = []
    for i, j in combinations(range(n), 2):
        normals.append(_difference(n, i, j, -1))
        normals.append(_difference(n, i, j, 1))
    return Arrangement.from_normals(normals, name=f"typeD:{n}")


def type_b(n: int) -> Arrangement:
    """Type D plus the coordinate hyperplanes."""

    _require(n, 1, "typeB")
    normals = [_unit(n, i) for i in range(n)]
    for i, j in combinations(range(n), 2):
        normals.append(_difference(n, i, j, -1))
        normals.append(_difference(n, i, j, 1))
    return Arrangement.from_normals(normals, name=f"typeB:{n}")


def graphic(edges: Iterable[tuple[int, int]], *, vertices: Optional[int] = None, name: Optional[str] = None) -> Arrangement:
    """x_i - x_j = 0 for every edge {i, j} of a simple graph on vertices 0..v-1."""

    graph = nx.Graph()
    for u, v in edges:
        if u == v:
            raise ArrangementError(f"Graphic arrangements need simple graphs; loop at {u}")
        if graph.has_edge(u, v):
            raise ArrangementError(f"Repeated edge {u}-{v}")
        graph.add_edge(int(u), int(v))
    if graph.number_of_edges() == 0:
        raise ArrangementError("Graphic arrangement needs at least one edge")
    count = vertices if vertices is not None else max(graph.nodes) + 1
    if min(graph.nodes) < 0 or max(graph.nodes) >= count:
        raise ArrangementError(f"Edge endpoints must lie in 0..{count - 1}")
    ordered = sorted(tuple(sorted(e)) for e in graph.edges)
    label = name or "graphic:" + ",".join(f"{u}-{v}" for u, v in ordered)
    return Arrangement.from_normals([_difference(count, u, v) for u, v in ordered], name=label)


def edges_of(text: str) -> list[tuple[int, int]]:
    """Parse `0-1,1-2,2-0`."""

    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            u, v = token.split("-")
            out.append((int(u), int(v)))
        except ValueError:
            raise ArrangementError(f"Malformed edge {token!r}; expected 'u-v'") from None
    return out


def random_integer(
    n: int, d: int, seed: int, *, low: int = -3, high: int = 3, max_attempts: int = 10_000
) -> Arrangement:
    """
    n pairwise non-proportional nonzero integer normals in Z^d with entries in [low, high],
    drawn from `numpy.random.default_rng(seed)`.
    """

    if n < 1 or d < 1:
        raise ArrangementError(f"random_integer needs n, d >= 1, got n={n} d={d}")
    rng = np.random.default_rng(seed)
    normals: list[tuple[int, ...]] = []
    keys: set[tuple[int, ...]] = set()
    attempts = 0
    while len(normals) < n:
        attempts += 1
        if attempts > max_attempts:
            raise ArrangementError(f"Could not draw {n} distinct directions in Z^{d} from [{low}, {high}]")
        v = tuple(int(x) for x in rng.integers(low, high + 1, size=d))
        if not any(v):
            continue
        key = primitive_integer_vector(v)
        lead = next(x for x in key if x != 0)
        key = key if lead > 0 else tuple(-x for x in key)
        if key in keys:
            continue
        keys.add(key)
        normals.append(v)
    return Arrangement.from_normals(normals, name=f"random:{n},{d},{seed}")


def random_graph_edges(vertices: int, p: float, seed: int) -> list[tuple[int, int]]:
    graph = nx.gnp_random_graph(vertices, p, seed=seed)
    return sorted(tuple(sorted(e)) for e in graph.edges)


def random_graphic(vertices: int, p: float, seed: int) -> Arrangement:
    """Graphic arrangement of a G(n, p) random graph (networkx, seeded)."""

    edges = random_graph_edges(vertices, p, seed)
    if not edges:
        raise ArrangementError(f"G({vertices}, {p}) with seed {seed} has no edges")
    return graphic(edges, vertices=vertices, name=f"random_graphic:{vertices},{p},{seed}")
