from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Iterator, Optional, Sequence

import networkx as nx
import numpy as np

from arrangementatlas.errors import ArrangementError, ResourceCapExceeded
from arrangementatlas.geometry.chambers import ChamberMethod, enumerate_chambers, local_chamber_patterns
from arrangementatlas.matroid.flats import flats_of_rank
from arrangementatlas.schemas.core import Arrangement, SigmaChain


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PatternConstraint:
    """
    Restriction of a sign vector to `indices` (bit j for indices[j]) must be in `allowed`,
    or, when `allowed` is None, must avoid `forbidden`. Both sets are closed under negation.
    """

    indices: tuple[int, ...]
    allowed: Optional[frozenset[int]] = None
    forbidden: frozenset[int] = frozenset()

    def accepts(self, pattern: int) -> bool:
        if self.allowed is not None:
            return pattern in self.allowed
        return pattern not in self.forbidden


def _components(n: int, constraints: Sequence[PatternConstraint]) -> tuple[list[list[int]], int]:
    """Connected components of the hyperplanes that share a constraint, plus the untouched count."""

    graph = nx.Graph()
    for c in constraints:
        nx.add_path(graph, c.indices)
    groups = sorted(sorted(group) for group in nx.connected_components(graph))
    return groups, n - graph.number_of_nodes()


class _NodeBudget:
    def __init__(self, cap: Optional[int], stage: str) -> None:
        self.cap = cap
        self.stage = stage
        self.used = 0

    def spend(self, nodes: int) -> None:
        self.used += nodes
        if self.cap is not None and self.used > self.cap:
            raise ResourceCapExceeded(
                f"Search exceeded {self.cap} nodes", cap="node_cap", limit=self.cap, stage=self.stage
            )


@dataclass(frozen=True)
class _Check:
    mask: int
    patterns: np.ndarray
    allowed: bool


def _spread(pattern: int, positions: Sequence[int]) -> int:
    out = 0
    for j, p in enumerate(positions):
        if (pattern >> j) & 1:
            out |= 1 << p
    return out


def _dtype(width: int):
    # int64 holds masks over at most 62 positions; wider components fall back to Python ints.
    return np.int64 if width <= 62 else object


def _plan(variables: Sequence[int], constraints: Sequence[PatternConstraint]) -> list[list[_Check]]:
    """
    Attach each constraint to the depth at which its last variable is assigned, with its
    patterns spread to positions in `variables` so a check is one mask and one lookup.
    """

    position = {v: t for t, v in enumerate(variables)}
    dtype = _dtype(len(variables))
    checks: list[list[_Check]] = [[] for _ in variables]
    for c in constraints:
        if not c.indices or c.indices[0] not in position:
            continue
        positions = [position[i] for i in c.indices]
        patterns = c.allowed if c.allowed is not None else c.forbidden
        checks[max(positions)].append(
            _Check(
                mask=_spread((1 << len(positions)) - 1, positions),
                patterns=np.array(sorted(_spread(p, positions) for p in patterns), dtype=dtype),
                allowed=c.allowed is not None,
            )
        )
    return checks


def _filter(frontier: np.ndarray, checks: Sequence[_Check]) -> np.ndarray:
    for check in checks:
        hit = np.isin(frontier & check.mask, check.patterns)
        frontier = frontier[hit] if check.allowed else frontier[~hit]
        if not len(frontier):
            break
    return frontier


def _search(
    variables: Sequence[int],
    constraints: Sequence[PatternConstraint],
    budget: _NodeBudget,
    *,
    fix_first: bool,
) -> np.ndarray:
    """
    Breadth-first over positions of `variables`: the frontier at depth t holds every partial
    assignment of positions 0..t that passes the constraints completed so far.
    """

    checks = _plan(variables, constraints)
    dtype = _dtype(len(variables))
    frontier = np.array([1] if fix_first else [1, 0], dtype=dtype)
    budget.spend(len(frontier))
    frontier = _filter(frontier, checks[0])
    for depth in range(1, len(variables)):
        if not len(frontier):
            break
        bit = 1 << depth
        frontier = np.concatenate([frontier | bit, frontier])
        budget.spend(len(frontier))
        frontier = _filter(frontier, checks[depth])
    return frontier


def count_assignments(
    n: int,
    constraints: Sequence[PatternConstraint],
    *,
    node_cap: Optional[int] = None,
    stage: str = "sigma",
) -> int:
    """Number of sign vectors on n hyperplanes accepted by every constraint."""

    components, free = _components(n, constraints)
    budget = _NodeBudget(node_cap, stage)
    total = 2**free
    for variables in components:
        members = set(variables)
        local = [c for c in constraints if c.indices[0] in members]
        # Constraint sets are closed under negation: fix the first variable to + and double.
        total *= 2 * len(_search(variables, local, budget, fix_first=True))
        if total == 0:
            break
    logger.debug("count stage=%s components=%s free=%s nodes=%s", stage, len(components), free, budget.used)
    return total


def iter_assignments(n: int, constraints: Sequence[PatternConstraint]) -> Iterator[int]:
    """Every accepted sign mask, in increasing order."""

    if n == 0:
        yield 0
        return
    found = _search(list(range(n)), constraints, _NodeBudget(None, "enumerate"), fix_first=False)
    yield from sorted(int(mask) for mask in found)


def sigma_constraints(arr: Arrangement, k: int, *, method: ChamberMethod = "restriction") -> list[PatternConstraint]:
    """One constraint per rank-k flat with more than k hyperplanes: its local chamber patterns."""

    out = []
    for flat in flats_of_rank(arr, k):
        if len(flat) > k:
            allowed = frozenset(local_chamber_patterns(arr, flat, method=method))
            out.append(PatternConstraint(indices=flat.elements, allowed=allowed))
    return out


def _check_k(k: int) -> None:
    if k < 1:
        raise ArrangementError(f"k must be at least 1, got {k}")


def count_sigma(
    arr: Arrangement,
    k: int,
    *,
    node_cap: Optional[int] = None,
    chamber_cap: Optional[int] = None,
    method: ChamberMethod = "restriction",
) -> int:
    """
    |Sigma_k|: sign vectors whose every sub-selection of at most k+1 half-spaces meets.

    Equivalently, the restriction to every rank-k flat is a chamber of the localization there.
    Flats with exactly k elements are independent and impose nothing.
    """

    _check_k(k)
    if k == 1:
        return 2**arr.n
    if k >= arr.rank:
        return enumerate_chambers(arr, method=method, chamber_cap=chamber_cap).count
    return count_assignments(arr.n, sigma_constraints(arr, k, method=method), node_cap=node_cap, stage=f"sigma_{k}")


def enumerate_sigma(arr: Arrangement, k: int, *, method: ChamberMethod = "restriction") -> set[int]:
    """The set Sigma_k as sign masks."""

    _check_k(k)
    if k == 1:
        return set(range(2**arr.n))
    if k >= arr.rank:
        return enumerate_chambers(arr, method=method).masks()
    return set(iter_assignments(arr.n, sigma_constraints(arr, k, method=method)))


def sigma_chain(
    arr: Arrangement,
    *,
    node_cap: Optional[int] = None,
    chamber_cap: Optional[int] = None,
    method: ChamberMethod = "restriction",
) -> SigmaChain:
    values = [
        count_sigma(arr, k, node_cap=node_cap, chamber_cap=chamber_cap, method=method)
        for k in range(1, arr.rank + 1)
    ]
    return SigmaChain(tuple(values))


def yoshinaga(
    arr: Arrangement,
    *,
    node_cap: Optional[int] = None,
    chamber_cap: Optional[int] = None,
    method: ChamberMethod = "restriction",
) -> bool:
    """sigma_2 == number of chambers."""

    chambers = enumerate_chambers(arr, method=method, chamber_cap=chamber_cap).count
    return count_sigma(arr, 2, node_cap=node_cap, chamber_cap=chamber_cap, method=method) == chambers
