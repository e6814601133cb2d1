from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Optional, Sequence

from arrangementatlas.matroid.circuits import circuits as enumerate_circuits
from arrangementatlas.schemas.core import Arrangement, SignedCircuit


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChordalVerdict:
    verdict: bool
    witness: Optional[SignedCircuit] = None


def _mask(indices: Sequence[int]) -> int:
    return sum(1 << i for i in indices)


def _splits(target: int, by_element: dict[int, list[int]], n: int) -> bool:
    for x in range(n):
        if (target >> x) & 1:
            continue
        bit = 1 << x
        # Circuits through x inside target + {x}, with x removed.
        halves = {m ^ bit for m in by_element.get(x, ()) if (m & ~(target | bit)) == 0}
        for half in halves:
            other = target ^ half
            if other and half & target == half and other in halves:
                return True
    return False


def is_chordal(arr: Arrangement, found: Optional[list[SignedCircuit]] = None) -> ChordalVerdict:
    """
    Every circuit C with |C| >= 4 must be the symmetric difference of two circuits D1, D2
    meeting in exactly one element. On failure the first offending circuit is the witness.
    """

    found = enumerate_circuits(arr) if found is None else found
    by_element: dict[int, list[int]] = {}
    for c in found:
        mask = _mask(c.support)
        for i in c.support:
            by_element.setdefault(i, []).append(mask)
    for c in found:
        if c.size < 4:
            continue
        if not _splits(_mask(c.support), by_element, arr.n):
            logger.debug("not chordal: circuit %s has no split", c.support)
            return ChordalVerdict(verdict=False, witness=c)
    return ChordalVerdict(verdict=True)
