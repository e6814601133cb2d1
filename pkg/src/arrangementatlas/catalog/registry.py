from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from arrangementatlas.catalog import families, named
from arrangementatlas.errors import ArrangementError
from arrangementatlas.schemas.core import Arrangement


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parameters: tuple[str, ...]
    arrangement: Arrangement
    provenance: str = field(default="", compare=False)


def _int(value: str, what: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ArrangementError(f"{what} must be an integer, got {value!r}") from None


def _no_args(build: Callable[[], Arrangement]) -> Callable[[Sequence[str]], Arrangement]:
    def run(args: Sequence[str]) -> Arrangement:
        if args:
            raise ArrangementError(f"This catalog entry takes no parameters, got {list(args)}")
        return build()

    return run


def _one_int(build: Callable[[int], Arrangement], what: str) -> Callable[[Sequence[str]], Arrangement]:
    def run(args: Sequence[str]) -> Arrangement:
        if len(args) != 1:
            raise ArrangementError(f"Expected one parameter ({what}), got {list(args)}")
        return build(_int(args[0], what))

    return run


def _er(args: Sequence[str]) -> Arrangement:
    if len(args) != 1:
        raise ArrangementError("er needs one rational parameter t, e.g. er:-1")
    try:
        t = Fraction(args[0])
    except (ValueError, ZeroDivisionError):
        raise ArrangementError(f"er parameter must be rational, got {args[0]!r}") from None
    return named.edelman_reiner(t)


def _ziegler(args: Sequence[str]) -> Arrangement:
    if len(args) != 1:
        raise ArrangementError("ziegler needs 'special' or 'general'")
    return named.ziegler(args[0])


def _graphic(args: Sequence[str]) -> Arrangement:
    if len(args) < 1:
        raise ArrangementError("graphic needs an edge list, e.g. graphic:0-1,1-2,2-0")
    return families.graphic(families.edges_of(",".join(args)))


def _random(args: Sequence[str]) -> Arrangement:
    if len(args) != 3:
        raise ArrangementError("random needs n,d,seed, e.g. random:7,3,42")
    return families.random_integer(_int(args[0], "n"), _int(args[1], "d"), _int(args[2], "seed"))


def _random_graphic(args: Sequence[str]) -> Arrangement:
    if len(args) != 3:
        raise ArrangementError("random_graphic needs vertices,p,seed, e.g. random_graphic:6,0.5,1")
    try:
        p = float(args[1])
    except ValueError:
        raise ArrangementError(f"Edge probability must be a number, got {args[1]!r}") from None
    return families.random_graphic(_int(args[0], "vertices"), p, _int(args[2], "seed"))


_BUILDERS: dict[str, tuple[Callable[[Sequence[str]], Arrangement], str]] = {
    "remark13": (_no_args(named.remark13), "20 planes in R^4 given as matrix columns; VG ideal not quadratic"),
    "x2": (_no_args(named.x2), "7 planes in R^3; 5 three-element and 15 four-element circuits; not chordal"),
    "bracelet": (_no_args(named.bracelet), "9 planes in R^4; smallest known non-tame arrangement"),
    "er": (_er, "Edelman-Reiner family A_t in R^3 (er:<t>); deduplicated for t in {0, 1}"),
    "d4": (_no_args(named.d4), "Coxeter arrangement D_4, 12 planes x_i +- x_j"),
    "primegap6": (_no_args(named.primegap6), "x_i = x_j in R^6 plus x_i + x_j = 0 for prime j - i"),
    "three_lines": (_no_args(named.three_lines), "three concurrent lines a1, a2, -a1-a2"),
    "u24": (_no_args(named.u24), "four lines through the origin of the plane"),
    "cycle4": (_no_args(named.cycle4), "graphic arrangement of the 4-cycle"),
    "ziegler": (_ziegler, "Ziegler's pair (ziegler:special | ziegler:general); triple points on a conic or not"),
    "boolean": (_one_int(families.boolean, "n"), "coordinate hyperplanes in R^n (boolean:<n>)"),
    "braid": (_one_int(families.braid, "n"), "x_i = x_j in R^n (braid:<n>)"),
    "typeB": (_one_int(families.type_b, "n"), "Coxeter type B_n (typeB:<n>)"),
    "typeD": (_one_int(families.type_d, "n"), "Coxeter type D_n (typeD:<n>)"),
    "graphic": (_graphic, "graphic arrangement of an edge list (graphic:0-1,1-2,...)"),
    "random": (_random, "seeded random integer normals (random:<n>,<d>,<seed>)"),
    "random_graphic": (_random_graphic, "graphic arrangement of G(n, p) (random_graphic:<n>,<p>,<seed>)"),
}

NAMED_EXAMPLES = (
    "remark13",
    "x2",
    "bracelet",
    "er:-1",
    "er:0",
    "er:1",
    "d4",
    "primegap6",
    "ziegler:special",
    "ziegler:general",
)


def names() -> list[str]:
    return sorted(_BUILDERS)


def describe(name: str) -> str:
    if name not in _BUILDERS:
        raise ArrangementError(f"Unknown catalog name {name!r}; known: {', '.join(names())}")
    return _BUILDERS[name][1]


def get(name: str, params: Sequence[str] = ()) -> CatalogEntry:
    if name not in _BUILDERS:
        raise ArrangementError(f"Unknown catalog name {name!r}; known: {', '.join(names())}")
    build, provenance = _BUILDERS[name]
    arrangement = build(list(params))
    return CatalogEntry(name=name, parameters=tuple(params), arrangement=arrangement, provenance=provenance)


def parse_spec(spec: str) -> CatalogEntry:
    """`name` or `name:p1,p2,...`, e.g. `d4`, `er:-1`, `boolean:3`, `ziegler:special`."""

    name, _, rest = spec.strip().partition(":")
    params = [p.strip() for p in rest.split(",")] if rest else []
    return get(name, params)


def is_catalog_spec(text: str) -> bool:
    return text.strip().partition(":")[0] in _BUILDERS
