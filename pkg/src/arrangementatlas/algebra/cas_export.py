from __future__ import annotations

from typing import Literal, Optional

from sympy import GF, QQ, Symbol, sympify
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from arrangementatlas.algebra.vg import Generator, ideal_generators, minimal_generators
from arrangementatlas.errors import ArrangementError
from arrangementatlas.exactcore.fields import Field, PrimeField, RATIONALS
from arrangementatlas.schemas.core import Arrangement


CasFormat = Literal["plain", "m2"]


def _polynomial_ring(n: int, field: Field):
    domain = GF(field.p) if isinstance(field, PrimeField) else QQ
    names = ",".join(f"e{i + 1}" for i in range(n))
    return ring(names, domain, grlex)


def _text(poly) -> str:
    return str(poly).replace("**", "^")


def expand_generator(arr: Arrangement, generator: Generator, field: Field = RATIONALS) -> str:
    """g_S^eps = prod(e_H^eps_H) - prod(e_H^-eps_H) with e_H^+ = e_H and e_H^- = 1 - e_H, expanded."""

    R, *gens = _polynomial_ring(arr.n, field)
    support, signs = generator
    plus = R.one
    minus = R.one
    for h, s in zip(support, signs):
        e = gens[h]
        plus *= e if s > 0 else 1 - e
        minus *= 1 - e if s > 0 else e
    return _text(plus - minus)


def _generators(arr: Arrangement, k: int, minimal: bool) -> list[Generator]:
    if minimal:
        return [(g.support, g.signs) for g in minimal_generators(arr, k)]
    return ideal_generators(arr, k)


def export_presentation(
    arr: Arrangement,
    k: int,
    fmt: CasFormat = "plain",
    field: Field = RATIONALS,
    *,
    minimal: bool = False,
    compare_with: Optional[int] = None,
) -> str:
    """
    Presentation of R / I_k for a computer-algebra system.

    `plain` is the line grammar documented in docs/03_cas_export.md. `m2` is a Macaulay2 session;
    with `compare_with=r` it also builds I_r and prints whether the two ideals agree.
    `minimal=True` lists only circuit-supported generators (same ideal, fewer lines).
    """

    if fmt not in ("plain", "m2"):
        raise ArrangementError(f"Unknown CAS format {fmt!r}")
    variables = [f"e{i + 1}" for i in range(arr.n)]
    ideals: list[tuple[int, list[str]]] = []
    for level in [k] + ([compare_with] if compare_with is not None and compare_with != k else []):
        ideals.append((level, [expand_generator(arr, g, field) for g in _generators(arr, level, minimal)]))

    if fmt == "plain":
        lines = [
            "field " + ("QQ" if not isinstance(field, PrimeField) else f"ZZ/{field.p}"),
            "variables " + ", ".join(variables),
        ]
        lines += [f"relation {v}^2 - {v}" for v in variables]
        for level, polys in ideals:
            lines.append(f"ideal I{level} generators {len(polys)}")
            lines += [f"generator {p}" for p in polys]
        return "\n".join(lines) + "\n"

    coefficient_ring = "QQ" if not isinstance(field, PrimeField) else f"ZZ/{field.p}"
    lines = [
        f"S = {coefficient_ring}[{', '.join(variables)}];",
        "R = S / ideal(" + ", ".join(f"{v}^2 - {v}" for v in variables) + ");",
    ]
    for level, polys in ideals:
        body = ", ".join(polys) if polys else "0_R"
        lines.append(f"I{level} = ideal({body});")
    if len(ideals) == 2:
        lines.append(f"print(I{ideals[0][0]} == I{ideals[1][0]});")
    return "\n".join(lines) + "\n"


def parse_plain(text: str) -> dict[str, object]:
    """Read back the `plain` grammar: field, variables, relations and generator lists per ideal."""

    out: dict[str, object] = {"field": None, "variables": [], "relations": [], "ideals": {}}
    current: Optional[str] = None
    for line in text.splitlines():
        if not line.strip():
            continue
        keyword, _, rest = line.partition(" ")
        if keyword == "field":
            out["field"] = rest
        elif keyword == "variables":
            out["variables"] = [v.strip() for v in rest.split(",") if v.strip()]
        elif keyword == "relation":
            out["relations"].append(rest)  # type: ignore[union-attr]
        elif keyword == "ideal":
            current = rest.split()[0]
            out["ideals"][current] = []  # type: ignore[index]
        elif keyword == "generator" and current is not None:
            out["ideals"][current].append(rest)  # type: ignore[index]
        else:
            raise ArrangementError(f"Unrecognized CAS line: {line!r}")
    return out


def sympy_generators(text: str, name: str) -> list:
    """Generators of ideal `name` from a plain export, as sympy expressions."""

    parsed = parse_plain(text)
    symbols = {v: Symbol(v) for v in parsed["variables"]}  # type: ignore[union-attr]
    return [sympify(g.replace("^", "**"), locals=symbols) for g in parsed["ideals"][name]]  # type: ignore[index]
