"""Group-definition files and machine renderings of tables and statistics.

Group files are UTF-8 JSON, 0-based throughout, in one of two shapes:

    {"name": str, "degree": int, "generators": [[int, ...], ...]}
    {"name": str, "cayley": [[int, ...], ...]}

The same format is the corpus interchange format. All machine output keeps
exact values: rationals as "num/den" strings, cyclotomic values as integer
coefficient vectors over the power basis of the table conductor. Decimal
renderings are advisory for human reading and are never parsed back.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .caps import Caps
from .chartab import CharacterTable
from .cyclotomic import Cyclotomic
from .errors import ParseError
from .groups import FiniteGroup, group_from_generators, group_from_table
from .zerostats import zero_stats


def frac_str(q: Fraction) -> str:
    """Canonical exact rendering: always "num/den", even for integers
    (anz(A5) renders as "1/1")."""
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# group definition files

def parse_group_json(
    text: str,
    *,
    source: str = "<string>",
    default_name: Optional[str] = None,
    caps: Optional[Caps] = None,
) -> FiniteGroup:
    """Build a validated group from a JSON document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(source, f"invalid JSON at byte {exc.pos}: {exc.msg}")
    if not isinstance(data, dict):
        raise ParseError(source, "top-level value must be an object")

    name = data.get("name", default_name)
    if name is not None and not isinstance(name, str):
        raise ParseError(source, "name must be a string")

    has_gens = "generators" in data
    has_cayley = "cayley" in data
    if has_gens == has_cayley:
        raise ParseError(
            source, 'exactly one of "generators" and "cayley" is required'
        )

    if has_gens:
        gens = data["generators"]
        if not isinstance(gens, list) or not all(
            isinstance(g, list) and all(isinstance(x, int) for x in g) for g in gens
        ):
            raise ParseError(source, "generators must be lists of integers")
        degree = data.get("degree")
        if degree is not None and not isinstance(degree, int):
            raise ParseError(source, "degree must be an integer")
        if degree is None and not gens:
            raise ParseError(source, "empty generator list needs an explicit degree")
        if degree is not None and any(len(g) != degree for g in gens):
            raise ParseError(
                source, f"generators must all have length degree = {degree}"
            )
        try:
            return group_from_generators(gens, degree=degree, name=name, caps=caps)
        except ValueError as exc:
            raise ParseError(source, str(exc))

    cayley = data["cayley"]
    if not isinstance(cayley, list) or not all(
        isinstance(row, list) and all(isinstance(x, int) for x in row)
        for row in cayley
    ):
        raise ParseError(source, "cayley must be a square table of integers")
    return group_from_table(cayley, name=name)


def load_group_file(
    path: Union[str, Path],
    *,
    caps: Optional[Caps] = None,
) -> FiniteGroup:
    """Read one group definition; "-" reads stdin, name defaults to the
    filename stem."""
    if str(path) == "-":
        return parse_group_json(
            sys.stdin.read(), source="<stdin>", default_name="stdin", caps=caps
        )
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(p), str(exc))
    return parse_group_json(
        text, source=str(p), default_name=p.stem, caps=caps
    )


def group_to_dict(G: FiniteGroup) -> dict:
    """Round-trippable group definition (generators when the group carries a
    permutation realization with generators, Cayley table otherwise)."""
    if G.realization == "permutation" and G.generator_indices:
        return {
            "name": G.name,
            "degree": G.degree,
            "generators": [list(G.element(i)) for i in G.generator_indices],
        }
    n = G.order
    return {
        "name": G.name,
        "cayley": [[G.mult(i, j) for j in range(n)] for i in range(n)],
    }


def group_json_text(G: FiniteGroup) -> str:
    return json.dumps(group_to_dict(G)) + "\n"


def write_group_file(G: FiniteGroup, path: Union[str, Path]) -> None:
    Path(path).write_text(group_json_text(G), encoding="utf-8")


# ---------------------------------------------------------------------------
# table and statistics renderings

def _decimal_str(z: complex) -> str:
    """Advisory decimal rendering, 10 significant digits."""
    re = f"{z.real:.10g}"
    if abs(z.imag) < 1e-12:
        return re
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{abs(z.imag):.10g}i"


def value_to_dict(v: Cyclotomic) -> dict:
    """Exact cyclotomic payload: conductor + integer coefficients on the
    power basis, plus an advisory decimal."""
    coeffs = []
    for c in v.coeffs:
        if c.denominator != 1:
            raise AssertionError(
                f"character value has non-integral coefficient {c}"
            )
        coeffs.append(int(c))
    return {
        "conductor": v.conductor,
        "coeffs": coeffs,
        "decimal": _decimal_str(v.to_complex()),
    }


def table_to_dict(table: CharacterTable) -> dict:
    G = table.group
    return {
        "group": G.name,
        "order": G.order,
        "k": table.k,
        "conductor": table.conductor,
        "classes": [
            {
                "index": j,
                "size": size,
                "representative": rep,
                "element_order": ordr,
            }
            for j, (size, rep, ordr) in enumerate(
                zip(
                    table.class_sizes,
                    table.partition.representatives,
                    table.class_orders,
                )
            )
        ],
        "characters": [
            {
                "index": a,
                "degree": int(chi.degree),
                "values": [value_to_dict(chi.value(j)) for j in range(table.k)],
            }
            for a, chi in enumerate(table.characters)
        ],
    }


def stats_to_dict(table: CharacterTable) -> dict:
    s = zero_stats(table)
    return {
        "group": table.group.name,
        "order": table.group.order,
        "k": s.k,
        "zero_counts": list(s.zero_counts),
        "anz": frac_str(s.anz),
        "sigma": frac_str(s.sigma),
        "sigma_prime": frac_str(s.sigma_prime),
        "m_max": s.m_max,
    }
