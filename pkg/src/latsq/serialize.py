"""Interchange formats.

JSON documents:

* square:      ``{"order": n, "rows": [[...], ...]}`` (rows outer, columns inner)
* transversal: ``{"cols": [...]}``
* family:      ``{"disjoint": bool, "transversals": [{"cols": [...]}, ...]}``
* STS:         ``{"points": n, "triples": [[a, b, c], ...]}`` in canonical order

Text grids are the human-facing form: n lines of n whitespace-separated
integers, blank lines ignored.

Malformed documents raise ``ValueError``; content that parses but violates a
domain invariant raises the corresponding error from :mod:`latsq.errors`.
"""

from __future__ import annotations

from typing import Any

from .core import LatinSquare, SteinerTripleSystem, Transversal, TransversalFamily


def _require_keys(obj: Any, keys: tuple[str, ...], what: str) -> None:
    if not isinstance(obj, dict):
        raise ValueError(f"{what}: expected a JSON object, got {type(obj).__name__}")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ValueError(f"{what}: missing keys {missing}")


def square_to_json(square: LatinSquare) -> dict:
    return {"order": square.order, "rows": [list(row) for row in square.grid]}


def square_from_json(obj: Any) -> LatinSquare:
    _require_keys(obj, ("order", "rows"), "square")
    square = LatinSquare(tuple(tuple(row) for row in obj["rows"]))
    if square.order != obj["order"]:
        raise ValueError(f"square: order field {obj['order']} != {square.order} rows")
    return square


def square_to_text(square: LatinSquare) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in square.grid) + "\n"


def square_from_text(text: str) -> LatinSquare:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    try:
        grid = tuple(tuple(int(v) for v in row) for row in rows)
    except ValueError as exc:
        raise ValueError(f"text grid: {exc}") from None
    return LatinSquare(grid)


def transversal_to_json(t: Transversal) -> dict:
    return {"cols": list(t.cols)}


def transversal_from_json(obj: Any) -> Transversal:
    _require_keys(obj, ("cols",), "transversal")
    return Transversal(tuple(obj["cols"]))


def family_to_json(family: TransversalFamily) -> dict:
    return {
        "disjoint": family.disjoint,
        "transversals": [transversal_to_json(t) for t in family],
    }


def family_from_json(obj: Any) -> TransversalFamily:
    _require_keys(obj, ("disjoint", "transversals"), "family")
    members = tuple(transversal_from_json(t) for t in obj["transversals"])
    return TransversalFamily(members, disjoint=bool(obj["disjoint"]))


def sts_to_json(sts: SteinerTripleSystem) -> dict:
    return {"points": sts.points, "triples": [list(t) for t in sts.triples]}


def sts_from_json(obj: Any) -> SteinerTripleSystem:
    _require_keys(obj, ("points", "triples"), "sts")
    return SteinerTripleSystem(obj["points"], tuple(tuple(t) for t in obj["triples"]))
