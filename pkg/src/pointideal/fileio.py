"""File formats: point-set JSON, result JSON, and plain merge-list files."""

from __future__ import annotations

import json
from pathlib import Path

from .bm import GroebnerResult, PointSet, RunStats
from .fields import field_from_descriptor
from .poly import Polynomial


class ParseError(ValueError):
    pass


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def parse_points(text: str, source: str = "<points>") -> PointSet:
    """Parse the point-set document.

    Expected shape::

        {"field": {"type": "rational"} | {"type": "prime", "p": ...},
         "n": N,
         "points": [["a/b", ...], ...]}
    """
    doc = _load_json(text, source)
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: top level must be an object")
    for key in ("field", "n", "points"):
        if key not in doc:
            raise ParseError(f"{source}: missing key {key!r}")
    try:
        fld = field_from_descriptor(doc["field"])
    except (ValueError, TypeError, AttributeError) as exc:
        raise ParseError(f"{source}: bad field descriptor: {exc}") from exc
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"{source}: 'n' must be a positive integer")
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise ParseError(f"{source}: 'points' must be a non-empty list")
    points = []
    for r, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"{source}: point {r} is not a list of {n} coordinates")
        coords = []
        for c, cell in enumerate(row):
            try:
                coords.append(fld.parse(str(cell)))
            except ValueError as exc:
                raise ParseError(
                    f"{source}: point {r}, coordinate {c}: {exc}"
                ) from exc
        points.append(tuple(coords))
    return PointSet(field=fld, n=n, points=tuple(points))


def load_points(path) -> PointSet:
    path = Path(path)
    return parse_points(path.read_text(), str(path))


def serialize_points(points: PointSet) -> str:
    doc = {
        "field": points.field.to_descriptor(),
        "n": points.n,
        "points": [[points.field.format(x) for x in p] for p in points.points],
    }
    return json.dumps(doc, indent=2)


def serialize_result(result: GroebnerResult) -> str:
    """Result document: B ascending, G as descending [coeff, exponents] terms."""
    fld = result.field
    doc = {
        "order": str(result.spec),
        "field": fld.to_descriptor(),
        "n": result.spec.n,
        "B": [list(b) for b in result.B],
        "G": [
            [[fld.format(c), list(m)] for c, m in g.terms] for g in result.G
        ],
        "stats": result.stats.to_dict(),
    }
    return json.dumps(doc, indent=2)


def parse_result(text: str, spec, source: str = "<result>") -> GroebnerResult:
    """Round-trip parse of a result document produced by serialize_result."""
    doc = _load_json(text, source)
    fld = field_from_descriptor(doc["field"])
    B = [tuple(b) for b in doc["B"]]
    G = [
        Polynomial([(fld.parse(str(c)), tuple(m)) for c, m in terms])
        for terms in doc["G"]
    ]
    stats = RunStats(**{k: v for k, v in doc.get("stats", {}).items()})
    return GroebnerResult(G=G, B=B, stats=stats, spec=spec, field=fld)


def parse_merge_list(text: str, source: str = "<list>"):
    """One tuple per line, entries comma-separated integers."""
    items = []
    for ln, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            items.append(tuple(int(x.strip()) for x in line.split(",")))
        except ValueError as exc:
            raise ParseError(f"{source}: line {ln}: {exc}") from exc
    if items and any(len(it) != len(items[0]) for it in items):
        raise ParseError(f"{source}: rows of differing arity")
    return items


def load_merge_list(path):
    path = Path(path)
    return parse_merge_list(path.read_text(), str(path))
