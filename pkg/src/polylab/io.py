"""JSON (de)serialization of fields, points, arrangements, cubics and reports."""
from __future__ import annotations

import json

from .arrangement import LINES, POINTS, Arrangement
from .projective import ProjLine, ProjPoint, ProjTransform
from .scalar import Field


def coords_to_json(x, field: Field) -> list:
    return [field.format(c) for c in x.coords]


def arrangement_to_json(arr: Arrangement) -> dict:
    return {"kind": arr.kind, "field": arr.field.to_json(),
            "members": [coords_to_json(m, arr.field) for m in arr.members],
            "labels": list(arr.labels)}


def arrangement_from_json(data: dict) -> Arrangement:
    field = Field.from_json(data["field"])
    cls = ProjLine if data["kind"] == LINES else ProjPoint
    members = tuple(cls(tuple(field.parse(s) for s in m)) for m in data["members"])
    return Arrangement(data["kind"], members, field, tuple(data.get("labels") or range(len(members))))


def point_to_json(p, field: Field | None = None) -> list:
    return coords_to_json(p, field or p.field)


def point_from_json(data: list, field: Field, cls=ProjPoint):
    return cls(tuple(field.parse(s) for s in data))


def transform_to_json(g: ProjTransform) -> list:
    f = g.field
    return [[f.format(x) for x in row] for row in g.matrix]


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path, obj) -> None:
    text = dumps(obj)
    if path in (None, "-"):
        import sys
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def read_json(path):
    if path in (None, "-"):
        import sys
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


__all__ = ["arrangement_to_json", "arrangement_from_json", "dumps", "read_json", "write_json",
           "point_to_json", "point_from_json", "transform_to_json", "POINTS", "LINES"]
