"""JSON input for polytope collections.

Accepted shapes::

    {"name": "...", "polytopes": [<polytope>, ...]}
    [<polytope>, ...]
    <polytope>

where a polytope is ``{"vertices": [[int, ...], ...]}`` or
``{"builtin": "cube" | "simplex" | "segment", "dim": int, "scale": int}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .geometry import GeometryError, LatticePolytope
from .mixed import PolytopeCollection

BUILTINS = ("cube", "simplex", "segment")


class InputError(ValueError):
    pass


def cube(dim: int, scale: int = 1) -> LatticePolytope:
    pts = [[]]
    for _ in range(dim):
        pts = [p + [x] for p in pts for x in (0, scale)]
    return LatticePolytope(pts)


def simplex(dim: int, scale: int = 1) -> LatticePolytope:
    pts = [[0] * dim]
    for i in range(dim):
        pts.append([scale if j == i else 0 for j in range(dim)])
    return LatticePolytope(pts)


def segment(dim: int, scale: int = 1) -> LatticePolytope:
    return LatticePolytope([[0] * dim, [scale] + [0] * (dim - 1)])


def builtin(name: str, dim: int, scale: int = 1) -> LatticePolytope:
    if name not in BUILTINS:
        raise InputError(f"unknown builtin {name!r}; expected one of {', '.join(BUILTINS)}")
    return {"cube": cube, "simplex": simplex, "segment": segment}[name](dim, scale)


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{where}: expected an integer, got {value!r}")
    return value


def polytope_from_json(obj: Any, where: str = "polytope") -> LatticePolytope:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected an object")
    if "builtin" in obj:
        name = obj["builtin"]
        dim = _int(obj.get("dim"), f"{where}.dim")
        scale = _int(obj.get("scale", 1), f"{where}.scale")
        if dim < 1:
            raise InputError(f"{where}.dim: must be positive")
        if scale < 0:
            raise InputError(f"{where}.scale: must be non-negative")
        if not isinstance(name, str):
            raise InputError(f"{where}.builtin: expected a string")
        try:
            return builtin(name, dim, scale)
        except InputError as exc:
            raise InputError(f"{where}.builtin: {exc}") from None
    if "vertices" not in obj:
        raise InputError(f"{where}: needs a 'vertices' or 'builtin' field")
    verts = obj["vertices"]
    if not isinstance(verts, list) or not verts:
        raise InputError(f"{where}.vertices: expected a nonempty list of points")
    points = []
    for i, p in enumerate(verts):
        if not isinstance(p, list):
            raise InputError(f"{where}.vertices[{i}]: expected a list of integers")
        points.append([_int(x, f"{where}.vertices[{i}]") for x in p])
    if len({len(p) for p in points}) != 1:
        raise InputError(f"{where}.vertices: all points must have equal length")
    try:
        return LatticePolytope(points)
    except GeometryError as exc:
        raise InputError(f"{where}.vertices: {exc}") from None


@dataclass(frozen=True)
class CollectionSpec:
    name: str
    polytopes: tuple[LatticePolytope, ...]

    def collection(self) -> PolytopeCollection:
        return PolytopeCollection(self.polytopes)

    def to_json(self) -> dict:
        return {"name": self.name, "polytopes": [P.to_json() for P in self.polytopes]}


def collection_from_json(obj: Any) -> CollectionSpec:
    name = ""
    if isinstance(obj, dict) and "polytopes" in obj:
        name = obj.get("name", "")
        if not isinstance(name, str):
            raise InputError("name: expected a string")
        items = obj["polytopes"]
        prefix = "polytopes"
    elif isinstance(obj, list):
        items, prefix = obj, ""
    elif isinstance(obj, dict):
        items, prefix = [obj], None
    else:
        raise InputError("expected a polytope, a list of polytopes or a collection object")
    if not isinstance(items, list) or not items:
        raise InputError("polytopes: expected a nonempty list")
    polys = []
    for i, item in enumerate(items):
        where = "polytope" if prefix is None else f"{prefix}[{i}]"
        polys.append(polytope_from_json(item, where))
    dims = {P.ambient_dimension for P in polys}
    if len(dims) != 1:
        raise InputError(f"polytopes: dimension mismatch, ambient dimensions {sorted(dims)}")
    return CollectionSpec(name, tuple(polys))


def loads(text: str) -> CollectionSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    return collection_from_json(obj)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))
