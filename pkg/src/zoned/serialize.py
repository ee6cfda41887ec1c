"""Canonical JSON encodings for spaces, sites, jobs, and results.

JSON has no infinities, so the scalar values "inf" and "-inf" are encoded
as those strings.  Point sets serialize as sorted index arrays; grid spaces
carry their geometry so indices stay geometrically decodable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .core import MSpace, PointSet, RegionTuple
from .engine import ZoneResult
from .spaces import Grid2D, Line1D, LinePoints, SpaceSpec, build_space


def encode_scalar(v):
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return v


def decode_scalar(v):
    if v == "inf":
        return math.inf
    if v == "-inf":
        return -math.inf
    if isinstance(v, str):
        raise ValueError(f"bad scalar {v!r}")
    return v


def _map_scalars(obj, fn):
    if isinstance(obj, list):
        return [_map_scalars(x, fn) for x in obj]
    return fn(obj)


def space_spec_to_dict(spec: SpaceSpec) -> dict:
    params = dict(spec.params)
    if spec.kind == "finite-matrix":
        params["entries"] = _map_scalars(params["entries"], encode_scalar)
    if spec.kind == "digraph":
        params["arcs"] = [[a[0], a[1], encode_scalar(a[2])] for a in params["arcs"]]
    return {"kind": spec.kind, "params": params}


def space_spec_from_dict(doc: dict) -> SpaceSpec:
    if "kind" not in doc:
        raise ValueError("space document needs a 'kind' field")
    params = dict(doc.get("params", {}))
    if doc["kind"] == "finite-matrix" and "entries" in params:
        params["entries"] = _map_scalars(params["entries"], decode_scalar)
    if doc["kind"] == "digraph" and "arcs" in params:
        params["arcs"] = [[a[0], a[1], decode_scalar(a[2])] for a in params["arcs"]]
    return SpaceSpec(doc["kind"], params)


def load_space(path) -> tuple[SpaceSpec, MSpace]:
    with open(path) as fh:
        doc = json.load(fh)
    spec = space_spec_from_dict(doc)
    return spec, build_space(spec)


def _locus_cells(space: MSpace, locus: dict) -> list[int]:
    geom = space.geometry
    kind = locus.get("type")
    if kind == "point":
        if not isinstance(geom, Grid2D):
            raise ValueError("point loci need a 2-d grid space")
        return geom.point_cells(locus["x"], locus["y"])
    if kind in ("circle", "circles"):
        if not isinstance(geom, Grid2D):
            raise ValueError("circle loci need a 2-d grid space")
        radii = locus["radii"] if kind == "circles" else [locus["radius"]]
        flags = None
        for r in radii:
            cells = geom.circle_cells(r)
            flags = cells if flags is None else flags | cells
        return PointSet.from_bool(flags).indices().tolist()
    if kind == "coord":
        if not isinstance(geom, (Line1D, LinePoints)):
            raise ValueError("coord loci need a line space")
        return geom.coord_cells(locus["value"])
    raise ValueError(f"unknown locus type {kind!r}")


def resolve_sites(space: MSpace, doc) -> RegionTuple:
    """Site components given either as point-index lists or geometric loci."""
    if isinstance(doc, dict):
        doc = doc["sites"]
    components = []
    for comp in doc:
        if isinstance(comp, dict):
            indices: set[int] = set()
            for locus in comp["loci"]:
                indices.update(_locus_cells(space, locus))
            components.append(sorted(indices))
        else:
            components.append([int(i) for i in comp])
    return RegionTuple.of_indices(components, space.size)


def load_sites(path, space: MSpace) -> RegionTuple:
    with open(path) as fh:
        return resolve_sites(space, json.load(fh))


@dataclass(frozen=True)
class JobSpec:
    """A space (inline spec or file reference), sites, and command options."""

    space: SpaceSpec | str
    sites: Any
    params: dict

    def to_dict(self) -> dict:
        space = (
            {"ref": self.space}
            if isinstance(self.space, str)
            else space_spec_to_dict(self.space)
        )
        return {"space": space, "sites": self.sites, "params": self.params}

    @classmethod
    def from_dict(cls, doc: dict) -> "JobSpec":
        raw = doc["space"]
        space = raw["ref"] if "ref" in raw else space_spec_from_dict(raw)
        return cls(space, doc["sites"], dict(doc.get("params", {})))


def result_to_dict(space: MSpace, sites: RegionTuple, result: ZoneResult,
                   extra: dict | None = None) -> dict:
    doc = {
        "kind": result.kind,
        "extremal": result.extremal,
        "steps": result.trace.steps if result.trace else 0,
        "bound": result.trace.bound if result.trace else 0,
        "size": space.size,
        "components": [sorted(c) for c in result.regions],
        "sites": [sorted(c) for c in sites],
    }
    if isinstance(space.geometry, Grid2D):
        doc["grid"] = space.geometry.to_meta()
    if extra:
        doc.update(extra)
    return doc


def regions_from_dict(doc: dict, size: int | None = None) -> RegionTuple:
    size = doc["size"] if size is None else size
    return RegionTuple.of_indices(doc["components"], size)


def write_json(doc: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def read_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
