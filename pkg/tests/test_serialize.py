import math

import pytest

from zoned import SpaceSpec, build_space, fixture, iterate_double_zone
from zoned.serialize import (
    JobSpec,
    decode_scalar,
    encode_scalar,
    regions_from_dict,
    resolve_sites,
    result_to_dict,
    space_spec_from_dict,
    space_spec_to_dict,
)


def test_scalar_round_trip():
    for v in (0, -7, 2.5, math.inf, -math.inf):
        assert decode_scalar(encode_scalar(v)) == v
    assert encode_scalar(math.inf) == "inf"
    assert encode_scalar(-math.inf) == "-inf"
    with pytest.raises(ValueError):
        decode_scalar("fast")


def test_matrix_spec_round_trip_with_infinities():
    spec = SpaceSpec("finite-matrix", {
        "entries": [[0, math.inf], [-math.inf, 0]],
    })
    doc = space_spec_to_dict(spec)
    assert doc["params"]["entries"] == [[0, "inf"], ["-inf", 0]]
    back = space_spec_from_dict(doc)
    assert back.params["entries"] == [[0, math.inf], [-math.inf, 0]]
    space = build_space(back)
    assert space.dist(0, 1) == math.inf


def test_digraph_spec_round_trip():
    spec = SpaceSpec("digraph", {"n": 3, "arcs": [[0, 1, 1.5], [1, 2, math.inf]]})
    back = space_spec_from_dict(space_spec_to_dict(spec))
    assert back.params["arcs"][1][2] == math.inf


def test_sites_from_indices():
    fx = fixture("three-point")
    sites = resolve_sites(fx.space, {"sites": [[0], [2]]})
    assert sites == fx.sites


def test_sites_from_grid_loci():
    fx = fixture("maxnorm")
    sites = resolve_sites(fx.space, [
        {"loci": [{"type": "point", "x": 0, "y": 3}]},
        {"loci": [{"type": "point", "x": 0, "y": -3}]},
    ])
    assert sites == fx.sites


def test_sites_from_circle_loci():
    fx = fixture("rings")
    sites = resolve_sites(fx.space, [
        {"loci": [{"type": "circles", "radii": [1, 7, 13, 19, 25]}]},
        {"loci": [{"type": "circles", "radii": [4, 10, 16, 22]}]},
    ])
    assert sites == fx.sites


def test_sites_from_coord_loci():
    fx = fixture("interval", step="0.5")
    sites = resolve_sites(fx.space, [
        {"loci": [{"type": "coord", "value": -3}]},
        {"loci": [{"type": "coord", "value": 3}]},
    ])
    assert sites == fx.sites


def test_locus_kind_checked():
    fx = fixture("three-point")
    with pytest.raises(ValueError):
        resolve_sites(fx.space, [{"loci": [{"type": "point", "x": 0, "y": 0}]}, [2]])


def test_job_spec_round_trip():
    job = JobSpec(
        SpaceSpec("two-value", {"n": 5, "a": 1, "b": 2}),
        [[0], [4]],
        {"mode": "double", "direction": "ascending"},
    )
    back = JobSpec.from_dict(job.to_dict())
    assert back == job
    ref = JobSpec("space.json", [[0], [1]], {})
    assert JobSpec.from_dict(ref.to_dict()) == ref


def test_result_document_round_trip():
    fx = fixture("interval", step="0.5")
    result = iterate_double_zone(fx.space, fx.sites)
    doc = result_to_dict(fx.space, fx.sites, result)
    assert doc["kind"] == "double-zone"
    assert doc["steps"] <= doc["bound"]
    assert regions_from_dict(doc) == result.regions
    assert "grid" not in doc  # 1-d space carries no grid block


def test_result_document_carries_grid_meta():
    fx = fixture("rings")
    result = iterate_double_zone(fx.space, fx.sites)
    doc = result_to_dict(fx.space, fx.sites, result)
    assert doc["grid"]["norm"] == "l2"
    assert doc["grid"]["ix"] == [-17, 17]
