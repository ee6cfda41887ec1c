import math
import random

import numpy as np
import pytest

from zoned import (
    MSpace,
    PointSet,
    RegionTuple,
    SpaceSpec,
    build_space,
    digraph_space,
    dist_point_set,
    dominance_region,
    fixture,
    grid2d_space,
    isolated_union_space,
    line_grid_space,
    line_space,
    random_mspace,
    two_value_space,
    two_value_zone_family_check,
    validate_mspace,
    verify_zone,
    verify_double_zone,
)
from zoned.spaces import Grid2D


def test_all_constructors_pass_validation():
    spaces = [
        line_space([-1, 0, 1]),
        line_space([-1.0, 0.5, 1.0]),
        line_grid_space(-3, 3, "0.5"),
        grid2d_space(-4, 4, -4, 4, 1, "l1"),
        grid2d_space(-4, 4, -4, 4, 1, "l2"),
        grid2d_space(-4, 4, -4, 4, 1, "linf"),
        digraph_space(4, [(0, 1, 2.0), (1, 2, 1.0), (3, 0, 4.0)]),
        isolated_union_space([[(0, 0), (1, 0)], [(5, 5), (5, 6)]]),
        two_value_space(6, 1, 2),
        two_value_space(4, -1.5, 0.5),
    ]
    for space in spaces:
        ok, violations = validate_mspace(space)
        assert ok, violations


def test_two_value_space_not_a_metric():
    space = two_value_space(5, 1, 2)
    assert space.dist(0, 0) == 1  # nonzero self-distance
    assert space.dist(0, 1) == 2


def test_isolated_union_cross_component_infinite():
    space = isolated_union_space([[(0, 0), (1, 0)], [(5, 5)]])
    assert space.dist(0, 2) == math.inf
    assert space.dist(0, 1) == 1  # squared euclidean along the segment


def test_isolated_union_shared_point_bridges():
    space = isolated_union_space([[(0, 0), (1, 0)], [(1, 0), (1, 1)]])
    assert space.size == 3
    assert space.dist(0, 2) == math.inf  # still no single shared component


def test_chebyshev_grid_distances():
    space = grid2d_space(-5, 5, -5, 5, 1, "linf")
    grid: Grid2D = space.geometry
    a = grid.cell_index(0, 0)
    b = grid.cell_index(3, -2)
    assert space.dist(a, b) == 3


def test_manhattan_grid_distances():
    space = grid2d_space(-2, 2, -2, 2, 1, "l1")
    grid: Grid2D = space.geometry
    assert space.dist(grid.cell_index(0, 0), grid.cell_index(2, -1)) == 3


def test_digraph_asymmetric_with_unreachable():
    space = digraph_space(3, [(0, 1, 1.0), (1, 2, 1.5)])
    assert space.dist(0, 2) == 2.5
    assert space.dist(2, 0) == math.inf
    assert space.dist(1, 1) == 0
    ok, _ = validate_mspace(space)
    assert ok


def test_digraph_rejects_negative_arcs():
    with pytest.raises(ValueError):
        digraph_space(2, [(0, 1, -1.0)])


def test_grid_step_must_divide_extent():
    with pytest.raises(ValueError):
        grid2d_space(0, 1, 0, 1, "0.3")
    with pytest.raises(ValueError):
        line_grid_space(-3, 3, "0.7")
    with pytest.raises(ValueError):
        line_grid_space(-3, 3, 0)


def test_two_value_requires_a_below_b():
    with pytest.raises(ValueError):
        two_value_space(4, 2, 2)


def test_squared_euclidean_agrees_with_float_ordering():
    rng = random.Random(818181)
    space = grid2d_space(-6, 6, -6, 6, 1, "l2")
    grid: Grid2D = space.geometry
    coords = np.stack([grid.sx, grid.sy], axis=1).astype(float)
    for _ in range(1000):
        x, y, z = (rng.randrange(space.size) for _ in range(3))
        exact = space.dist(x, y) <= space.dist(x, z)
        floats = (
            np.hypot(*(coords[x] - coords[y])) <= np.hypot(*(coords[x] - coords[z]))
        )
        assert exact == floats


# ---------------------------------------------------------------------------
# space specs
# ---------------------------------------------------------------------------


def test_build_space_dispatch():
    spec = SpaceSpec("two-value", {"n": 4, "a": 1, "b": 3})
    assert build_space(spec).size == 4
    spec = SpaceSpec("line-points", {"start": -3, "stop": 3, "step": "1/2"})
    assert build_space(spec).size == 13
    spec = SpaceSpec("grid-2d", {"xmin": -2, "xmax": 2, "ymin": -1, "ymax": 1,
                                 "step": 1, "norm": "linf"})
    assert build_space(spec).size == 15


def test_space_spec_validation():
    with pytest.raises(ValueError):
        SpaceSpec("hyperbolic", {})
    with pytest.raises(ValueError):
        build_space(SpaceSpec("two-value", {"n": 4, "a": 3, "b": 1}))
    with pytest.raises(ValueError):
        build_space(SpaceSpec("two-value", {"n": 4}))


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


def test_three_point_fixture_expected_verify():
    fx = fixture("three-point")
    for expected in fx.expected:
        ok, _ = verify_zone(fx.space, fx.sites, expected)
        assert ok


def test_isolated_fixture_expected_verifies_exactly():
    fx = fixture("isolated")
    ok, diffs = verify_zone(fx.space, fx.sites, fx.expected)
    assert ok, [sorted(d) for d in diffs]


def test_interval_fixture_expected_is_double_zone():
    fx = fixture("interval", step="0.5")
    ok, _ = verify_double_zone(fx.space, fx.sites, fx.expected.exact_tuple())
    assert ok


def test_rings_fixture_sites_on_circles():
    fx = fixture("rings")
    grid: Grid2D = fx.space.geometry
    r2 = grid.radial2()
    for idx in fx.sites[0]:
        assert any(abs(math.sqrt(r2[idx]) - (6 * k + 1)) <= 0.5 for k in range(5))
    for idx in fx.sites[1]:
        assert any(abs(math.sqrt(r2[idx]) - (6 * k + 4)) <= 0.5 for k in range(5))


def test_maxnorm_fixture_sites_are_cells():
    fx = fixture("maxnorm")
    grid: Grid2D = fx.space.geometry
    assert sorted(fx.sites[0]) == [grid.cell_index(0, 3)]
    assert sorted(fx.sites[1]) == [grid.cell_index(0, -3)]


def test_unknown_fixture():
    with pytest.raises(ValueError):
        fixture("klein-bottle")


# ---------------------------------------------------------------------------
# two-value family
# ---------------------------------------------------------------------------


def test_two_value_family_order_two():
    space = two_value_space(6, 1, 2)
    sites = RegionTuple.of_indices([[0], [3]], 6)
    assert two_value_zone_family_check(space, sites, 100, seed=11)


def test_two_value_family_order_three():
    space = two_value_space(9, 0, 7)
    sites = RegionTuple.of_indices([[0], [4], [8]], 9)
    assert two_value_zone_family_check(space, sites, 100, seed=12)


def test_two_value_family_rejects_other_spaces():
    with pytest.raises(ValueError):
        two_value_zone_family_check(
            line_space([0, 1, 2]), RegionTuple.of_indices([[0], [2]], 3), 5, seed=1
        )


def test_three_cluster_digraph_diagrams():
    # two clusters joined through a shared bridge site; the bridge belongs to
    # both site groups, so it shows up in both regions of either diagram
    # (expected tuples frozen from the exhaustive enumeration below)
    arcs = []
    for u, v, w in [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 2),
                    (3, 4, 2), (4, 5, 1), (5, 6, 3), (6, 7, 1)]:
        arcs += [(u, v, w), (v, u, w)]
    from zoned import brute_force_fixed_points, digraph_space

    space = digraph_space(8, arcs)
    sites = RegionTuple.of_indices([[2, 3], [3, 6]], 8)
    found = brute_force_fixed_points(space, sites, "dom")
    assert found == [
        RegionTuple.of_indices([[0, 1, 2, 3], [3, 4, 5, 6, 7]], 8),
        RegionTuple.of_indices([[0, 1, 2, 3, 4, 5], [3, 6, 7]], 8),
    ]
    for diagram in found:
        ok, _ = verify_zone(space, sites, diagram)
        assert ok


def test_random_mspace_always_valid():
    rng = random.Random(5)
    for _ in range(50):
        space = random_mspace(rng, rng.randint(1, 12))
        ok, _ = validate_mspace(space)
        assert ok
