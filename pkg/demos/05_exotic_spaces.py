#!/usr/bin/env python3
"""Spaces where the distance is barely a distance at all.

The only axiom in force is d(x, x) <= d(x, y): no symmetry, no positivity,
no triangle inequality.  That is already enough for the whole machinery,
and it admits some striking examples.
"""

import random

from zoned import (
    RegionTuple,
    brute_force_fixed_points,
    digraph_space,
    fixture,
    isolated_union_space,
    two_value_space,
    two_value_zone_family_check,
    validate_mspace,
    verify_zone,
)

# --- two-value spaces: every covering partition is a zone diagram -------------
print("two-value space: d(x,x)=1, d(x,y)=2 on 9 points")
space = two_value_space(9, 1, 2)
print("  passes the axiom check:", validate_mspace(space)[0],
      " (not a metric: self-distance 1)")
sites = RegionTuple.of_indices([[0], [4], [8]], 9)
print("  100 random disjoint covering tuples, all zone diagrams:",
      two_value_zone_family_check(space, sites, 100, seed=2))

# --- isolated components ------------------------------------------------------
print("\nthree isolated segments (infinite distance across components):")
fx = fixture("isolated")
ok, _ = verify_zone(fx.space, fx.sites, fx.expected)
print("  the expected region tuple verifies exactly:", ok)
print("  region sizes:", [len(c) for c in fx.expected])

# --- directed graph distances --------------------------------------------------
print("\ndirected graph with shortest-path distances (asymmetric, maybe infinite):")
arcs = []
for u, v, w in [(0, 1, 1), (1, 2, 1), (0, 2, 1), (2, 3, 2),
                (3, 4, 2), (4, 5, 1), (5, 6, 3), (6, 7, 1)]:
    arcs += [(u, v, w), (v, u, w)]
space = digraph_space(8, arcs)
sites = RegionTuple.of_indices([[2, 3], [3, 6]], 8)
for diagram in brute_force_fixed_points(space, sites, "dom"):
    print("  zone diagram:", [sorted(c) for c in diagram])
print("  (the bridge vertex 3 belongs to both site groups, hence to both regions)")

# --- a deliberately weird asymmetric space -------------------------------------
print("\nrandom spaces with negative and infinite entries still behave:")
rng = random.Random(7)
from zoned import random_mspace, random_site_tuple, zone_order2

hits = 0
for _ in range(200):
    sp = random_mspace(rng, rng.randint(2, 9))
    st = random_site_tuple(rng, sp.size, 2)
    result = zone_order2(sp, st[0], st[1], "R")
    ok, _ = verify_zone(sp, st, result.regions)
    hits += ok
print(f"  {hits}/200 constructed diagrams verified (expected 200)")
