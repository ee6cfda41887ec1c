#!/usr/bin/env python3
"""Dominance regions on a three-point line, and why zone diagrams are not
unique in general.

The space is {-1, 0, 1} with the usual distance, one site at each end.
A zone diagram assigns each site group the set of points at least as close
to it as to the other group's whole region, simultaneously for both groups.
"""

from zoned import (
    PointSet,
    brute_force_fixed_points,
    dominance_region,
    dominance_tuple,
    fixture,
    uniqueness_check,
    verify_zone,
    zone_order2,
)

fx = fixture("three-point")
space, sites = fx.space, fx.sites
names = {0: "-1", 1: "0", 2: "1"}


def show(ps):
    return "{" + ", ".join(names[i] for i in ps) + "}"


print("space: {-1, 0, 1}, sites P1={-1}, P2={1}\n")

# A single dominance region: which points side with P1 against {0, 1}?
p1 = PointSet.from_indices([0], 3)
rival = PointSet.from_indices([1, 2], 3)
print("dom(P1, {0,1}) =", show(dominance_region(space, p1, rival)))

# The tuple update applies that to both components at once.
updated = dominance_tuple(space, sites, sites)
print("one update of (P1, P2):", tuple(show(c) for c in updated))
print("a second update returns to the sites:",
      tuple(show(c) for c in dominance_tuple(space, sites, updated)))
print("so (P1, P2) is fixed under the SQUARED update without being a zone diagram.\n")

# Exhaustive enumeration finds every genuine zone diagram.
diagrams = brute_force_fixed_points(space, sites, "dom")
print(f"brute force finds {len(diagrams)} zone diagrams:")
for d in diagrams:
    ok, _ = verify_zone(space, sites, d)
    print("  ", tuple(show(c) for c in d), "verified:", ok)

# The one-sided constructions reach them directly.
print("\nvariant R (grow from P1):",
      tuple(show(c) for c in zone_order2(space, sites[0], sites[1], "R").regions))
print("variant S (shrink from X):",
      tuple(show(c) for c in zone_order2(space, sites[0], sites[1], "S").regions))

# Nudging the middle point restores uniqueness.
print("\nreplace 0 by 0.5 and everything collapses to one diagram:")
fx2 = fixture("a-point", a=0.5)
report = uniqueness_check(fx2.space, fx2.sites, "with-brute-force")
print("  uniqueness conditions:", report.conditions())
print("  zone diagrams found:", report.zone_count)
print("  the diagram:", [sorted(c) for c in report.minimal], "(point indices)")
